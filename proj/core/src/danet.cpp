// Copyright (c) 2026 The lfdanet-toolkit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lfda/danet.hpp"

#include <algorithm>
#include <cmath>

#include "lfda/error.hpp"

namespace lfda {

namespace {

std::string group_prefix(std::size_t g) { return "group" + std::to_string(g) + "."; }

std::vector<double> mlp2(const nn::LinearRef& fc1, const nn::LinearRef& fc2, std::span<const double> x,
                         double slope) {
  std::vector<double> h = nn::linear(fc1, x);
  nn::leaky_inplace(h, slope);
  return nn::linear(fc2, h);
}

std::vector<double> channel_attention(const DegradationRepr& v_dg, const DaBlockRef& ref) {
  std::vector<double> ca = mlp2(ref.ca_fc1, ref.ca_fc2, v_dg.v, ref.slope);
  for (double& a : ca) a = nn::sigmoid(a);
  return ca;
}

// Gradients of y = fc2(leaky(fc1(x))) given dy; accumulates dx.
void mlp2_backward(const nn::LinearRef& fc1, const nn::LinearRef& fc2, std::span<const double> x,
                   std::span<const double> dy, double slope, std::span<double> dx, const std::string& name1,
                   const std::string& name2, std::map<std::string, std::vector<double>>& grads) {
  std::vector<double> z = nn::linear(fc1, x);
  std::vector<double> h(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) h[i] = nn::leaky(z[i], slope);

  std::vector<double>& dw2 = grads[name2 + ".weight"];
  std::vector<double>& db2 = grads[name2 + ".bias"];
  dw2.assign(fc2.out * fc2.in, 0.0);
  db2.assign(dy.begin(), dy.end());
  std::vector<double> dz(fc2.in, 0.0);
  for (std::size_t o = 0; o < fc2.out; ++o) {
    for (std::size_t i = 0; i < fc2.in; ++i) {
      dw2[o * fc2.in + i] = dy[o] * h[i];
      dz[i] += fc2.weight[o * fc2.in + i] * dy[o];
    }
  }
  for (std::size_t i = 0; i < dz.size(); ++i) {
    if (z[i] < 0.0) dz[i] *= slope;
  }

  std::vector<double>& dw1 = grads[name1 + ".weight"];
  std::vector<double>& db1 = grads[name1 + ".bias"];
  dw1.assign(fc1.out * fc1.in, 0.0);
  db1 = dz;
  for (std::size_t o = 0; o < fc1.out; ++o) {
    for (std::size_t i = 0; i < fc1.in; ++i) {
      dw1[o * fc1.in + i] = dz[o] * x[i];
      dx[i] += fc1.weight[o * fc1.in + i] * dz[o];
    }
  }
}

void check_feat(const Tensor4& feat, const DaBlockRef& ref) {
  const std::size_t C = ref.conv1x1.shape.c;
  if (feat.shape().c != C || ref.conv1x1.shape.n != C) {
    throw InvalidArgument("DA-Block expects " + std::to_string(C) + " feature channels, got " +
                          std::to_string(feat.shape().c));
  }
  if (ref.kgen_fc2.out != C * ref.k * ref.k || ref.ca_fc2.out != C) {
    throw InvalidArgument("DA-Block generator widths do not match the channel count");
  }
}

Tensor4 activated_conv(const Tensor4& x, const nn::ConvRef& conv, std::size_t pad_h, std::size_t pad_w,
                       double slope, std::size_t threads) {
  Tensor4 y = nn::conv2d(x, conv, pad_h, pad_w, threads);
  nn::leaky_inplace(y.values(), slope);
  return y;
}

}  // namespace

DegradationRepr kpe_forward(double sigma_b, double noise_level, const NetParams& params) {
  if (!(noise_level >= 0.0)) throw InvalidArgument("noise_level must be ≥ 0");
  const Kernel21 kernel = gaussian_kernel(sigma_b);
  const NetConfig& cfg = params.config();
  std::vector<double> x(kernel.weights.begin(), kernel.weights.end());
  const std::size_t layers = cfg.kpe_widths.size() - 1;
  for (std::size_t i = 1; i <= layers; ++i) {
    x = nn::linear(params.linear("kpe.fc" + std::to_string(i)), x);
    if (i < layers) nn::leaky_inplace(x, cfg.leaky_slope);
  }
  DegradationRepr repr;
  std::copy(x.begin(), x.end(), repr.v.begin());
  repr.v[15] = noise_level / DegradationRepr::kNoiseScale;
  return repr;
}

DaBlockRef da_block_ref(const NetParams& params, std::size_t group) {
  const std::string p = group_prefix(group) + "dablock.";
  return {params.linear(p + "kgen_fc1"), params.linear(p + "kgen_fc2"), params.conv(p + "conv1x1"),
          params.linear(p + "ca_fc1"),   params.linear(p + "ca_fc2"),   params.config().dak,
          params.config().leaky_slope};
}

std::vector<double> da_block_kernels(const DegradationRepr& v_dg, const DaBlockRef& ref) {
  return mlp2(ref.kgen_fc1, ref.kgen_fc2, v_dg.v, ref.slope);
}

Tensor4 da_block_forward(const Tensor4& feat, const DegradationRepr& v_dg, const DaBlockRef& ref,
                         std::size_t threads) {
  check_feat(feat, ref);
  const std::vector<double> kernels = da_block_kernels(v_dg, ref);
  const Tensor4 spa = nn::conv2d(nn::depthwise_conv_reflect(feat, kernels, ref.k), ref.conv1x1, 0, 0, threads);
  const std::vector<double> ca = channel_attention(v_dg, ref);

  const Shape4 s = feat.shape();
  Tensor4 out(s);
  for (std::size_t n = 0; n < s.n; ++n) {
    for (std::size_t c = 0; c < s.c; ++c) {
      const auto f = feat.plane(n, c);
      const auto sp = spa.plane(n, c);
      auto o = out.plane(n, c);
      for (std::size_t i = 0; i < o.size(); ++i) o[i] = ca[c] * sp[i] + f[i] + sp[i];
    }
  }
  return out;
}

DaBlockGrads da_block_backward(const Tensor4& feat, const DegradationRepr& v_dg, const DaBlockRef& ref,
                               const Tensor4& upstream) {
  check_feat(feat, ref);
  if (upstream.shape() != feat.shape()) throw InvalidArgument("upstream gradient shape does not match features");
  const Shape4 s = feat.shape();
  const std::size_t k = ref.k;
  const auto r = static_cast<std::ptrdiff_t>(k / 2);

  const std::vector<double> kernels = da_block_kernels(v_dg, ref);
  const Tensor4 dw = nn::depthwise_conv_reflect(feat, kernels, k);
  const Tensor4 spa = nn::conv2d(dw, ref.conv1x1, 0, 0);
  const std::vector<double> ca = channel_attention(v_dg, ref);

  DaBlockGrads grads;
  grads.feat = upstream;

  // Channel attention path.
  std::vector<double> dca_logit(s.c, 0.0);
  Tensor4 dspa(s);
  for (std::size_t c = 0; c < s.c; ++c) {
    double acc = 0.0;
    for (std::size_t n = 0; n < s.n; ++n) {
      const auto g = upstream.plane(n, c);
      const auto sp = spa.plane(n, c);
      auto d = dspa.plane(n, c);
      for (std::size_t i = 0; i < g.size(); ++i) {
        acc += g[i] * sp[i];
        d[i] = (1.0 + ca[c]) * g[i];
      }
    }
    dca_logit[c] = acc * ca[c] * (1.0 - ca[c]);
  }
  mlp2_backward(ref.ca_fc1, ref.ca_fc2, v_dg.v, dca_logit, ref.slope, grads.v_dg, "ca_fc1", "ca_fc2", grads.params);

  // 1x1 mixing convolution.
  const std::size_t C = s.c;
  const std::size_t plane = s.h * s.w;
  std::vector<double>& dwc = grads.params["conv1x1.weight"];
  std::vector<double>& dbc = grads.params["conv1x1.bias"];
  dwc.assign(C * C, 0.0);
  dbc.assign(C, 0.0);
  Tensor4 ddw(s);
  for (std::size_t n = 0; n < s.n; ++n) {
    for (std::size_t o = 0; o < C; ++o) {
      const auto g = dspa.plane(n, o);
      for (std::size_t i = 0; i < plane; ++i) dbc[o] += g[i];
      for (std::size_t c = 0; c < C; ++c) {
        const auto x = dw.plane(n, c);
        auto dx = ddw.plane(n, c);
        const double w = ref.conv1x1.weight[o * C + c];
        double acc = 0.0;
        for (std::size_t i = 0; i < plane; ++i) {
          acc += g[i] * x[i];
          dx[i] += w * g[i];
        }
        dwc[o * C + c] += acc;
      }
    }
  }

  // Dynamic depth-wise convolution.
  std::vector<double> dkernels(C * k * k, 0.0);
  for (std::size_t n = 0; n < s.n; ++n) {
    for (std::size_t c = 0; c < C; ++c) {
      const auto x = feat.plane(n, c);
      const auto g = ddw.plane(n, c);
      auto dx = grads.feat.plane(n, c);
      const double* kc = kernels.data() + c * k * k;
      double* dkc = dkernels.data() + c * k * k;
      for (std::size_t p = 0; p < s.h; ++p) {
        for (std::size_t q = 0; q < s.w; ++q) {
          const double gv = g[p * s.w + q];
          for (std::size_t i = 0; i < k; ++i) {
            const std::size_t sp = nn::reflect_index(static_cast<std::ptrdiff_t>(p + i) - r, s.h);
            for (std::size_t j = 0; j < k; ++j) {
              const std::size_t sq = nn::reflect_index(static_cast<std::ptrdiff_t>(q + j) - r, s.w);
              dkc[i * k + j] += gv * x[sp * s.w + sq];
              dx[sp * s.w + sq] += gv * kc[i * k + j];
            }
          }
        }
      }
    }
  }
  mlp2_backward(ref.kgen_fc1, ref.kgen_fc2, v_dg.v, dkernels, ref.slope, grads.v_dg, "kgen_fc1", "kgen_fc2",
                grads.params);
  return grads;
}

DistgBlockRef distg_block_ref(const NetParams& params, std::size_t group, std::size_t block) {
  const std::string p = group_prefix(group) + "distg" + std::to_string(block) + ".";
  return {params.conv(p + "spa1"),      params.conv(p + "spa2"),    params.conv(p + "ang_conv"),
          params.conv(p + "ang_up"),    params.conv(p + "epih_conv"), params.conv(p + "epih_up"),
          params.conv(p + "epiv_conv"), params.conv(p + "epiv_up"), params.conv(p + "fuse"),
          params.config().leaky_slope};
}

LightField distg_block_forward(const LightField& feat, const DistgBlockRef& ref, std::size_t threads) {
  const LfDims d = feat.dims();
  const std::size_t A = ref.ang_conv.shape.h;
  const std::size_t C = ref.spa1.shape.c;
  const std::size_t b = ref.ang_conv.shape.n;
  if (d.U != A || d.V != A) {
    throw InvalidArgument("Distg-Block built for " + std::to_string(A) + "x" + std::to_string(A) +
                          " views, got " + std::to_string(d.U) + "x" + std::to_string(d.V));
  }
  if (d.C != C) {
    throw InvalidArgument("Distg-Block expects " + std::to_string(C) + " channels, got " + std::to_string(d.C));
  }
  const double slope = ref.slope;
  const LfDims branch_dims{d.U, d.V, b, d.H, d.W};

  Tensor4 spatial = activated_conv(branch_view(feat, Branch::spatial).data, ref.spa1, 1, 1, slope, threads);
  spatial = activated_conv(spatial, ref.spa2, 1, 1, slope, threads);

  Tensor4 ang = activated_conv(branch_view(feat, Branch::angular).data, ref.ang_conv, 0, 0, slope, threads);
  ang = pixel_shuffle_2d(activated_conv(ang, ref.ang_up, 0, 0, slope, threads), A);
  const LightField ang_lf = inverse_branch_view({Branch::angular, std::move(ang)}, branch_dims);

  const auto epi = [&](Branch branch, const nn::ConvRef& conv, const nn::ConvRef& up) {
    const std::size_t pad = conv.shape.w / 2;
    Tensor4 t = activated_conv(branch_view(feat, branch).data, conv, 0, pad, slope, threads);
    t = pixel_shuffle_1d(activated_conv(t, up, 0, 0, slope, threads), A, ShuffleAxis::P);
    return inverse_branch_view({branch, std::move(t)}, branch_dims);
  };
  const LightField epih_lf = epi(Branch::epi_h, ref.epih_conv, ref.epih_up);
  const LightField epiv_lf = epi(Branch::epi_v, ref.epiv_conv, ref.epiv_up);

  const std::size_t views = d.views();
  const std::size_t plane = d.H * d.W;
  Tensor4 cat({views, C + 3 * b, d.H, d.W});
  for (std::size_t n = 0; n < views; ++n) {
    auto dst = cat.values().subspan(n * (C + 3 * b) * plane);
    std::copy_n(spatial.values().begin() + static_cast<std::ptrdiff_t>(n * C * plane), C * plane, dst.begin());
    std::size_t at = C * plane;
    for (const LightField* branch : {&ang_lf, &epih_lf, &epiv_lf}) {
      std::copy_n(branch->values().begin() + static_cast<std::ptrdiff_t>(n * b * plane), b * plane,
                  dst.begin() + static_cast<std::ptrdiff_t>(at));
      at += b * plane;
    }
  }

  Tensor4 out = nn::conv2d(cat, ref.fuse, 0, 0, threads);
  const auto in = feat.values();
  auto o = out.values();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] += in[i];
  return LightField::from_tensor(std::move(out), d.U, d.V);
}

LightField network_forward(const LightField& lf_lr, const Degradation& d, const NetParams& params,
                           std::size_t threads) {
  const NetConfig& cfg = params.config();
  const LfDims dims = lf_lr.dims();
  d.validate();
  if (dims.C != 3) throw InvalidArgument("network input must have 3 channels");
  if (dims.U != cfg.A || dims.V != cfg.A) {
    throw InvalidArgument("network built for " + std::to_string(cfg.A) + "x" + std::to_string(cfg.A) +
                          " views, got " + std::to_string(dims.U) + "x" + std::to_string(dims.V));
  }
  if (d.alpha != cfg.alpha) {
    throw InvalidArgument("degradation alpha " + std::to_string(d.alpha) + " does not match network alpha " +
                          std::to_string(cfg.alpha));
  }

  const DegradationRepr v_dg = kpe_forward(d.sigma_b, d.noise_level, params);
  Tensor4 x = nn::conv2d(lf_lr.to_tensor(), params.conv("head"), 1, 1, threads);

  for (std::size_t g = 1; g <= cfg.n_groups; ++g) {
    Tensor4 y = da_block_forward(x, v_dg, da_block_ref(params, g), threads);
    LightField lf_y = LightField::from_tensor(std::move(y), dims.U, dims.V);
    for (std::size_t b = 1; b <= cfg.blocks_per_group; ++b) {
      lf_y = distg_block_forward(lf_y, distg_block_ref(params, g, b), threads);
    }
    auto xv = x.values();
    const auto yv = lf_y.values();
    for (std::size_t i = 0; i < xv.size(); ++i) xv[i] += yv[i];
  }

  for (std::size_t s = 1; s <= cfg.tail_stages(); ++s) {
    x = pixel_shuffle_2d(nn::conv2d(x, params.conv("tail.up" + std::to_string(s)), 1, 1, threads), 2);
    nn::leaky_inplace(x.values(), cfg.leaky_slope);
  }
  Tensor4 residual = nn::conv2d(x, params.conv("tail.out"), 1, 1, threads);

  LightField out = bicubic_upsample_lf(lf_lr, cfg.alpha, threads);
  auto ov = out.values();
  const auto rv = residual.values();
  for (std::size_t i = 0; i < ov.size(); ++i) ov[i] = rv[i] + ov[i];
  return out;
}

}  // namespace lfda
