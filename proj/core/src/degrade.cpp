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

#include "lfda/degrade.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "lfda/error.hpp"
#include "lfda/parallel.hpp"
#include "lfda/philox.hpp"

namespace lfda {

namespace {

// Reflection without repeating the edge sample (…, 2, 1, 0, 1, 2, …).
std::ptrdiff_t reflect_index(std::ptrdiff_t i, std::ptrdiff_t n) {
  if (n == 1) return 0;
  const std::ptrdiff_t period = 2 * (n - 1);
  i %= period;
  if (i < 0) i += period;
  return i >= n ? period - i : i;
}

double cubic(double x) {
  const double ax = std::abs(x);
  if (ax <= 1.0) return (1.5 * ax - 2.5) * ax * ax + 1.0;
  if (ax < 2.0) return ((-0.5 * ax + 2.5) * ax - 4.0) * ax + 2.0;
  return 0.0;
}

struct Taps {
  std::vector<std::size_t> index;
  std::vector<double> weight;
};

std::vector<Taps> resample_taps(std::size_t in_len, std::size_t out_len, bool antialias) {
  const double scale = static_cast<double>(out_len) / static_cast<double>(in_len);
  const bool stretch = antialias && scale < 1.0;
  const double support = stretch ? 4.0 / scale : 4.0;
  const auto taps = static_cast<std::ptrdiff_t>(std::ceil(support)) + 2;
  const auto last = static_cast<std::ptrdiff_t>(in_len) - 1;

  std::vector<Taps> out(out_len);
  for (std::size_t o = 0; o < out_len; ++o) {
    const double x = (static_cast<double>(o) + 0.5) / scale - 0.5;
    const auto left = static_cast<std::ptrdiff_t>(std::floor(x - support / 2.0));
    double sum = 0.0;
    Taps& t = out[o];
    for (std::ptrdiff_t k = 0; k < taps; ++k) {
      const std::ptrdiff_t j = left + k;
      const double d = x - static_cast<double>(j);
      const double wgt = stretch ? scale * cubic(d * scale) : cubic(d);
      if (wgt == 0.0) continue;
      t.index.push_back(static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(j, 0, last)));
      t.weight.push_back(wgt);
      sum += wgt;
    }
    for (double& wgt : t.weight) wgt /= sum;
  }
  return out;
}

}  // namespace

void Degradation::validate() const {
  if (!(sigma_b >= 0.0) || !std::isfinite(sigma_b)) throw InvalidArgument("sigma_b must be ≥ 0");
  if (!(noise_level >= 0.0) || !std::isfinite(noise_level)) throw InvalidArgument("noise_level must be ≥ 0");
  if (alpha < 1) throw InvalidArgument("alpha must be ≥ 1");
}

std::uint64_t NoiseStream::key() const {
  return seed ^ mix64((static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v));
}

Kernel21 gaussian_kernel(double sigma_b) {
  if (!(sigma_b >= 0.0) || !std::isfinite(sigma_b)) throw InvalidArgument("sigma_b must be ≥ 0");
  Kernel21 k;
  k.sigma = sigma_b;
  constexpr int r = Kernel21::kRadius;
  if (sigma_b == 0.0) {
    k.weights[r * Kernel21::kSize + r] = 1.0;
    return k;
  }
  const double denom = 2.0 * sigma_b * sigma_b;
  double sum = 0.0;
  for (int i = -r; i <= r; ++i) {
    for (int j = -r; j <= r; ++j) {
      const double w = std::exp(-static_cast<double>(i * i + j * j) / denom);
      k.weights[(i + r) * Kernel21::kSize + (j + r)] = w;
      sum += w;
    }
  }
  for (double& w : k.weights) w /= sum;
  return k;
}

Image blur(const Image& img, const Kernel21& k) {
  constexpr int r = Kernel21::kRadius;
  constexpr int ks = Kernel21::kSize;
  const auto H = static_cast<std::ptrdiff_t>(img.height());
  const auto W = static_cast<std::ptrdiff_t>(img.width());
  const std::ptrdiff_t PW = W + 2 * r;

  struct Tap {
    std::ptrdiff_t offset;
    double weight;
  };
  std::vector<Tap> taps;
  for (int i = 0; i < ks; ++i)
    for (int j = 0; j < ks; ++j)
      if (const double w = k.weights[i * ks + j]; w != 0.0) taps.push_back({i * PW + j, w});

  Image out(img.channels(), img.height(), img.width());
  std::vector<double> padded(static_cast<std::size_t>((H + 2 * r) * PW));
  for (std::size_t c = 0; c < img.channels(); ++c) {
    const auto src = img.plane(c);
    for (std::ptrdiff_t y = 0; y < H + 2 * r; ++y) {
      const std::ptrdiff_t sy = reflect_index(y - r, H);
      for (std::ptrdiff_t x = 0; x < PW; ++x) {
        padded[static_cast<std::size_t>(y * PW + x)] = src[static_cast<std::size_t>(sy * W + reflect_index(x - r, W))];
      }
    }
    auto dst = out.plane(c);
    for (std::ptrdiff_t y = 0; y < H; ++y) {
      for (std::ptrdiff_t x = 0; x < W; ++x) {
        const double* base = padded.data() + y * PW + x;
        double acc = 0.0;
        for (const Tap& t : taps) acc += t.weight * base[t.offset];
        dst[static_cast<std::size_t>(y * W + x)] = acc;
      }
    }
  }
  return out;
}

Image bicubic_resize(const Image& img, double scale, bool antialias) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw InvalidArgument("bicubic_resize: scale must be > 0");
  const std::size_t H = img.height();
  const std::size_t W = img.width();
  const auto out_h = static_cast<std::size_t>(std::llround(static_cast<double>(H) * scale));
  const auto out_w = static_cast<std::size_t>(std::llround(static_cast<double>(W) * scale));
  if (out_h == 0 || out_w == 0) throw InvalidArgument("bicubic_resize: output would be empty");

  const auto col_taps = resample_taps(W, out_w, antialias);
  const auto row_taps = resample_taps(H, out_h, antialias);

  Image out(img.channels(), out_h, out_w);
  std::vector<double> tmp(H * out_w);
  for (std::size_t c = 0; c < img.channels(); ++c) {
    const auto src = img.plane(c);
    for (std::size_t y = 0; y < H; ++y) {
      const double* row = src.data() + y * W;
      for (std::size_t x = 0; x < out_w; ++x) {
        const Taps& t = col_taps[x];
        double acc = 0.0;
        for (std::size_t k = 0; k < t.index.size(); ++k) acc += t.weight[k] * row[t.index[k]];
        tmp[y * out_w + x] = acc;
      }
    }
    auto dst = out.plane(c);
    for (std::size_t y = 0; y < out_h; ++y) {
      const Taps& t = row_taps[y];
      for (std::size_t x = 0; x < out_w; ++x) {
        double acc = 0.0;
        for (std::size_t k = 0; k < t.index.size(); ++k) acc += t.weight[k] * tmp[t.index[k] * out_w + x];
        dst[y * out_w + x] = acc;
      }
    }
  }
  return out;
}

Image add_awgn(const Image& img, double noise_level, const NoiseStream& stream) {
  if (!(noise_level >= 0.0)) throw InvalidArgument("noise_level must be ≥ 0");
  Image out = img;
  if (noise_level == 0.0) return out;
  const double sigma = noise_level / 255.0;
  const Philox4x32 gen(stream.key());
  auto values = out.values();
  for (std::size_t pair = 0; 2 * pair < values.size(); ++pair) {
    const auto words = gen.at(pair);
    const std::uint64_t b1 = (std::uint64_t{words[0]} << 32) | words[1];
    const std::uint64_t b2 = (std::uint64_t{words[2]} << 32) | words[3];
    const double radius = std::sqrt(-2.0 * std::log(to_unit_open_closed(b1)));
    const double theta = 2.0 * std::numbers::pi * to_unit(b2);
    values[2 * pair] += sigma * radius * std::cos(theta);
    if (2 * pair + 1 < values.size()) values[2 * pair + 1] += sigma * radius * std::sin(theta);
  }
  return out;
}

LightField degrade_lf(const LightField& lf_hr, const Degradation& d, std::uint64_t seed, std::size_t threads) {
  d.validate();
  const LfDims& in = lf_hr.dims();
  const auto alpha = static_cast<std::size_t>(d.alpha);
  if (in.H % alpha != 0 || in.W % alpha != 0) {
    throw InvalidArgument("degrade_lf: spatial size " + std::to_string(in.H) + "x" + std::to_string(in.W) +
                          " is not divisible by alpha = " + std::to_string(d.alpha));
  }
  const Kernel21 kernel = gaussian_kernel(d.sigma_b);
  LightField out({in.U, in.V, in.C, in.H / alpha, in.W / alpha});
  parallel_for(in.views(), threads, [&](std::size_t i) {
    const std::size_t u = i / in.V;
    const std::size_t v = i % in.V;
    Image view = lf_hr.view(u, v);
    if (d.sigma_b > 0.0) view = blur(view, kernel);
    view = bicubic_resize(view, 1.0 / static_cast<double>(d.alpha), true);
    if (d.noise_level > 0.0) {
      view = add_awgn(view, d.noise_level, NoiseStream{seed, u, v});
      clip(view.values());
    }
    out.set_view(u, v, view);
  });
  return out;
}

LightField bicubic_upsample_lf(const LightField& lf, int factor, std::size_t threads) {
  if (factor < 1) throw InvalidArgument("bicubic_upsample_lf: factor must be ≥ 1");
  const LfDims& in = lf.dims();
  const auto f = static_cast<std::size_t>(factor);
  LightField out({in.U, in.V, in.C, in.H * f, in.W * f});
  parallel_for(in.views(), threads, [&](std::size_t i) {
    const std::size_t u = i / in.V;
    const std::size_t v = i % in.V;
    out.set_view(u, v, bicubic_resize(lf.view(u, v), static_cast<double>(factor), false));
  });
  return out;
}

}  // namespace lfda
