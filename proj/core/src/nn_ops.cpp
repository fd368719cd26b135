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

#include "lfda/nn_ops.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <string>

#include "lfda/error.hpp"
#include "lfda/parallel.hpp"

namespace lfda::nn {

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstMatrixMap = Eigen::Map<const RowMatrix>;
using MatrixMap = Eigen::Map<RowMatrix>;

constexpr std::size_t kColumnsPerChunk = 4096;

}  // namespace

std::uint64_t& mac_tally() {
  thread_local std::uint64_t tally = 0;
  return tally;
}

std::size_t reflect_index(std::ptrdiff_t i, std::size_t n) {
  if (n == 1) return 0;
  const auto period = static_cast<std::ptrdiff_t>(2 * (n - 1));
  i %= period;
  if (i < 0) i += period;
  return static_cast<std::size_t>(i >= static_cast<std::ptrdiff_t>(n) ? period - i : i);
}

Tensor4 conv2d(const Tensor4& x, const ConvRef& conv, std::size_t pad_h, std::size_t pad_w, std::size_t threads) {
  const Shape4 in = x.shape();
  const Shape4 ws = conv.shape;
  if (ws.c != in.c) {
    throw InvalidArgument("conv2d: input has " + std::to_string(in.c) + " channels, weights expect " +
                          std::to_string(ws.c));
  }
  if (in.h + 2 * pad_h < ws.h || in.w + 2 * pad_w < ws.w) throw InvalidArgument("conv2d: kernel exceeds input");
  if (conv.weight.size() != ws.size() || (!conv.bias.empty() && conv.bias.size() != ws.n)) {
    throw InvalidArgument("conv2d: weight/bias sizes do not match the declared shape");
  }
  const std::size_t oh = in.h + 2 * pad_h - ws.h + 1;
  const std::size_t ow = in.w + 2 * pad_w - ws.w + 1;
  const std::size_t K = ws.c * ws.h * ws.w;
  Tensor4 out({in.n, ws.n, oh, ow});
  mac_tally() += static_cast<std::uint64_t>(in.n) * ws.n * oh * ow * K;

  const ConstMatrixMap weights(conv.weight.data(), static_cast<Eigen::Index>(ws.n), static_cast<Eigen::Index>(K));
  const bool pointwise = ws.h == 1 && ws.w == 1 && pad_h == 0 && pad_w == 0;
  const std::size_t rows_per_chunk = std::max<std::size_t>(1, kColumnsPerChunk / ow);

  parallel_for(in.n, threads, [&](std::size_t n) {
    const double* src = x.values().data() + n * in.c * in.h * in.w;
    double* dst = out.values().data() + n * ws.n * oh * ow;
    MatrixMap result(dst, static_cast<Eigen::Index>(ws.n), static_cast<Eigen::Index>(oh * ow));
    if (pointwise) {
      const ConstMatrixMap cols(src, static_cast<Eigen::Index>(K), static_cast<Eigen::Index>(oh * ow));
      result.noalias() = weights * cols;
    } else {
      RowMatrix cols;
      for (std::size_t r0 = 0; r0 < oh; r0 += rows_per_chunk) {
        const std::size_t rows = std::min(rows_per_chunk, oh - r0);
        const std::size_t ncol = rows * ow;
        cols.setZero(static_cast<Eigen::Index>(K), static_cast<Eigen::Index>(ncol));
        for (std::size_t c = 0; c < ws.c; ++c) {
          for (std::size_t i = 0; i < ws.h; ++i) {
            for (std::size_t j = 0; j < ws.w; ++j) {
              double* row = cols.data() + ((c * ws.h + i) * ws.w + j) * ncol;
              for (std::size_t y = 0; y < rows; ++y) {
                const auto sy = static_cast<std::ptrdiff_t>(r0 + y + i) - static_cast<std::ptrdiff_t>(pad_h);
                if (sy < 0 || sy >= static_cast<std::ptrdiff_t>(in.h)) continue;
                const double* srow = src + (c * in.h + static_cast<std::size_t>(sy)) * in.w;
                for (std::size_t xo = 0; xo < ow; ++xo) {
                  const auto sx = static_cast<std::ptrdiff_t>(xo + j) - static_cast<std::ptrdiff_t>(pad_w);
                  if (sx >= 0 && sx < static_cast<std::ptrdiff_t>(in.w)) row[y * ow + xo] = srow[sx];
                }
              }
            }
          }
        }
        result.middleCols(static_cast<Eigen::Index>(r0 * ow), static_cast<Eigen::Index>(ncol)).noalias() =
            weights * cols;
      }
    }
    if (!conv.bias.empty()) {
      for (std::size_t o = 0; o < ws.n; ++o) {
        double* plane = dst + o * oh * ow;
        for (std::size_t i = 0; i < oh * ow; ++i) plane[i] += conv.bias[o];
      }
    }
  });
  return out;
}

Tensor4 depthwise_conv_reflect(const Tensor4& x, std::span<const double> kernels, std::size_t k) {
  const Shape4 s = x.shape();
  if (kernels.size() != s.c * k * k) throw InvalidArgument("depthwise_conv_reflect: kernel count mismatch");
  const auto half = static_cast<std::ptrdiff_t>(k / 2);
  Tensor4 out(s);
  mac_tally() += static_cast<std::uint64_t>(s.size()) * k * k;
  for (std::size_t n = 0; n < s.n; ++n) {
    for (std::size_t c = 0; c < s.c; ++c) {
      const auto src = x.plane(n, c);
      auto dst = out.plane(n, c);
      const double* kc = kernels.data() + c * k * k;
      for (std::size_t p = 0; p < s.h; ++p) {
        for (std::size_t q = 0; q < s.w; ++q) {
          double acc = 0.0;
          for (std::size_t i = 0; i < k; ++i) {
            const std::size_t sp = reflect_index(static_cast<std::ptrdiff_t>(p + i) - half, s.h);
            for (std::size_t j = 0; j < k; ++j) {
              const std::size_t sq = reflect_index(static_cast<std::ptrdiff_t>(q + j) - half, s.w);
              acc += kc[i * k + j] * src[sp * s.w + sq];
            }
          }
          dst[p * s.w + q] = acc;
        }
      }
    }
  }
  return out;
}

std::vector<double> linear(const LinearRef& fc, std::span<const double> x) {
  if (x.size() != fc.in || fc.weight.size() != fc.out * fc.in || fc.bias.size() != fc.out) {
    throw InvalidArgument("linear: shape mismatch");
  }
  mac_tally() += static_cast<std::uint64_t>(fc.out) * fc.in;
  std::vector<double> y(fc.out);
  for (std::size_t o = 0; o < fc.out; ++o) {
    double acc = fc.bias[o];
    for (std::size_t i = 0; i < fc.in; ++i) acc += fc.weight[o * fc.in + i] * x[i];
    y[o] = acc;
  }
  return y;
}

void leaky_inplace(std::span<double> values, double slope) {
  for (double& v : values) v = leaky(v, slope);
}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace lfda::nn
