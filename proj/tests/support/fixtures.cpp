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

#include "support/fixtures.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>

#include <unistd.h>

namespace lfda::testing {

LightField random_lf(const LfDims& dims, std::uint64_t seed, double lo, double hi) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  LightField lf(dims);
  for (double& v : lf.values()) v = dist(rng);
  return lf;
}

Tensor4 random_tensor(const Shape4& shape, std::uint64_t seed, double lo, double hi) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  Tensor4 t(shape);
  for (double& v : t.values()) v = dist(rng);
  return t;
}

Image random_image(std::size_t c, std::size_t h, std::size_t w, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  Image img(c, h, w);
  for (double& v : img.values()) v = dist(rng);
  return img;
}

LightField dyadic_lf(const LfDims& dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, 255);
  LightField lf(dims);
  for (double& v : lf.values()) v = dist(rng) / 256.0;
  return lf;
}

LightField smooth_lf(const LfDims& d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> freq(0.02, 0.35), phase(0.0, 6.283185307179586), amp(0.05, 0.2);
  struct Wave {
    double fy, fx, ph, a;
  };
  std::vector<Wave> waves[3];
  for (auto& list : waves)
    for (int k = 0; k < 6; ++k) list.push_back({freq(rng), freq(rng), phase(rng), amp(rng)});
  LightField lf(d);
  for (std::size_t u = 0; u < d.U; ++u)
    for (std::size_t v = 0; v < d.V; ++v)
      for (std::size_t c = 0; c < d.C; ++c)
        for (std::size_t h = 0; h < d.H; ++h)
          for (std::size_t w = 0; w < d.W; ++w) {
            const double y = h + 0.7 * static_cast<double>(u);
            const double x = w + 0.7 * static_cast<double>(v);
            double s = 0.5;
            for (const Wave& wv : waves[c % 3]) s += wv.a * std::sin(wv.fy * y + wv.fx * x + wv.ph);
            lf(u, v, c, h, w) = std::clamp(s, 0.0, 1.0);
          }
  return lf;
}

LightField disparity_lf(std::size_t A, std::size_t H, std::size_t W, int d, std::uint64_t seed) {
  const int margin = std::abs(d) * static_cast<int>(A);
  const std::size_t TH = H + 2 * static_cast<std::size_t>(margin);
  const std::size_t TW = W + 2 * static_cast<std::size_t>(margin);
  const Image texture = random_image(3, TH, TW, seed);
  const auto c = static_cast<int>(A / 2);
  LightField lf({A, A, 3, H, W});
  for (std::size_t u = 0; u < A; ++u)
    for (std::size_t v = 0; v < A; ++v)
      for (std::size_t ch = 0; ch < 3; ++ch)
        for (std::size_t h = 0; h < H; ++h)
          for (std::size_t w = 0; w < W; ++w) {
            const int y = static_cast<int>(h) + margin + d * (static_cast<int>(u) - c);
            const int x = static_cast<int>(w) + margin + d * (static_cast<int>(v) - c);
            lf(u, v, ch, h, w) = texture(ch, static_cast<std::size_t>(y), static_cast<std::size_t>(x));
          }
  return lf;
}

int estimate_disparity(const LightField& lf, int max_d) {
  const LfDims d = lf.dims();
  const auto cu = static_cast<int>(d.U / 2);
  const auto cv = static_cast<int>(d.V / 2);
  const int margin = max_d * std::max(cu, cv);
  int common = 1000;
  for (std::size_t u = 0; u < d.U; ++u)
    for (std::size_t v = 0; v < d.V; ++v) {
      const int du = static_cast<int>(u) - cu;
      const int dv = static_cast<int>(v) - cv;
      if (du == 0 && dv == 0) continue;
      int best = 0;
      double best_err = std::numeric_limits<double>::infinity();
      for (int s = -max_d; s <= max_d; ++s) {
        double err = 0.0;
        for (std::size_t c = 0; c < d.C; ++c)
          for (int h = margin; h < static_cast<int>(d.H) - margin; ++h)
            for (int w = margin; w < static_cast<int>(d.W) - margin; ++w) {
              // view(u,v)(h,w) = centre(h + s du, w + s dv)
              const double a = lf(u, v, c, static_cast<std::size_t>(h), static_cast<std::size_t>(w));
              const double b = lf(static_cast<std::size_t>(cu), static_cast<std::size_t>(cv), c,
                                  static_cast<std::size_t>(h + s * du), static_cast<std::size_t>(w + s * dv));
              err += std::abs(a - b);
            }
        if (err < best_err) {
          best_err = err;
          best = s;
        }
      }
      if (common == 1000) common = best;
      else if (common != best) return 1000;
    }
  return common;
}

NetConfig micro_config(std::size_t A, std::size_t C) {
  NetConfig cfg;
  cfg.A = A;
  cfg.C = C;
  cfg.n_groups = 1;
  cfg.blocks_per_group = 1;
  cfg.da_hidden = 8;
  cfg.epi_spatial_kernel = 3;
  return cfg;
}

TempDir::TempDir(const std::string& tag) {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          (tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

}  // namespace lfda::testing
