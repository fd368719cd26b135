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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "lfda/light_field.hpp"
#include "lfda/net_params.hpp"
#include "lfda/tensor.hpp"

namespace lfda::testing {

/// Uniform values in [lo, hi).
LightField random_lf(const LfDims& dims, std::uint64_t seed, double lo = 0.0, double hi = 1.0);
Tensor4 random_tensor(const Shape4& shape, std::uint64_t seed, double lo = -1.0, double hi = 1.0);
Image random_image(std::size_t c, std::size_t h, std::size_t w, std::uint64_t seed);

/// Values on the k/256 grid, so sums of squared differences are exact.
LightField dyadic_lf(const LfDims& dims, std::uint64_t seed);

/// Smooth-ish natural-looking RGB light field for metric / pipeline tests.
LightField smooth_lf(const LfDims& dims, std::uint64_t seed);

/// view(u, v)(h, w) = T(h + d (u - cu), w + d (v - cv)) for a random texture T.
LightField disparity_lf(std::size_t A, std::size_t H, std::size_t W, int d, std::uint64_t seed);

/// Integer disparity in [-max_d, max_d] that best explains every view from
/// the central one (interior pixels only). Returns the per-view estimates'
/// common value, or a sentinel 1000 if views disagree.
int estimate_disparity(const LightField& lf, int max_d);

/// Small network used by the oracle and gradient tests.
NetConfig micro_config(std::size_t A = 3, std::size_t C = 4);

/// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag = "lfda");
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace lfda::testing
