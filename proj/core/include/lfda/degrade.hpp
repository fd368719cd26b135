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

#include <array>
#include <cstddef>
#include <cstdint>

#include "lfda/light_field.hpp"
#include "lfda/tensor.hpp"

namespace lfda {

/// Normalized isotropic Gaussian on a 21 x 21 grid centered at (10, 10).
struct Kernel21 {
  static constexpr int kSize = 21;
  static constexpr int kRadius = 10;

  double sigma = 0.0;
  std::array<double, kSize * kSize> weights{};

  /// Weight at centered offsets i, j in [-10, 10].
  double at(int i, int j) const { return weights[(i + kRadius) * kSize + (j + kRadius)]; }
};

/// Parameters of the blur -> bicubic downsample -> noise model.
struct Degradation {
  double sigma_b = 0.0;      // kernel width in HR pixels
  double noise_level = 0.0;  // AWGN std on the 0..255 scale
  int alpha = 4;             // integer downscale factor

  void validate() const;
  bool operator==(const Degradation&) const = default;
};

/// Identifies the noise field of one view. Streams for distinct (u, v) under
/// the same seed are independent; a stream is reproducible bit for bit.
struct NoiseStream {
  std::uint64_t seed = 0;
  std::size_t u = 0;
  std::size_t v = 0;

  std::uint64_t key() const;
};

/// Throws InvalidArgument for sigma_b < 0. sigma_b == 0 yields the delta kernel.
Kernel21 gaussian_kernel(double sigma_b);

/// Per-channel 2D correlation with `k`, reflect (edge-excluded) padding, same size.
Image blur(const Image& img, const Kernel21& k);

/// Separable cubic-convolution resampling (a = -0.5), rows then columns, with
/// replicate borders. Output size is round(in * scale) per axis. With
/// `antialias` and scale < 1 the kernel is stretched by 1/scale.
Image bicubic_resize(const Image& img, double scale, bool antialias);

/// Adds N(0, (noise_level/255)^2) to every sample using the view's stream.
/// No clipping is applied here.
Image add_awgn(const Image& img, double noise_level, const NoiseStream& stream);

/// Applies blur, antialiased bicubic downsampling by 1/alpha and noise to
/// every view. Views are clipped to [0, 1] only when noise was added, so
/// (sigma_b = 0, noise_level = 0) reduces exactly to bicubic_resize.
LightField degrade_lf(const LightField& lf_hr, const Degradation& d, std::uint64_t seed,
                      std::size_t threads = 1);

/// Bicubic upsampling of every view by `factor` (no antialiasing).
LightField bicubic_upsample_lf(const LightField& lf, int factor, std::size_t threads = 1);

}  // namespace lfda
