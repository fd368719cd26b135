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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lfda/tensor.hpp"

namespace lfda::nn {

/// Read-only view of a convolution's weights, shape (Cout, Cin, kh, kw).
struct ConvRef {
  std::span<const double> weight;
  std::span<const double> bias;  // Cout entries (may be empty for no bias)
  Shape4 shape;
};

/// Read-only view of a fully connected layer y = W x + b, W is out x in.
struct LinearRef {
  std::span<const double> weight;
  std::span<const double> bias;
  std::size_t out = 0;
  std::size_t in = 0;
};

/// Stride-1 cross-correlation with zero padding (pad_h rows above and below,
/// pad_w columns left and right).
Tensor4 conv2d(const Tensor4& x, const ConvRef& conv, std::size_t pad_h, std::size_t pad_w, std::size_t threads = 1);

/// Depth-wise k x k cross-correlation with edge-excluded reflect padding of
/// k/2; `kernels` holds C consecutive k*k row-major kernels. No bias.
Tensor4 depthwise_conv_reflect(const Tensor4& x, std::span<const double> kernels, std::size_t k);

std::vector<double> linear(const LinearRef& fc, std::span<const double> x);

inline double leaky(double x, double slope) { return x >= 0.0 ? x : slope * x; }
void leaky_inplace(std::span<double> values, double slope);
double sigmoid(double x);

/// Reflection index without edge repetition, valid for any offset.
std::size_t reflect_index(std::ptrdiff_t i, std::size_t n);

/// Multiply-accumulate tally for the calling thread. Each conv2d /
/// depthwise_conv_reflect / linear call adds its MAC count.
std::uint64_t& mac_tally();

}  // namespace lfda::nn
