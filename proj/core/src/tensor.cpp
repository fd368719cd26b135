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

#include "lfda/tensor.hpp"

#include <algorithm>
#include <string>

#include "lfda/error.hpp"

namespace lfda {

Tensor4::Tensor4(Shape4 shape, double fill) : shape_(shape), values_(shape.size(), fill) {}

Tensor4::Tensor4(Shape4 shape, std::vector<double> values) : shape_(shape), values_(std::move(values)) {
  if (values_.size() != shape_.size()) {
    throw InvalidArgument("Tensor4: value count " + std::to_string(values_.size()) +
                          " does not match shape size " + std::to_string(shape_.size()));
  }
}

std::span<double> Tensor4::plane(std::size_t n, std::size_t c) {
  const std::size_t hw = shape_.h * shape_.w;
  return std::span<double>(values_).subspan((n * shape_.c + c) * hw, hw);
}

std::span<const double> Tensor4::plane(std::size_t n, std::size_t c) const {
  const std::size_t hw = shape_.h * shape_.w;
  return std::span<const double>(values_).subspan((n * shape_.c + c) * hw, hw);
}

Image::Image(std::size_t channels, std::size_t height, std::size_t width, double fill)
    : channels_(channels), height_(height), width_(width), values_(channels * height * width, fill) {}

Image::Image(std::size_t channels, std::size_t height, std::size_t width, std::vector<double> values)
    : channels_(channels), height_(height), width_(width), values_(std::move(values)) {
  if (values_.size() != channels * height * width) {
    throw InvalidArgument("Image: value count does not match " + std::to_string(channels) + "x" +
                          std::to_string(height) + "x" + std::to_string(width));
  }
}

std::span<double> Image::plane(std::size_t c) {
  return std::span<double>(values_).subspan(c * height_ * width_, height_ * width_);
}

std::span<const double> Image::plane(std::size_t c) const {
  return std::span<const double>(values_).subspan(c * height_ * width_, height_ * width_);
}

void clip(std::span<double> values, double lo, double hi) {
  for (double& x : values) x = std::clamp(x, lo, hi);
}

}  // namespace lfda
