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
#include <span>
#include <vector>

namespace lfda {

struct Shape4 {
  std::size_t n = 0;
  std::size_t c = 0;
  std::size_t h = 0;
  std::size_t w = 0;

  std::size_t size() const { return n * c * h * w; }
  bool operator==(const Shape4&) const = default;
};

/// Dense N x C x H x W array of doubles in row-major (NCHW) order.
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(Shape4 shape, double fill = 0.0);
  Tensor4(Shape4 shape, std::vector<double> values);

  const Shape4& shape() const { return shape_; }
  std::size_t size() const { return values_.size(); }

  double& operator()(std::size_t n, std::size_t c, std::size_t h, std::size_t w) {
    return values_[((n * shape_.c + c) * shape_.h + h) * shape_.w + w];
  }
  double operator()(std::size_t n, std::size_t c, std::size_t h, std::size_t w) const {
    return values_[((n * shape_.c + c) * shape_.h + h) * shape_.w + w];
  }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  /// The H x W plane of (n, c).
  std::span<double> plane(std::size_t n, std::size_t c);
  std::span<const double> plane(std::size_t n, std::size_t c) const;

  std::vector<double> release() && { return std::move(values_); }

  bool operator==(const Tensor4&) const = default;

 private:
  Shape4 shape_;
  std::vector<double> values_;
};

/// Planar C x H x W image. Pixel values of persisted images live in [0, 1].
class Image {
 public:
  Image() = default;
  Image(std::size_t channels, std::size_t height, std::size_t width, double fill = 0.0);
  Image(std::size_t channels, std::size_t height, std::size_t width, std::vector<double> values);

  std::size_t channels() const { return channels_; }
  std::size_t height() const { return height_; }
  std::size_t width() const { return width_; }
  std::size_t size() const { return values_.size(); }

  double& operator()(std::size_t c, std::size_t h, std::size_t w) {
    return values_[(c * height_ + h) * width_ + w];
  }
  double operator()(std::size_t c, std::size_t h, std::size_t w) const {
    return values_[(c * height_ + h) * width_ + w];
  }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }
  std::span<double> plane(std::size_t c);
  std::span<const double> plane(std::size_t c) const;

  bool same_dims(const Image& other) const {
    return channels_ == other.channels_ && height_ == other.height_ && width_ == other.width_;
  }
  bool operator==(const Image&) const = default;

 private:
  std::size_t channels_ = 0;
  std::size_t height_ = 0;
  std::size_t width_ = 0;
  std::vector<double> values_;
};

/// Clamps every value into [lo, hi].
void clip(std::span<double> values, double lo = 0.0, double hi = 1.0);

}  // namespace lfda
