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
#include <string_view>
#include <vector>

#include "lfda/tensor.hpp"

namespace lfda {

/// Angular (U x V), channel and spatial (H x W) extents of a light field.
struct LfDims {
  std::size_t U = 0;
  std::size_t V = 0;
  std::size_t C = 0;
  std::size_t H = 0;
  std::size_t W = 0;

  std::size_t views() const { return U * V; }
  std::size_t size() const { return U * V * C * H * W; }
  bool operator==(const LfDims&) const = default;
};

/// U x V grid of C x H x W views, stored view-major then planar:
/// index = (((u * V + v) * C + c) * H + h) * W + w.
///
/// RGB light fields use C = 3; network features reuse the same type with
/// C equal to the feature width. Because the layout coincides with an
/// (UV, C, H, W) tensor, conversion to and from Tensor4 is a move.
class LightField {
 public:
  LightField() = default;
  explicit LightField(LfDims dims, double fill = 0.0);
  LightField(LfDims dims, std::vector<double> values);

  const LfDims& dims() const { return dims_; }

  double& operator()(std::size_t u, std::size_t v, std::size_t c, std::size_t h, std::size_t w) {
    return values_[index(u, v, c, h, w)];
  }
  double operator()(std::size_t u, std::size_t v, std::size_t c, std::size_t h, std::size_t w) const {
    return values_[index(u, v, c, h, w)];
  }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  Image view(std::size_t u, std::size_t v) const;
  void set_view(std::size_t u, std::size_t v, const Image& image);

  /// (UV, C, H, W) copy / move.
  Tensor4 to_tensor() const&;
  Tensor4 to_tensor() &&;
  static LightField from_tensor(Tensor4 t, std::size_t U, std::size_t V);

  /// Throws InvalidArgument if any sample is NaN or infinite.
  void check_finite() const;

  bool operator==(const LightField&) const = default;

 private:
  std::size_t index(std::size_t u, std::size_t v, std::size_t c, std::size_t h, std::size_t w) const {
    return (((u * dims_.V + v) * dims_.C + c) * dims_.H + h) * dims_.W + w;
  }

  LfDims dims_;
  std::vector<double> values_;
};

/// The four layouts a Distg-Block convolves over. The folded batch index
/// and plane axes are:
///   spatial  (u*V + v, C, H, W)
///   angular  (h*W + w, C, U, V)
///   epi_h    (h*U + u, C, V, W)
///   epi_v    (w*V + v, C, U, H)
enum class Branch { spatial, angular, epi_h, epi_v };

Branch parse_branch(std::string_view name);
std::string_view branch_name(Branch branch);

struct BranchView {
  Branch branch = Branch::spatial;
  Tensor4 data;
};

BranchView branch_view(const LightField& lf, Branch branch);

/// Exact inverse of branch_view. Throws InvalidArgument when `dims` cannot
/// have produced `bv`.
LightField inverse_branch_view(const BranchView& bv, const LfDims& dims);

/// Macro-pixel image: pixel (u, v, h, w) lands at (h*U + u, w*V + v).
Image to_macpi(const LightField& lf);
LightField from_macpi(const Image& macpi, std::size_t U, std::size_t V);

/// Horizontal EPI for fixed (u, h): C x V x W, row v is row h of view (u, v).
Image extract_epi_h(const LightField& lf, std::size_t u, std::size_t h);
/// Vertical EPI for fixed (v, w): C x U x H, row u is column w of view (u, v).
Image extract_epi_v(const LightField& lf, std::size_t v, std::size_t w);

/// Sub-pixel rearrangement (N, r*r*C, P, Q) -> (N, C, r*P, r*Q) with
/// out(n, c, p*r + i, q*r + j) = in(n, c*r*r + i*r + j, p, q).
Tensor4 pixel_shuffle_2d(const Tensor4& x, std::size_t r);
Tensor4 pixel_unshuffle_2d(const Tensor4& x, std::size_t r);

enum class ShuffleAxis { P, Q };

/// Single-axis rearrangement (N, r*C, P, Q) -> (N, C, r*P, Q) for axis P
/// (or (N, C, P, r*Q) for axis Q) with out(.., c, p*r + i, ..) = in(.., c*r + i, p, ..).
Tensor4 pixel_shuffle_1d(const Tensor4& x, std::size_t r, ShuffleAxis axis);
Tensor4 pixel_unshuffle_1d(const Tensor4& x, std::size_t r, ShuffleAxis axis);

}  // namespace lfda
