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

#include "lfda/light_field.hpp"

namespace lfda {

/// One of the 48 joint spatial-angular augmentations: {hflip} x {vflip} x
/// {rot90} x S3 channel permutations. Code layout:
///   perm = code % 6, hflip = bit (code / 6), vflip = bit (code / 12), rot90 = code / 24.
/// hflip mirrors W together with V, vflip mirrors H together with U, and
/// rot90 rotates (H, W) and (U, V) the same way, so EPI line slopes survive.
class AugCode {
 public:
  static constexpr int kCount = 48;

  constexpr AugCode() = default;
  explicit AugCode(int code);

  int code() const { return code_; }
  bool hflip() const { return (code_ / 6) % 2 == 1; }
  bool vflip() const { return (code_ / 12) % 2 == 1; }
  bool rot90() const { return code_ / 24 == 1; }
  /// Output channel c takes input channel rgb_perm()[c].
  std::array<int, 3> rgb_perm() const;

  /// Signed-permutation matrix acting on centered (row, col) coordinates.
  std::array<int, 4> matrix() const;

  AugCode inverse() const;
  /// The code equivalent to applying *this first and then `next`.
  AugCode then(AugCode next) const;

  bool operator==(const AugCode&) const = default;

 private:
  static AugCode from_parts(const std::array<int, 4>& matrix, const std::array<int, 3>& perm);

  int code_ = 0;
};

/// Applies `code` to every view. Throws InvalidArgument if rot90 is requested
/// on non-square views or a non-square angular grid, or if C != 3 with a
/// non-identity channel permutation.
LightField augment(const LightField& lf, AugCode code);

}  // namespace lfda
