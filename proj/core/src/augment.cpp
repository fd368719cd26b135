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

#include "lfda/augment.hpp"

#include <string>

#include "lfda/error.hpp"

namespace lfda {

namespace {

constexpr std::array<std::array<int, 3>, 6> kPerms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

using Mat = std::array<int, 4>;  // row-major 2x2

constexpr Mat mul(const Mat& a, const Mat& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

constexpr Mat kIdentity{1, 0, 0, 1};
constexpr Mat kHflip{1, 0, 0, -1};
constexpr Mat kVflip{-1, 0, 0, 1};
constexpr Mat kRot90{0, 1, -1, 0};

// Maps an output index to the source index along both axes of one plane.
struct AxisMap {
  Mat inv;  // transpose of the forward matrix
  std::ptrdiff_t in_rows, in_cols, out_rows, out_cols;

  std::pair<std::size_t, std::size_t> source(std::size_t r, std::size_t c) const {
    const std::ptrdiff_t R = 2 * static_cast<std::ptrdiff_t>(r) - (out_rows - 1);
    const std::ptrdiff_t C = 2 * static_cast<std::ptrdiff_t>(c) - (out_cols - 1);
    const std::ptrdiff_t sr = inv[0] * R + inv[1] * C;
    const std::ptrdiff_t sc = inv[2] * R + inv[3] * C;
    return {static_cast<std::size_t>((sr + in_rows - 1) / 2), static_cast<std::size_t>((sc + in_cols - 1) / 2)};
  }
};

}  // namespace

AugCode::AugCode(int code) : code_(code) {
  if (code < 0 || code >= kCount) throw InvalidArgument("augmentation code must be in [0, 48)");
}

std::array<int, 3> AugCode::rgb_perm() const { return kPerms[static_cast<std::size_t>(code_ % 6)]; }

std::array<int, 4> AugCode::matrix() const {
  Mat m = kIdentity;
  if (hflip()) m = mul(kHflip, m);
  if (vflip()) m = mul(kVflip, m);
  if (rot90()) m = mul(kRot90, m);
  return m;
}

AugCode AugCode::from_parts(const std::array<int, 4>& matrix, const std::array<int, 3>& perm) {
  for (int geo = 0; geo < 8; ++geo) {
    for (int p = 0; p < 6; ++p) {
      const AugCode candidate(geo * 6 + p);
      if (candidate.matrix() == matrix && candidate.rgb_perm() == perm) return candidate;
    }
  }
  throw InvalidArgument("not an element of the augmentation group");
}

AugCode AugCode::inverse() const {
  const Mat m = matrix();
  const Mat transposed{m[0], m[2], m[1], m[3]};
  const auto p = rgb_perm();
  std::array<int, 3> inv{};
  for (int c = 0; c < 3; ++c) inv[static_cast<std::size_t>(p[static_cast<std::size_t>(c)])] = c;
  return from_parts(transposed, inv);
}

AugCode AugCode::then(AugCode next) const {
  const auto pa = rgb_perm();
  const auto pb = next.rgb_perm();
  std::array<int, 3> p{};
  for (std::size_t c = 0; c < 3; ++c) p[c] = pa[static_cast<std::size_t>(pb[c])];
  return from_parts(mul(next.matrix(), matrix()), p);
}

LightField augment(const LightField& lf, AugCode code) {
  const LfDims& d = lf.dims();
  if (code.rot90() && (d.H != d.W || d.U != d.V)) {
    throw InvalidArgument("augment: rot90 requires square views and a square angular grid");
  }
  const auto perm = code.rgb_perm();
  const bool permutes = code.code() % 6 != 0;
  if (permutes && d.C != 3) throw InvalidArgument("augment: channel permutation needs 3 channels");

  const Mat m = code.matrix();
  const Mat inv{m[0], m[2], m[1], m[3]};
  const auto sd = [](std::size_t x) { return static_cast<std::ptrdiff_t>(x); };
  const AxisMap angular{inv, sd(d.U), sd(d.V), sd(d.U), sd(d.V)};
  const AxisMap spatial{inv, sd(d.H), sd(d.W), sd(d.H), sd(d.W)};

  LightField out(d);
  for (std::size_t u = 0; u < d.U; ++u) {
    for (std::size_t v = 0; v < d.V; ++v) {
      const auto [su, sv] = angular.source(u, v);
      for (std::size_t c = 0; c < d.C; ++c) {
        const std::size_t sc = permutes ? static_cast<std::size_t>(perm[c]) : c;
        for (std::size_t h = 0; h < d.H; ++h) {
          for (std::size_t w = 0; w < d.W; ++w) {
            const auto [sh, sw] = spatial.source(h, w);
            out(u, v, c, h, w) = lf(su, sv, sc, sh, sw);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace lfda
