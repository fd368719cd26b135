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

#include "lfda/light_field.hpp"

#include <cmath>
#include <string>

#include "lfda/error.hpp"

namespace lfda {

namespace {

std::string dims_string(const LfDims& d) {
  return std::to_string(d.U) + "x" + std::to_string(d.V) + "x" + std::to_string(d.C) + "x" +
         std::to_string(d.H) + "x" + std::to_string(d.W);
}

Shape4 branch_shape(const LfDims& d, Branch branch) {
  switch (branch) {
    case Branch::spatial: return {d.U * d.V, d.C, d.H, d.W};
    case Branch::angular: return {d.H * d.W, d.C, d.U, d.V};
    case Branch::epi_h: return {d.H * d.U, d.C, d.V, d.W};
    case Branch::epi_v: return {d.W * d.V, d.C, d.U, d.H};
  }
  throw InvalidArgument("unknown branch");
}

// Calls fn(lf_index, branch_index) for every element.
template <typename Fn>
void for_each_branch_pair(const LfDims& d, Branch branch, Fn&& fn) {
  const Shape4 s = branch_shape(d, branch);
  std::size_t lf_index = 0;
  for (std::size_t u = 0; u < d.U; ++u) {
    for (std::size_t v = 0; v < d.V; ++v) {
      for (std::size_t c = 0; c < d.C; ++c) {
        for (std::size_t h = 0; h < d.H; ++h) {
          for (std::size_t w = 0; w < d.W; ++w, ++lf_index) {
            std::size_t n = 0, p = 0, q = 0;
            switch (branch) {
              case Branch::spatial: n = u * d.V + v; p = h; q = w; break;
              case Branch::angular: n = h * d.W + w; p = u; q = v; break;
              case Branch::epi_h: n = h * d.U + u; p = v; q = w; break;
              case Branch::epi_v: n = w * d.V + v; p = u; q = h; break;
            }
            fn(lf_index, ((n * s.c + c) * s.h + p) * s.w + q);
          }
        }
      }
    }
  }
}

}  // namespace

LightField::LightField(LfDims dims, double fill) : dims_(dims), values_(dims.size(), fill) {}

LightField::LightField(LfDims dims, std::vector<double> values) : dims_(dims), values_(std::move(values)) {
  if (values_.size() != dims_.size()) {
    throw InvalidArgument("LightField: value count does not match dims " + dims_string(dims_));
  }
}

Image LightField::view(std::size_t u, std::size_t v) const {
  if (u >= dims_.U || v >= dims_.V) throw InvalidArgument("LightField::view: index out of range");
  const std::size_t n = dims_.C * dims_.H * dims_.W;
  const auto first = values_.begin() + static_cast<std::ptrdiff_t>((u * dims_.V + v) * n);
  return Image(dims_.C, dims_.H, dims_.W, std::vector<double>(first, first + static_cast<std::ptrdiff_t>(n)));
}

void LightField::set_view(std::size_t u, std::size_t v, const Image& image) {
  if (u >= dims_.U || v >= dims_.V) throw InvalidArgument("LightField::set_view: index out of range");
  if (image.channels() != dims_.C || image.height() != dims_.H || image.width() != dims_.W) {
    throw InvalidArgument("LightField::set_view: image dims do not match the light field");
  }
  const std::size_t n = dims_.C * dims_.H * dims_.W;
  std::copy(image.values().begin(), image.values().end(),
            values_.begin() + static_cast<std::ptrdiff_t>((u * dims_.V + v) * n));
}

Tensor4 LightField::to_tensor() const& {
  return Tensor4({dims_.U * dims_.V, dims_.C, dims_.H, dims_.W}, values_);
}

Tensor4 LightField::to_tensor() && {
  return Tensor4({dims_.U * dims_.V, dims_.C, dims_.H, dims_.W}, std::move(values_));
}

LightField LightField::from_tensor(Tensor4 t, std::size_t U, std::size_t V) {
  const Shape4 s = t.shape();
  if (s.n != U * V) {
    throw InvalidArgument("LightField::from_tensor: batch " + std::to_string(s.n) + " != U*V = " +
                          std::to_string(U * V));
  }
  return LightField({U, V, s.c, s.h, s.w}, std::move(t).release());
}

void LightField::check_finite() const {
  for (double x : values_) {
    if (!std::isfinite(x)) throw InvalidArgument("LightField contains a non-finite sample");
  }
}

Branch parse_branch(std::string_view name) {
  if (name == "spatial") return Branch::spatial;
  if (name == "angular") return Branch::angular;
  if (name == "epi_h") return Branch::epi_h;
  if (name == "epi_v") return Branch::epi_v;
  throw InvalidArgument("unknown branch tag '" + std::string(name) + "'");
}

std::string_view branch_name(Branch branch) {
  switch (branch) {
    case Branch::spatial: return "spatial";
    case Branch::angular: return "angular";
    case Branch::epi_h: return "epi_h";
    case Branch::epi_v: return "epi_v";
  }
  return "?";
}

BranchView branch_view(const LightField& lf, Branch branch) {
  const LfDims& d = lf.dims();
  if (branch == Branch::spatial) return {branch, lf.to_tensor()};
  Tensor4 out(branch_shape(d, branch));
  auto src = lf.values();
  auto dst = out.values();
  for_each_branch_pair(d, branch, [&](std::size_t i, std::size_t j) { dst[j] = src[i]; });
  return {branch, std::move(out)};
}

LightField inverse_branch_view(const BranchView& bv, const LfDims& dims) {
  const Shape4 expected = branch_shape(dims, bv.branch);
  if (!(bv.data.shape() == expected)) {
    throw InvalidArgument("inverse_branch_view: " + std::string(branch_name(bv.branch)) +
                          " data shape does not match light field dims " + dims_string(dims));
  }
  LightField lf(dims);
  auto src = bv.data.values();
  auto dst = lf.values();
  for_each_branch_pair(dims, bv.branch, [&](std::size_t i, std::size_t j) { dst[i] = src[j]; });
  return lf;
}

Image to_macpi(const LightField& lf) {
  const LfDims& d = lf.dims();
  Image out(d.C, d.H * d.U, d.W * d.V);
  for (std::size_t u = 0; u < d.U; ++u)
    for (std::size_t v = 0; v < d.V; ++v)
      for (std::size_t c = 0; c < d.C; ++c)
        for (std::size_t h = 0; h < d.H; ++h)
          for (std::size_t w = 0; w < d.W; ++w) out(c, h * d.U + u, w * d.V + v) = lf(u, v, c, h, w);
  return out;
}

LightField from_macpi(const Image& macpi, std::size_t U, std::size_t V) {
  if (U == 0 || V == 0 || macpi.height() % U != 0 || macpi.width() % V != 0) {
    throw InvalidArgument("from_macpi: image size is not a multiple of the angular resolution");
  }
  const LfDims d{U, V, macpi.channels(), macpi.height() / U, macpi.width() / V};
  LightField lf(d);
  for (std::size_t u = 0; u < d.U; ++u)
    for (std::size_t v = 0; v < d.V; ++v)
      for (std::size_t c = 0; c < d.C; ++c)
        for (std::size_t h = 0; h < d.H; ++h)
          for (std::size_t w = 0; w < d.W; ++w) lf(u, v, c, h, w) = macpi(c, h * d.U + u, w * d.V + v);
  return lf;
}

Image extract_epi_h(const LightField& lf, std::size_t u, std::size_t h) {
  const LfDims& d = lf.dims();
  if (u >= d.U || h >= d.H) throw InvalidArgument("extract_epi_h: (u, h) out of range");
  Image out(d.C, d.V, d.W);
  for (std::size_t c = 0; c < d.C; ++c)
    for (std::size_t v = 0; v < d.V; ++v)
      for (std::size_t w = 0; w < d.W; ++w) out(c, v, w) = lf(u, v, c, h, w);
  return out;
}

Image extract_epi_v(const LightField& lf, std::size_t v, std::size_t w) {
  const LfDims& d = lf.dims();
  if (v >= d.V || w >= d.W) throw InvalidArgument("extract_epi_v: (v, w) out of range");
  Image out(d.C, d.U, d.H);
  for (std::size_t c = 0; c < d.C; ++c)
    for (std::size_t u = 0; u < d.U; ++u)
      for (std::size_t h = 0; h < d.H; ++h) out(c, u, h) = lf(u, v, c, h, w);
  return out;
}

Tensor4 pixel_shuffle_2d(const Tensor4& x, std::size_t r) {
  const Shape4 s = x.shape();
  if (r == 0 || s.c % (r * r) != 0) {
    throw InvalidArgument("pixel_shuffle_2d: channels " + std::to_string(s.c) + " not divisible by r^2 = " +
                          std::to_string(r * r));
  }
  const std::size_t co = s.c / (r * r);
  Tensor4 out({s.n, co, s.h * r, s.w * r});
  for (std::size_t n = 0; n < s.n; ++n)
    for (std::size_t c = 0; c < co; ++c)
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          for (std::size_t p = 0; p < s.h; ++p)
            for (std::size_t q = 0; q < s.w; ++q) out(n, c, p * r + i, q * r + j) = x(n, c * r * r + i * r + j, p, q);
  return out;
}

Tensor4 pixel_unshuffle_2d(const Tensor4& x, std::size_t r) {
  const Shape4 s = x.shape();
  if (r == 0 || s.h % r != 0 || s.w % r != 0) {
    throw InvalidArgument("pixel_unshuffle_2d: spatial size not divisible by r");
  }
  Tensor4 out({s.n, s.c * r * r, s.h / r, s.w / r});
  for (std::size_t n = 0; n < s.n; ++n)
    for (std::size_t c = 0; c < s.c; ++c)
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          for (std::size_t p = 0; p < s.h / r; ++p)
            for (std::size_t q = 0; q < s.w / r; ++q) out(n, c * r * r + i * r + j, p, q) = x(n, c, p * r + i, q * r + j);
  return out;
}

Tensor4 pixel_shuffle_1d(const Tensor4& x, std::size_t r, ShuffleAxis axis) {
  const Shape4 s = x.shape();
  if (r == 0 || s.c % r != 0) {
    throw InvalidArgument("pixel_shuffle_1d: channels " + std::to_string(s.c) + " not divisible by r = " +
                          std::to_string(r));
  }
  const std::size_t co = s.c / r;
  const bool along_p = axis == ShuffleAxis::P;
  Tensor4 out({s.n, co, along_p ? s.h * r : s.h, along_p ? s.w : s.w * r});
  for (std::size_t n = 0; n < s.n; ++n)
    for (std::size_t c = 0; c < co; ++c)
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t p = 0; p < s.h; ++p)
          for (std::size_t q = 0; q < s.w; ++q) {
            const double value = x(n, c * r + i, p, q);
            if (along_p) {
              out(n, c, p * r + i, q) = value;
            } else {
              out(n, c, p, q * r + i) = value;
            }
          }
  return out;
}

Tensor4 pixel_unshuffle_1d(const Tensor4& x, std::size_t r, ShuffleAxis axis) {
  const Shape4 s = x.shape();
  const bool along_p = axis == ShuffleAxis::P;
  if (r == 0 || (along_p ? s.h : s.w) % r != 0) {
    throw InvalidArgument("pixel_unshuffle_1d: axis length not divisible by r");
  }
  const std::size_t ph = along_p ? s.h / r : s.h;
  const std::size_t qw = along_p ? s.w : s.w / r;
  Tensor4 out({s.n, s.c * r, ph, qw});
  for (std::size_t n = 0; n < s.n; ++n)
    for (std::size_t c = 0; c < s.c; ++c)
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t p = 0; p < ph; ++p)
          for (std::size_t q = 0; q < qw; ++q)
            out(n, c * r + i, p, q) = along_p ? x(n, c, p * r + i, q) : x(n, c, p, q * r + i);
  return out;
}

}  // namespace lfda
