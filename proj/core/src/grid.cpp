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

#include "lfda/grid.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "lfda/danet.hpp"
#include "lfda/error.hpp"
#include "lfda/metrics.hpp"
#include "lfda/parallel.hpp"
#include "lfda/philox.hpp"

namespace lfda {

namespace {

double parse_double(std::string_view text) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw InvalidArgument("cannot parse range component '" + std::string(text) + "'");
  }
  return v;
}

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

void Range::validate() const {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
    throw InvalidArgument("range bounds must be finite");
  }
  if (!(step > 0.0)) throw InvalidArgument("range step must be > 0");
  if (start > stop) throw InvalidArgument("range start must be ≤ stop");
}

std::vector<double> Range::values() const {
  validate();
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Rounding to 1e-12 keeps 0.1 + 0.2 style drift out of the axis labels.
    out[i] = std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12;
  }
  return out;
}

Range Range::parse(std::string_view text) {
  const auto c1 = text.find(':');
  if (c1 == std::string_view::npos) {
    const double v = parse_double(text);
    return {v, v, 1.0};
  }
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw InvalidArgument("range must be start:stop:step");
  Range r{parse_double(text.substr(0, c1)), parse_double(text.substr(c1 + 1, c2 - c1 - 1)),
          parse_double(text.substr(c2 + 1))};
  r.validate();
  return r;
}

void GridSpec::validate() const {
  b_in.validate();
  n_in.validate();
  if (b_in.start < 0.0) throw InvalidArgument("sigma_b must be ≥ 0");
  if (n_in.start < 0.0) throw InvalidArgument("noise_level must be ≥ 0");
  Degradation{gt_sigma, gt_noise}.validate();
}

GridResult run_mismatch_grid(std::span<const NamedLightField> hr, const GridSpec& spec, const NetParams& params,
                             std::uint64_t seed, std::size_t threads) {
  spec.validate();
  if (hr.empty()) throw InvalidArgument("grid needs at least one scene");
  const int alpha = params.config().alpha;
  const Degradation gt{spec.gt_sigma, spec.gt_noise, alpha};

  std::vector<NamedLightField> lr;
  for (std::size_t i = 0; i < hr.size(); ++i) {
    const LfDims& d = hr[i].lf.dims();
    if (d.H % static_cast<std::size_t>(alpha) != 0 || d.W % static_cast<std::size_t>(alpha) != 0) {
      throw InvalidArgument("scene '" + hr[i].name + "' size is not a multiple of alpha");
    }
    lr.push_back({hr[i].name, degrade_lf(hr[i].lf, gt, mix64(seed ^ mix64(i)), threads)});
  }

  GridResult result;
  result.b_values = spec.b_in.values();
  result.n_values = spec.n_in.values();
  const std::size_t cells = result.b_values.size() * result.n_values.size();
  result.psnr.assign(cells, 0.0);
  parallel_for(cells, threads, [&](std::size_t cell) {
    const Degradation input{result.b_values[cell / result.n_values.size()],
                            result.n_values[cell % result.n_values.size()], alpha};
    std::vector<NamedLightField> pred;
    for (const NamedLightField& scene : lr) {
      LightField sr = network_forward(scene.lf, input, params);
      clip(sr.values());
      pred.push_back({scene.name, std::move(sr)});
    }
    result.psnr[cell] = dataset_score(pred, hr).psnr;
  });
  return result;
}

void write_grid_csv(std::ostream& out, const GridResult& result) {
  out << "b_in\\n_in";
  for (double n : result.n_values) out << ',' << fixed4(n);
  out << '\n';
  for (std::size_t bi = 0; bi < result.b_values.size(); ++bi) {
    out << fixed4(result.b_values[bi]);
    for (std::size_t ni = 0; ni < result.n_values.size(); ++ni) out << ',' << fixed4(result.at(bi, ni));
    out << '\n';
  }
}

}  // namespace lfda
