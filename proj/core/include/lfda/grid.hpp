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
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "lfda/degrade.hpp"
#include "lfda/net_params.hpp"
#include "lfda/scene.hpp"

namespace lfda {

/// Inclusive arithmetic progression start, start + step, ..., <= stop.
struct Range {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  void validate() const;
  std::vector<double> values() const;
  /// "start:stop:step" or a single value.
  static Range parse(std::string_view text);
};

/// Input-degradation sweep against a fixed ground-truth degradation.
struct GridSpec {
  Range b_in{0.0, 3.0, 0.3};
  Range n_in{0.0, 50.0, 5.0};
  double gt_sigma = 0.0;
  double gt_noise = 0.0;

  void validate() const;
};

struct GridResult {
  std::vector<double> b_values;
  std::vector<double> n_values;
  std::vector<double> psnr;  // b-major

  double at(std::size_t bi, std::size_t ni) const { return psnr[bi * n_values.size() + ni]; }
};

/// Degrades every HR scene once with the ground-truth degradation, then for
/// each (B_in, N_in) cell runs the network with the input degradation,
/// clips the output to [0, 1] and records the dataset PSNR.
GridResult run_mismatch_grid(std::span<const NamedLightField> hr, const GridSpec& spec, const NetParams& params,
                             std::uint64_t seed, std::size_t threads = 1);

/// First row "b_in\n_in,<n values>" (a literal backslash), then one row per
/// B_in value; four decimals.
void write_grid_csv(std::ostream& out, const GridResult& result);

}  // namespace lfda
