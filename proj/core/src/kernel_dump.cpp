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

#include <algorithm>
#include <cmath>

#include "lfda/danet.hpp"

namespace lfda {

KernelGrid dump_da_kernels(const NetParams& params, const std::vector<Degradation>& inputs) {
  const NetConfig& cfg = params.config();
  const std::size_t k = cfg.dak;
  const std::size_t C = cfg.C;
  const auto tiles_x = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(C))));
  const std::size_t tiles_y = (C + tiles_x - 1) / tiles_x;
  const std::size_t cell_w = tiles_x * (k + 1) + 1;
  const std::size_t cell_h = tiles_y * (k + 1) + 1;

  KernelGrid grid;
  grid.rows = cfg.n_groups;
  grid.cols = inputs.size();
  grid.image = Image(1, grid.rows * cell_h, grid.cols * cell_w, 0.0);

  std::vector<DegradationRepr> reprs;
  for (const Degradation& d : inputs) reprs.push_back(kpe_forward(d.sigma_b, d.noise_level, params));

  for (std::size_t g = 0; g < grid.rows; ++g) {
    const DaBlockRef ref = da_block_ref(params, g + 1);
    for (std::size_t col = 0; col < grid.cols; ++col) {
      std::vector<double> kernels = da_block_kernels(reprs[col], ref);
      const auto [lo, hi] = std::minmax_element(kernels.begin(), kernels.end());
      const double span = *hi - *lo;
      for (std::size_t c = 0; c < C; ++c) {
        const std::size_t y0 = g * cell_h + 1 + (c / tiles_x) * (k + 1);
        const std::size_t x0 = col * cell_w + 1 + (c % tiles_x) * (k + 1);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            const double w = kernels[(c * k + i) * k + j];
            grid.image(0, y0 + i, x0 + j) = span > 0.0 ? (w - *lo) / span : 0.5;
          }
        }
      }
      grid.kernels.push_back(std::move(kernels));
    }
  }
  return grid;
}

}  // namespace lfda
