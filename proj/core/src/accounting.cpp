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

#include <string>

#include "lfda/danet.hpp"
#include "lfda/error.hpp"

namespace lfda {

namespace {

std::string module_of(const std::string& name) {
  const std::size_t first = name.find('.');
  const std::string top = name.substr(0, first);
  if (top.starts_with("group")) {
    const std::size_t second = name.find('.', first + 1);
    return name.substr(0, second);
  }
  return top;
}

}  // namespace

std::size_t count_params(const NetConfig& config) {
  std::size_t total = 0;
  for (const ParamSpec& s : param_specs(config)) total += s.size();
  return total;
}

std::vector<ModuleCount> param_breakdown(const NetConfig& config) {
  std::vector<ModuleCount> rows;
  for (const ParamSpec& s : param_specs(config)) {
    const std::string module = module_of(s.name);
    if (rows.empty() || rows.back().module != module) rows.push_back({module, 0});
    rows.back().count += s.size();
  }
  return rows;
}

FlopReport estimate_flops(const NetConfig& cfg, const LfDims& in) {
  cfg.validate();
  if (in.U != cfg.A || in.V != cfg.A) throw InvalidArgument("input angular size must equal A");
  using u64 = std::uint64_t;
  const u64 N = in.U * in.V;
  const u64 H = in.H;
  const u64 W = in.W;
  const u64 C = cfg.C;
  const u64 b = cfg.branch_channels();
  const u64 A = cfg.A;
  const u64 e = cfg.epi_spatial_kernel;
  const u64 k = cfg.dak;
  const u64 hid = cfg.da_hidden;

  FlopReport report;
  const auto add = [&](std::string module, u64 macs) {
    report.macs += macs;
    report.breakdown.emplace_back(std::move(module), macs);
  };

  u64 kpe = 0;
  for (std::size_t i = 1; i < cfg.kpe_widths.size(); ++i) kpe += u64{cfg.kpe_widths[i]} * cfg.kpe_widths[i - 1];
  add("kpe", kpe);
  add("head", N * C * H * W * 3 * 9);

  const u64 pixels = N * H * W;
  const u64 dablock = 2 * 16 * hid + hid * C * k * k + hid * C + pixels * C * k * k + pixels * C * C;
  const u64 spatial = 2 * pixels * C * C * 9;
  const u64 angular = H * W * b * C * A * A + H * W * A * A * b * b;
  const u64 epi_h = H * in.U * W * b * C * A * e + H * in.U * W * A * b * b;
  const u64 epi_v = W * in.V * H * b * C * A * e + W * in.V * H * A * b * b;
  const u64 fuse = pixels * C * (C + 3 * b);
  for (std::size_t g = 1; g <= cfg.n_groups; ++g) {
    const std::string p = "group" + std::to_string(g);
    add(p + ".dablock", dablock);
    for (std::size_t blk = 1; blk <= cfg.blocks_per_group; ++blk) {
      add(p + ".distg" + std::to_string(blk), spatial + angular + epi_h + epi_v + fuse);
    }
  }

  u64 tail = 0;
  u64 scale = 1;
  for (std::size_t s = 0; s < cfg.tail_stages(); ++s) {
    tail += N * (H * scale) * (W * scale) * 4 * C * C * 9;
    scale *= 2;
  }
  tail += N * (H * scale) * (W * scale) * 3 * C * 9;
  add("tail", tail);

  report.flops = 2 * report.macs;
  return report;
}

}  // namespace lfda
