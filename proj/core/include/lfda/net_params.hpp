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
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "lfda/nn_ops.hpp"

namespace lfda {

/// Architecture hyper-parameters of the reference network.
struct NetConfig {
  std::size_t A = 5;                 // angular resolution (U = V = A)
  std::size_t C = 64;                // feature channels
  std::size_t n_groups = 4;          // residual groups
  std::size_t blocks_per_group = 4;  // Distg-Blocks per group
  std::size_t dak = 3;               // DA-Conv kernel size
  std::vector<std::size_t> kpe_widths{441, 256, 128, 64, 32, 15};
  int alpha = 4;                     // upscale factor (power of two)
  double leaky_slope = 0.1;
  std::size_t da_hidden = 64;        // hidden width of the kernel-generator and attention MLPs
  std::size_t epi_spatial_kernel = 5;  // spatial extent of the EPI-branch convolution

  std::size_t branch_channels() const { return C / 4; }
  std::size_t tail_stages() const;
  void validate() const;
  bool operator==(const NetConfig&) const = default;
};

struct ParamTensor {
  std::vector<std::size_t> shape;
  std::vector<double> values;
  std::size_t fan_in = 0;
  bool operator==(const ParamTensor&) const = default;
};

struct ParamSpec {
  std::string name;
  std::vector<std::size_t> shape;
  std::size_t fan_in = 0;

  std::size_t size() const;
};

/// Every parameter of `config` in a fixed order. Names follow the module
/// paths kpe.fc{i}, head, group{g}.dablock.*, group{g}.distg{b}.*, tail.*
/// with a ".weight" or ".bias" suffix; indices are 1-based.
std::vector<ParamSpec> param_specs(const NetConfig& config);

/// Named parameter arrays plus the config they were built for.
class NetParams {
 public:
  /// All-zero parameters.
  explicit NetParams(NetConfig config);

  const NetConfig& config() const { return config_; }
  const std::map<std::string, ParamTensor>& tensors() const { return tensors_; }

  const ParamTensor& at(const std::string& name) const;
  ParamTensor& at(const std::string& name);

  nn::ConvRef conv(const std::string& module) const;
  nn::LinearRef linear(const std::string& module) const;

  std::size_t total_count() const;

  /// Sets every value of every tensor whose name starts with `prefix`.
  void fill(const std::string& prefix, double value);

  bool operator==(const NetParams&) const = default;

 private:
  NetConfig config_;
  std::map<std::string, ParamTensor> tensors_;
};

/// Uniform fan-in scaled initialization: weights in +-sqrt(6 / fan_in),
/// biases in +-1/sqrt(fan_in). Deterministic in `seed`.
NetParams init_params(std::uint64_t seed, const NetConfig& config);

inline constexpr const char* kParamsVersion = "lfdanet-ref/1";

/// Container: 8-byte little-endian header length, a UTF-8 JSON header
///   {"version": "lfdanet-ref/1", "config": {...},
///    "tensors": {name: {"shape": [...], "dtype": "f64", "offset": bytes}}}
/// and then the little-endian float64 arrays (offsets relative to the end of
/// the header).
void save_params(const std::filesystem::path& path, const NetParams& params);
NetParams load_params(const std::filesystem::path& path);

}  // namespace lfda
