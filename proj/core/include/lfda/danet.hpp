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
#include <map>
#include <string>
#include <vector>

#include "lfda/degrade.hpp"
#include "lfda/light_field.hpp"
#include "lfda/net_params.hpp"
#include "lfda/nn_ops.hpp"
#include "lfda/tensor.hpp"

namespace lfda {

/// Compact degradation code: 15 learned blur features followed by n/75.
struct DegradationRepr {
  static constexpr std::size_t kSize = 16;
  static constexpr double kNoiseScale = 75.0;

  std::array<double, kSize> v{};

  bool operator==(const DegradationRepr&) const = default;
};

DegradationRepr kpe_forward(double sigma_b, double noise_level, const NetParams& params);

/// Weights of one degradation-adaptive block.
struct DaBlockRef {
  nn::LinearRef kgen_fc1;
  nn::LinearRef kgen_fc2;
  nn::ConvRef conv1x1;
  nn::LinearRef ca_fc1;
  nn::LinearRef ca_fc2;
  std::size_t k = 3;
  double slope = 0.1;
};

/// Block `group` (1-based) of `params`.
DaBlockRef da_block_ref(const NetParams& params, std::size_t group);

/// C consecutive k x k kernels generated for `v_dg`.
std::vector<double> da_block_kernels(const DegradationRepr& v_dg, const DaBlockRef& ref);

/// feat is (views, C, P, Q); each view is processed independently.
Tensor4 da_block_forward(const Tensor4& feat, const DegradationRepr& v_dg, const DaBlockRef& ref,
                         std::size_t threads = 1);

struct DaBlockGrads {
  Tensor4 feat;
  std::array<double, DegradationRepr::kSize> v_dg{};
  /// Keyed by "<layer>.weight" / "<layer>.bias" with layer in
  /// kgen_fc1, kgen_fc2, conv1x1, ca_fc1, ca_fc2.
  std::map<std::string, std::vector<double>> params;
};

DaBlockGrads da_block_backward(const Tensor4& feat, const DegradationRepr& v_dg, const DaBlockRef& ref,
                               const Tensor4& upstream);

/// Weights of one four-branch block.
struct DistgBlockRef {
  nn::ConvRef spa1;
  nn::ConvRef spa2;
  nn::ConvRef ang_conv;
  nn::ConvRef ang_up;
  nn::ConvRef epih_conv;
  nn::ConvRef epih_up;
  nn::ConvRef epiv_conv;
  nn::ConvRef epiv_up;
  nn::ConvRef fuse;
  double slope = 0.1;
};

/// Block `block` (1-based) of group `group` (1-based).
DistgBlockRef distg_block_ref(const NetParams& params, std::size_t group, std::size_t block);

/// Input and output are U x V feature light fields with U = V equal to the
/// angular kernel size of `ref`.
LightField distg_block_forward(const LightField& feat, const DistgBlockRef& ref, std::size_t threads = 1);

/// RGB U x V x H x W light field in, U x V x alpha*H x alpha*W out. The
/// result is not clipped.
LightField network_forward(const LightField& lf_lr, const Degradation& d, const NetParams& params,
                           std::size_t threads = 1);

// Accounting.

struct ModuleCount {
  std::string module;
  std::size_t count = 0;
};

std::size_t count_params(const NetConfig& config);
/// Per module path (kpe, head, group{g}.dablock, group{g}.distg{b}, tail).
std::vector<ModuleCount> param_breakdown(const NetConfig& config);

struct FlopReport {
  std::uint64_t macs = 0;
  std::uint64_t flops = 0;  // 2 * macs
  std::vector<std::pair<std::string, std::uint64_t>> breakdown;  // MACs per module
};

/// Multiply-accumulates of every convolution and fully connected layer of
/// network_forward for a U x V x H x W RGB input (bias additions, activations
/// and the bicubic skip are not counted).
FlopReport estimate_flops(const NetConfig& config, const LfDims& input);

// Kernel visualization.

struct KernelGrid {
  std::size_t rows = 0;  // DA-Blocks
  std::size_t cols = 0;  // degradation inputs
  Image image;           // single-channel mosaic, values in [0, 1]
  std::vector<std::vector<double>> kernels;  // row-major cells, C*k*k each
};

KernelGrid dump_da_kernels(const NetParams& params, const std::vector<Degradation>& inputs);

}  // namespace lfda
