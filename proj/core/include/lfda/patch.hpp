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
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "lfda/augment.hpp"
#include "lfda/degrade.hpp"
#include "lfda/light_field.hpp"

namespace lfda {

/// Training-patch geometry on the HR grid: 152-pixel windows at stride 32,
/// of which the central 128 pixels (and the matching LR centre) are kept.
struct PatchGeometry {
  static constexpr std::size_t kWindow = 152;
  static constexpr std::size_t kStride = 32;
  static constexpr std::size_t kCrop = 128;
  static constexpr std::size_t kCropOffset = (kWindow - kCrop) / 2;

  /// Number of window positions along an axis of length `extent`.
  static std::size_t positions(std::size_t extent);
};

struct PatchPair {
  LightField hr;  // kCrop x kCrop per view
  LightField lr;  // kCrop/alpha x kCrop/alpha per view
  std::string scene;
  std::size_t top = 0;   // HR window origin
  std::size_t left = 0;
  Degradation degradation;
  std::uint64_t seed = 0;  // noise seed used for this patch
  int aug_code = 0;
};

/// Degrades every 152-window of `scene_hr` with `d` and returns the
/// centrally-cropped HR/LR pairs in raster order of window origins.
std::vector<PatchPair> patchify(const LightField& scene_hr, const Degradation& d, std::uint64_t seed,
                                const std::string& scene_name = {}, std::size_t threads = 1);

/// As patchify, but samples an independent degradation per patch from `rng`.
std::vector<PatchPair> patchify_sampled(const LightField& scene_hr, std::mt19937_64& rng, std::uint64_t seed,
                                        const std::string& scene_name = {}, std::size_t threads = 1);

/// Applies `code` jointly to the HR and LR halves. aug_code records the
/// composition with any augmentation already applied.
PatchPair augment(const PatchPair& pair, AugCode code);

/// sigma_b ~ U[0, 4], noise_level ~ U[0, 75], alpha = 4.
Degradation sample_degradation(std::mt19937_64& rng);

/// Writes patches as pairs of scene directories plus index.json.
void write_patch_store(const std::filesystem::path& dir, const std::vector<PatchPair>& patches);
std::vector<PatchPair> read_patch_store(const std::filesystem::path& dir);

}  // namespace lfda
