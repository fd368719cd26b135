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
#include <optional>
#include <string>
#include <vector>

#include "lfda/degrade.hpp"
#include "lfda/light_field.hpp"

namespace lfda {

struct DegradationRecord {
  Degradation degradation;
  std::uint64_t seed = 0;

  bool operator==(const DegradationRecord&) const = default;
};

/// On-disk scene: a directory holding view_{u}_{v}.png files and meta.json
///   {"name": str, "U": int, "V": int, "H": int, "W": int,
///    "degradation": {"sigma_b", "noise_level", "alpha", "seed"} | null}
struct SceneManifest {
  std::string name;
  std::size_t U = 0;
  std::size_t V = 0;
  std::size_t H = 0;
  std::size_t W = 0;
  std::optional<DegradationRecord> degradation;
  /// Row-major (u * V + v) view file paths.
  std::vector<std::filesystem::path> views;

  const std::filesystem::path& view_path(std::size_t u, std::size_t v) const { return views.at(u * V + v); }
};

inline constexpr const char* kMetaFile = "meta.json";

std::string view_file_name(std::size_t u, std::size_t v);

/// Parses meta.json in `dir` and resolves view paths. Throws IoError when a
/// referenced view is missing (the message names it) or meta.json is malformed.
SceneManifest read_manifest(const std::filesystem::path& dir);

LightField load_scene(const SceneManifest& manifest);
LightField load_scene(const std::filesystem::path& dir);

/// Writes every view and meta.json into `dir` (created if needed).
SceneManifest save_scene(const LightField& lf, const std::filesystem::path& dir, const std::string& name,
                         const std::optional<DegradationRecord>& degradation = std::nullopt);

/// Keeps the central A x A views (e.g. 5x5 of a 9x9 capture).
SceneManifest central_views(const SceneManifest& manifest, std::size_t A);

/// True if `dir` itself is a scene (contains meta.json).
bool is_scene_dir(const std::filesystem::path& dir);

/// Scene directories under `root`, sorted by name. A scene directory passed
/// directly is returned as a one-element list.
std::vector<std::filesystem::path> list_scenes(const std::filesystem::path& root);

struct NamedLightField {
  std::string name;
  LightField lf;
};

}  // namespace lfda
