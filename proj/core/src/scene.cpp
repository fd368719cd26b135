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

#include "lfda/scene.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "lfda/error.hpp"
#include "lfda/image_io.hpp"

namespace lfda {

namespace fs = std::filesystem;
using nlohmann::json;

std::string view_file_name(std::size_t u, std::size_t v) {
  return "view_" + std::to_string(u) + "_" + std::to_string(v) + ".png";
}

SceneManifest read_manifest(const fs::path& dir) {
  const fs::path meta_path = dir / kMetaFile;
  std::ifstream in(meta_path);
  if (!in) throw IoError("missing " + meta_path.string());
  SceneManifest m;
  try {
    const json meta = json::parse(in);
    m.name = meta.at("name").get<std::string>();
    m.U = meta.at("U").get<std::size_t>();
    m.V = meta.at("V").get<std::size_t>();
    m.H = meta.at("H").get<std::size_t>();
    m.W = meta.at("W").get<std::size_t>();
    if (auto it = meta.find("degradation"); it != meta.end() && !it->is_null()) {
      DegradationRecord rec;
      rec.degradation.sigma_b = it->at("sigma_b").get<double>();
      rec.degradation.noise_level = it->at("noise_level").get<double>();
      rec.degradation.alpha = it->at("alpha").get<int>();
      rec.seed = it->at("seed").get<std::uint64_t>();
      m.degradation = rec;
    }
  } catch (const json::exception& e) {
    throw IoError("malformed " + meta_path.string() + ": " + e.what());
  }
  if (m.U == 0 || m.V == 0) throw IoError(meta_path.string() + ": angular resolution must be positive");
  for (std::size_t u = 0; u < m.U; ++u) {
    for (std::size_t v = 0; v < m.V; ++v) {
      fs::path p = dir / view_file_name(u, v);
      if (!fs::exists(p)) {
        throw IoError("scene '" + m.name + "' is missing view (" + std::to_string(u) + "," + std::to_string(v) +
                      "): " + p.string());
      }
      m.views.push_back(std::move(p));
    }
  }
  return m;
}

LightField load_scene(const SceneManifest& m) {
  LightField lf({m.U, m.V, 3, m.H, m.W});
  for (std::size_t u = 0; u < m.U; ++u) {
    for (std::size_t v = 0; v < m.V; ++v) {
      const Image img = read_png(m.view_path(u, v));
      if (img.height() != m.H || img.width() != m.W) {
        throw IoError("scene '" + m.name + "' view (" + std::to_string(u) + "," + std::to_string(v) + ") is " +
                      std::to_string(img.height()) + "x" + std::to_string(img.width()) + ", meta.json says " +
                      std::to_string(m.H) + "x" + std::to_string(m.W));
      }
      lf.set_view(u, v, img);
    }
  }
  return lf;
}

LightField load_scene(const fs::path& dir) { return load_scene(read_manifest(dir)); }

SceneManifest save_scene(const LightField& lf, const fs::path& dir, const std::string& name,
                         const std::optional<DegradationRecord>& degradation) {
  const LfDims& d = lf.dims();
  if (d.C != 3) throw InvalidArgument("save_scene: scenes are stored as RGB");
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  SceneManifest m{name, d.U, d.V, d.H, d.W, degradation, {}};
  for (std::size_t u = 0; u < d.U; ++u) {
    for (std::size_t v = 0; v < d.V; ++v) {
      m.views.push_back(dir / view_file_name(u, v));
      write_png(m.views.back(), lf.view(u, v));
    }
  }
  json meta = {{"name", name}, {"U", d.U}, {"V", d.V}, {"H", d.H}, {"W", d.W}, {"degradation", nullptr}};
  if (degradation) {
    meta["degradation"] = {{"sigma_b", degradation->degradation.sigma_b},
                           {"noise_level", degradation->degradation.noise_level},
                           {"alpha", degradation->degradation.alpha},
                           {"seed", degradation->seed}};
  }
  std::ofstream out(dir / kMetaFile);
  if (!out) throw IoError("cannot write " + (dir / kMetaFile).string());
  out << meta.dump(2) << '\n';
  return m;
}

SceneManifest central_views(const SceneManifest& m, std::size_t A) {
  if (A == 0 || A > m.U || A > m.V) {
    throw InvalidArgument("central_views: cannot take " + std::to_string(A) + "x" + std::to_string(A) + " from " +
                          std::to_string(m.U) + "x" + std::to_string(m.V));
  }
  SceneManifest out = m;
  out.U = A;
  out.V = A;
  out.views.clear();
  const std::size_t u0 = (m.U - A) / 2;
  const std::size_t v0 = (m.V - A) / 2;
  for (std::size_t u = 0; u < A; ++u)
    for (std::size_t v = 0; v < A; ++v) out.views.push_back(m.view_path(u0 + u, v0 + v));
  return out;
}

bool is_scene_dir(const fs::path& dir) { return fs::is_regular_file(dir / kMetaFile); }

std::vector<fs::path> list_scenes(const fs::path& root) {
  if (!fs::is_directory(root)) throw IoError("not a directory: " + root.string());
  if (is_scene_dir(root)) return {root};
  std::vector<fs::path> scenes;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.is_directory() && is_scene_dir(entry.path())) scenes.push_back(entry.path());
  }
  std::sort(scenes.begin(), scenes.end());
  return scenes;
}

}  // namespace lfda
