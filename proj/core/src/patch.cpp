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

#include "lfda/patch.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "lfda/error.hpp"
#include "lfda/parallel.hpp"
#include "lfda/philox.hpp"
#include "lfda/scene.hpp"

namespace lfda {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

LightField crop(const LightField& lf, std::size_t top, std::size_t left, std::size_t height, std::size_t width) {
  const LfDims& d = lf.dims();
  LightField out({d.U, d.V, d.C, height, width});
  for (std::size_t u = 0; u < d.U; ++u)
    for (std::size_t v = 0; v < d.V; ++v)
      for (std::size_t c = 0; c < d.C; ++c)
        for (std::size_t h = 0; h < height; ++h)
          for (std::size_t w = 0; w < width; ++w) out(u, v, c, h, w) = lf(u, v, c, top + h, left + w);
  return out;
}

template <typename DegradationFor>
std::vector<PatchPair> extract(const LightField& scene_hr, std::uint64_t seed, const std::string& scene_name,
                               std::size_t threads, DegradationFor&& degradation_for) {
  using G = PatchGeometry;
  const LfDims& d = scene_hr.dims();
  if (d.H < G::kWindow || d.W < G::kWindow) {
    throw InvalidArgument("patchify: scene " + std::to_string(d.H) + "x" + std::to_string(d.W) +
                          " is smaller than the 152x152 window");
  }
  const std::size_t rows = G::positions(d.H);
  const std::size_t cols = G::positions(d.W);
  std::vector<PatchPair> patches(rows * cols);
  for (std::size_t i = 0; i < patches.size(); ++i) {
    patches[i].degradation = degradation_for(i);
    const auto alpha = static_cast<std::size_t>(patches[i].degradation.alpha);
    if (alpha == 0 || G::kWindow % alpha != 0 || G::kCrop % alpha != 0 || G::kCropOffset % alpha != 0) {
      throw InvalidArgument("patchify: alpha must divide the 152/128/12 patch geometry");
    }
  }
  parallel_for(patches.size(), threads, [&](std::size_t i) {
    PatchPair& p = patches[i];
    const auto alpha = static_cast<std::size_t>(p.degradation.alpha);
    p.scene = scene_name;
    p.top = (i / cols) * G::kStride;
    p.left = (i % cols) * G::kStride;
    p.seed = mix64(seed ^ mix64(i));
    const LightField window = crop(scene_hr, p.top, p.left, G::kWindow, G::kWindow);
    const LightField lr = degrade_lf(window, p.degradation, p.seed);
    p.hr = crop(window, G::kCropOffset, G::kCropOffset, G::kCrop, G::kCrop);
    p.lr = crop(lr, G::kCropOffset / alpha, G::kCropOffset / alpha, G::kCrop / alpha, G::kCrop / alpha);
  });
  return patches;
}

json degradation_json(const Degradation& d, std::uint64_t seed) {
  return {{"sigma_b", d.sigma_b}, {"noise_level", d.noise_level}, {"alpha", d.alpha}, {"seed", seed}};
}

}  // namespace

std::size_t PatchGeometry::positions(std::size_t extent) {
  return extent < kWindow ? 0 : (extent - kWindow) / kStride + 1;
}

std::vector<PatchPair> patchify(const LightField& scene_hr, const Degradation& d, std::uint64_t seed,
                                const std::string& scene_name, std::size_t threads) {
  d.validate();
  return extract(scene_hr, seed, scene_name, threads, [&](std::size_t) { return d; });
}

std::vector<PatchPair> patchify_sampled(const LightField& scene_hr, std::mt19937_64& rng, std::uint64_t seed,
                                        const std::string& scene_name, std::size_t threads) {
  return extract(scene_hr, seed, scene_name, threads, [&](std::size_t) { return sample_degradation(rng); });
}

PatchPair augment(const PatchPair& pair, AugCode code) {
  PatchPair out = pair;
  out.hr = augment(pair.hr, code);
  out.lr = augment(pair.lr, code);
  out.aug_code = AugCode(pair.aug_code).then(code).code();
  return out;
}

Degradation sample_degradation(std::mt19937_64& rng) {
  Degradation d;
  d.sigma_b = 4.0 * to_unit(rng());
  d.noise_level = 75.0 * to_unit(rng());
  d.alpha = 4;
  return d;
}

void write_patch_store(const fs::path& dir, const std::vector<PatchPair>& patches) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  json index = {{"version", 1}, {"patches", json::array()}};
  for (std::size_t i = 0; i < patches.size(); ++i) {
    const PatchPair& p = patches[i];
    char id[32];
    std::snprintf(id, sizeof id, "patch_%06zu", i);
    const DegradationRecord rec{p.degradation, p.seed};
    save_scene(p.hr, dir / id / "hr", p.scene + "/" + id + "/hr");
    save_scene(p.lr, dir / id / "lr", p.scene + "/" + id + "/lr", rec);
    index["patches"].push_back({{"id", id},
                                {"scene", p.scene},
                                {"top", p.top},
                                {"left", p.left},
                                {"aug_code", p.aug_code},
                                {"degradation", degradation_json(p.degradation, p.seed)},
                                {"hr", std::string(id) + "/hr"},
                                {"lr", std::string(id) + "/lr"}});
  }
  std::ofstream out(dir / "index.json");
  if (!out) throw IoError("cannot write " + (dir / "index.json").string());
  out << index.dump(2) << '\n';
}

std::vector<PatchPair> read_patch_store(const fs::path& dir) {
  std::ifstream in(dir / "index.json");
  if (!in) throw IoError("missing " + (dir / "index.json").string());
  std::vector<PatchPair> patches;
  try {
    const json index = json::parse(in);
    for (const json& rec : index.at("patches")) {
      PatchPair p;
      p.scene = rec.at("scene").get<std::string>();
      p.top = rec.at("top").get<std::size_t>();
      p.left = rec.at("left").get<std::size_t>();
      p.aug_code = rec.at("aug_code").get<int>();
      const json& dg = rec.at("degradation");
      p.degradation = {dg.at("sigma_b").get<double>(), dg.at("noise_level").get<double>(), dg.at("alpha").get<int>()};
      p.seed = dg.at("seed").get<std::uint64_t>();
      p.hr = load_scene(dir / rec.at("hr").get<std::string>());
      p.lr = load_scene(dir / rec.at("lr").get<std::string>());
      patches.push_back(std::move(p));
    }
  } catch (const json::exception& e) {
    throw IoError("malformed patch index in " + dir.string() + ": " + e.what());
  }
  return patches;
}

}  // namespace lfda
