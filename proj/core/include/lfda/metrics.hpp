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

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lfda/scene.hpp"
#include "lfda/tensor.hpp"

namespace lfda {

/// PSNR reported for identical images (and the ceiling for near-identical
/// ones) so that aggregates stay finite.
inline constexpr double kPsnrCap = 100.0;

/// 10 log10(1 / MSE) with the MSE pooled over all pixels and channels.
/// Images are expected in [0, 1]. Throws InvalidArgument on dims mismatch.
double psnr(const Image& a, const Image& b);

/// Single-scale SSIM: 11x11 Gaussian window (sigma 1.5), K1 = 0.01,
/// K2 = 0.03, unit dynamic range, evaluated on the valid window positions of
/// each channel and averaged over pixels, then channels.
double ssim(const Image& a, const Image& b);

struct ViewScore {
  std::string scene;
  std::size_t u = 0;
  std::size_t v = 0;
  double psnr = 0.0;
  double ssim = 0.0;
  bool capped = false;
};

struct SceneScore {
  std::string scene;
  double psnr = 0.0;
  double ssim = 0.0;
};

/// Per-view scores, per-scene means over the scene's views, and the dataset
/// mean over scenes (not over the pooled views).
struct MetricReport {
  std::string dataset;
  std::vector<ViewScore> views;
  std::vector<SceneScore> scenes;
  double psnr = 0.0;
  double ssim = 0.0;
  std::size_t capped_views = 0;
};

/// Scores `pred` against `gt`, matching scenes by name. Scene sets must be
/// identical (IoError otherwise) and dims must agree (InvalidArgument).
MetricReport dataset_score(std::span<const NamedLightField> pred, std::span<const NamedLightField> gt,
                           const std::string& dataset = "dataset", std::size_t threads = 1);

/// Recomputes the scene and dataset means from per-view scores.
void aggregate(MetricReport& report);

/// CSV with header dataset,scene,u,v,psnr,ssim. View rows come first, then
/// one row per scene (u = v = "all"), then the dataset row (scene = "all").
/// Four decimals, '.' separator.
void write_csv(std::ostream& out, const MetricReport& report);
MetricReport read_csv(std::istream& in);

/// "PSNR/SSIM: xx.xx/0.xxx"
std::string summary_line(const MetricReport& report);

}  // namespace lfda
