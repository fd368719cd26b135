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

#include <benchmark/benchmark.h>

#include <random>

#include "lfda/degrade.hpp"
#include "lfda/metrics.hpp"

namespace {

lfda::Image noise_image(std::size_t c, std::size_t h, std::size_t w, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  lfda::Image img(c, h, w);
  for (double& v : img.values()) v = dist(rng);
  return img;
}

void BM_Blur(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const lfda::Image img = noise_image(3, n, n, 1);
  const lfda::Kernel21 k = lfda::gaussian_kernel(3.0);
  for (auto _ : state) benchmark::DoNotOptimize(lfda::blur(img, k));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.size()));
}
BENCHMARK(BM_Blur)->Arg(64)->Arg(128)->Arg(256);

void BM_BicubicDown(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const lfda::Image img = noise_image(3, n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(lfda::bicubic_resize(img, 0.25, true));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.size()));
}
BENCHMARK(BM_BicubicDown)->Arg(128)->Arg(512);

void BM_BicubicUp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const lfda::Image img = noise_image(3, n, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(lfda::bicubic_resize(img, 4.0, false));
}
BENCHMARK(BM_BicubicUp)->Arg(32)->Arg(128);

void BM_DegradeLf(benchmark::State& state) {
  lfda::LightField lf({5, 5, 3, 128, 128});
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (double& v : lf.values()) v = dist(rng);
  const lfda::Degradation d{1.5, 15.0, 4};
  for (auto _ : state) benchmark::DoNotOptimize(lfda::degrade_lf(lf, d, 7, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_DegradeLf)->Arg(1)->Arg(4)->UseRealTime();

void BM_Ssim(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const lfda::Image a = noise_image(3, n, n, 5);
  lfda::Image b = a;
  for (double& v : b.values()) v = 0.9 * v + 0.05;
  for (auto _ : state) benchmark::DoNotOptimize(lfda::ssim(a, b));
}
BENCHMARK(BM_Ssim)->Arg(128)->Arg(512);

void BM_Psnr(benchmark::State& state) {
  const lfda::Image a = noise_image(3, 512, 512, 6);
  const lfda::Image b = noise_image(3, 512, 512, 7);
  for (auto _ : state) benchmark::DoNotOptimize(lfda::psnr(a, b));
}
BENCHMARK(BM_Psnr);

}  // namespace
