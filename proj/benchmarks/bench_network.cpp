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

#include "lfda/danet.hpp"
#include "lfda/nn_ops.hpp"

namespace {

template <typename T>
void fill(T& t, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (double& v : t.values()) v = dist(rng);
}

lfda::NetConfig one_block() {
  lfda::NetConfig cfg;
  cfg.n_groups = 1;
  cfg.blocks_per_group = 1;
  return cfg;
}

void BM_Conv2d(benchmark::State& state) {
  const auto c = static_cast<std::size_t>(state.range(0));
  lfda::Tensor4 x({25, c, 32, 32});
  fill(x, 1);
  lfda::Tensor4 w({c, c, 3, 3});
  fill(w, 2);
  const std::vector<double> bias(c, 0.1);
  const lfda::nn::ConvRef conv{w.values(), bias, w.shape()};
  for (auto _ : state) benchmark::DoNotOptimize(lfda::nn::conv2d(x, conv, 1, 1));
  state.counters["MAC/s"] = benchmark::Counter(static_cast<double>(25 * 32 * 32 * c * c * 9) *
                                                   static_cast<double>(state.iterations()),
                                               benchmark::Counter::kIsRate);
}
BENCHMARK(BM_Conv2d)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_DaBlock(benchmark::State& state) {
  const lfda::NetParams params = lfda::init_params(3, one_block());
  lfda::Tensor4 feat({25, 64, 32, 32});
  fill(feat, 4);
  const lfda::DegradationRepr v = lfda::kpe_forward(1.5, 15.0, params);
  const auto ref = lfda::da_block_ref(params, 1);
  for (auto _ : state) benchmark::DoNotOptimize(lfda::da_block_forward(feat, v, ref));
}
BENCHMARK(BM_DaBlock)->Unit(benchmark::kMillisecond);

void BM_DistgBlock(benchmark::State& state) {
  const lfda::NetParams params = lfda::init_params(5, one_block());
  lfda::LightField feat({5, 5, 64, 32, 32});
  fill(feat, 6);
  const auto ref = lfda::distg_block_ref(params, 1, 1);
  const auto threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lfda::distg_block_forward(feat, ref, threads));
}
BENCHMARK(BM_DistgBlock)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
