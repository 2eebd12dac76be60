// Copyright 2026 The Authors.
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

// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "graphprobe/cover.h"
#include "graphprobe/gen.h"
#include "graphprobe/metric.h"
#include "graphprobe/verify.h"

namespace graphprobe {
namespace {

Graph BenchGraph(int n) { return GenRandomBoundedDegree(n, 4, 7); }

void BM_AllPairsDistances(benchmark::State& state) {
  const Graph g = BenchGraph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(AllPairsDistances(g));
}

void BM_AllPairsDistancesSerial(benchmark::State& state) {
  const Graph g = BenchGraph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(AllPairsDistancesSerial(g));
}

struct CellInput {
  DistanceMatrix metric;
  CenterSet centers;
  std::vector<Vertex> subset;
};

CellInput MakeCellInput(int n) {
  CellInput in;
  in.metric = AllPairsDistances(BenchGraph(n));
  std::mt19937_64 rng(3);
  for (Vertex v = 0; v < n; ++v) in.subset.push_back(v);
  in.centers = SubsetCenters(in.metric, in.subset, 64, rng);
  return in;
}

void BM_CellCounts(benchmark::State& state) {
  const CellInput in = MakeCellInput(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        CellCounts(in.metric, in.centers.dist_to_centers, in.subset));
  }
}

void BM_CellCountsSerial(benchmark::State& state) {
  const CellInput in = MakeCellInput(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        CellCountsSerial(in.metric, in.centers.dist_to_centers, in.subset));
  }
}

std::vector<Edge> SamplePairs(int n, int count) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<Edge> out;
  while (static_cast<int>(out.size()) < count) {
    const Vertex a = pick(rng);
    const Vertex b = pick(rng);
    if (a != b) out.push_back(Edge::Canonical(a, b));
  }
  return out;
}

void BM_ExactScores(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const NonEdgeCover cover(BenchGraph(n));
  const std::vector<Edge> pairs = SamplePairs(n, 2048);
  for (auto _ : state) benchmark::DoNotOptimize(cover.ExactScores(pairs));
}

void BM_ExactScoresSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const NonEdgeCover cover(BenchGraph(n));
  const std::vector<Edge> pairs = SamplePairs(n, 2048);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cover.ExactScoresSerial(pairs));
  }
}

BENCHMARK(BM_AllPairsDistances)->Arg(512)->Arg(2048);
BENCHMARK(BM_AllPairsDistancesSerial)->Arg(512)->Arg(2048);
BENCHMARK(BM_CellCounts)->Arg(512)->Arg(2048);
BENCHMARK(BM_CellCountsSerial)->Arg(512)->Arg(2048);
BENCHMARK(BM_ExactScores)->Arg(256)->Arg(1024);
BENCHMARK(BM_ExactScoresSerial)->Arg(256)->Arg(1024);

}  // namespace
}  // namespace graphprobe

BENCHMARK_MAIN();
