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

#include "graphprobe/acceptance.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>

#include "graphprobe/components.h"
#include "graphprobe/decomposition.h"
#include "graphprobe/gen.h"
#include "graphprobe/harness.h"
#include "graphprobe/metric.h"
#include "graphprobe/oracle.h"
#include "graphprobe/reconstruct.h"
#include "graphprobe/verify.h"

namespace graphprobe {
namespace {

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

CriterionResult Make(int id, std::string title) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  return r;
}

VertexSet AllVertices(int n) {
  VertexSet v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

RunSpec Spec(Algorithm a, Family f, int n, int delta, std::uint64_t seed,
             int k = 1) {
  RunSpec s;
  s.algorithm = a;
  s.gen.family = f;
  s.gen.n = n;
  s.gen.max_degree = delta;
  s.gen.k = k;
  s.gen.seed = seed;
  return s;
}

std::vector<ExperimentRecord> RunAll(const std::vector<RunSpec>& specs,
                                     int workers) {
  return ParallelMap(specs.size(), workers,
                     [&](std::size_t i) { return RunOne(specs[i]); });
}

// Short description of the first bad record, for failure details.
std::string FirstProblem(const std::vector<ExperimentRecord>& rs,
                         double limit_ms) {
  for (const ExperimentRecord& r : rs) {
    if (!r.correct || r.elapsed_ms > limit_ms) {
      std::string s = r.algorithm + " " + r.family +
                      " n=" + std::to_string(r.n) +
                      " seed=" + std::to_string(r.seed) + " fault=" + r.fault +
                      " verdict=" + r.verdict;
      if (!r.error.empty()) s += " error=" + r.error;
      if (r.elapsed_ms > limit_ms)
        s += " slow=" + Fixed(r.elapsed_ms, 0) + "ms";
      return s;
    }
  }
  return "";
}

CriterionResult ExactRuns(int id, std::string title,
                          const std::vector<RunSpec>& specs, double limit_ms,
                          int workers) {
  const auto rs = RunAll(specs, workers);
  int good = 0;
  double slowest = 0;
  for (const ExperimentRecord& r : rs) {
    good += r.correct && r.elapsed_ms <= limit_ms;
    slowest = std::max(slowest, r.elapsed_ms);
  }
  CriterionResult c = Make(id, std::move(title));
  c.passed = good == static_cast<int>(rs.size());
  c.detail = std::to_string(good) + "/" + std::to_string(rs.size()) +
             " runs correct within " + Fixed(limit_ms / 1000, 0) +
             " s, slowest " + Fixed(slowest / 1000, 2) + " s";
  if (!c.passed) c.detail += "; first problem: " + FirstProblem(rs, limit_ms);
  return c;
}

CriterionResult Criterion1(int workers) {
  std::vector<RunSpec> specs;
  for (Family f : {Family::kTree, Family::kCycle, Family::kGrid,
                   Family::kRandomBoundedDegree}) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      RunSpec s = Spec(Algorithm::kGreedyReconstruct, f, 256, 4, seed);
      s.time_limit_ms = 60000;
      specs.push_back(s);
    }
  }
  return ExactRuns(1, "greedy reconstruction is exact on 4 families at n=256",
                   specs, 60000, workers);
}

CriterionResult Criterion2(int workers) {
  std::vector<RunSpec> specs;
  for (int delta : {3, 4}) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      RunSpec s = Spec(Algorithm::kReconstructChordal, Family::kRandomChordal,
                       1024, delta, seed);
      s.time_limit_ms = 120000;
      specs.push_back(s);
    }
  }
  return ExactRuns(2, "chordal reconstruction is exact at n=1024", specs,
                   120000, workers);
}

CriterionResult Criterion3(int workers) {
  struct Case {
    Algorithm algorithm;
    Family family;
    int delta;
    int k;
  };
  const Case cases[] = {
      {Algorithm::kGreedyVerify, Family::kRandomBoundedDegree, 4, 1},
      {Algorithm::kVerifySubgraph, Family::kRandomBoundedDegree, 4, 1},
      {Algorithm::kVerifyChordal, Family::kRandomChordal, 4, 1},
      {Algorithm::kVerifyTreewidth, Family::kPartialKTree, 5, 3},
  };
  std::vector<RunSpec> specs;
  for (const Case& c : cases) {
    for (Fault fault : {Fault::kNone, Fault::kPlantedEdge}) {
      for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        RunSpec s = Spec(c.algorithm, c.family, 256, c.delta, seed, c.k);
        s.fault = fault;
        specs.push_back(s);
      }
    }
  }
  const auto rs = RunAll(specs, workers);
  std::ostringstream detail;
  bool all = true;
  for (std::size_t c = 0; c < std::size(cases); ++c) {
    int yes = 0, no = 0;
    for (std::size_t i = c * 60; i < c * 60 + 60; ++i) {
      if (!rs[i].correct) continue;
      (rs[i].fault == "none" ? yes : no) += 1;
    }
    all = all && yes == 30 && no == 30;
    detail << (c ? "; " : "") << AlgorithmName(cases[c].algorithm) << " yes "
           << yes << "/30 no " << no << "/30";
  }
  CriterionResult r = Make(3, "verifiers are sound and complete at n=256");
  r.passed = all;
  r.detail = detail.str();
  if (!all) r.detail += "; first problem: " + FirstProblem(rs, 1e18);
  return r;
}

ScalingConfig GridConfig(Algorithm a, Family f, int delta,
                         std::vector<int> sizes, int seeds) {
  ScalingConfig cfg;
  cfg.name = std::string(AlgorithmName(a));
  SeriesConfig s;
  s.id = cfg.name;
  s.algorithm = a;
  s.family = f;
  s.max_degree = delta;
  s.sizes = std::move(sizes);
  for (int i = 1; i <= seeds; ++i) s.seeds.push_back(i);
  cfg.series.push_back(s);
  return cfg;
}

CriterionResult Criterion4(int workers) {
  const std::vector<int> sizes = {64, 128, 256, 512};
  const ScalingResult greedy =
      RunScaling(GridConfig(Algorithm::kGreedyReconstruct,
                            Family::kRandomBoundedDegree, 4, sizes, 10),
                 workers);
  const ScalingResult naive =
      RunScaling(GridConfig(Algorithm::kAllPairs, Family::kRandomBoundedDegree,
                            4, sizes, 10),
                 workers);
  const auto& g = greedy.summary[0];
  const auto& b = naive.summary[0];
  bool all_correct = true;
  for (const auto* res : {&greedy, &naive}) {
    for (const ExperimentRecord& r : res->records) {
      all_correct = all_correct && r.correct;
    }
  }
  CriterionResult c = Make(4, "greedy reconstruction scales subquadratically");
  if (!g.fit || !b.fit) {
    c.detail = "fit unavailable: too many failed runs";
    return c;
  }
  c.passed = all_correct && g.fit->alpha <= 1.6 && g.fit->r2 >= 0.98 &&
             b.fit->alpha >= 1.95 && b.fit->r2 >= 0.98;
  std::ostringstream d;
  d << "greedy alpha " << Fixed(g.fit->alpha, 3) << " (R2 "
    << Fixed(g.fit->r2, 4) << ", need <= 1.6), all-pairs alpha "
    << Fixed(b.fit->alpha, 3) << " (R2 " << Fixed(b.fit->r2, 4)
    << ", need >= 1.95); mean queries";
  for (const SeriesPoint& p : g.points) {
    d << " " << p.n << ":" << Fixed(p.mean, 1);
  }
  if (!all_correct) d << "; some runs incorrect";
  c.detail = d.str();
  return c;
}

CriterionResult Criterion5(int workers) {
  const ScalingResult res = RunScaling(
      GridConfig(Algorithm::kReconstructChordal, Family::kRandomChordal, 4,
                 {256, 512, 1024, 2048}, 10),
      workers);
  CriterionResult c =
      Make(5, "chordal reconstruction queries stay within n log2^2 n");
  std::ostringstream d;
  double lo = 1e300, hi = 0;
  bool clean = true;
  for (const SeriesPoint& p : res.summary[0].points) {
    const double lg = std::log2(p.n);
    const double ratio = p.mean / (p.n * lg * lg);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    clean = clean && p.failures == 0;
    d << (p.n == 256 ? "" : " ") << p.n << ":" << Fixed(ratio, 3);
  }
  for (const ExperimentRecord& r : res.records) clean = clean && r.correct;
  const double spread = hi / lo;
  c.passed = clean && spread <= 3.0;
  c.detail = "ratios " + d.str() + ", spread " + Fixed(spread, 2) +
             " (need <= 3)" + (clean ? "" : "; some runs incorrect");
  return c;
}

CriterionResult Criterion6(int workers) {
  const int n = 256;
  const double s = 16;
  struct Outcome {
    std::size_t centers = 0;
    bool ok = true;
  };
  const auto outs = ParallelMap(100, workers, [&](std::size_t i) {
    const std::uint64_t seed = i + 1;
    const Graph g = GenRandomBoundedDegree(n, 4, seed);
    const DistanceMatrix d = AllPairsDistances(g);
    std::mt19937_64 rng(seed);
    Outcome o;
    const VertexSet all = AllVertices(n);
    const CenterSet cs = SubsetCenters(d, all, s, rng);
    o.centers = cs.centers.size();
    for (int c : CellCounts(d, cs.dist_to_centers, all)) {
      o.ok = o.ok && c <= 4.0 * n / s;
    }
    // A random half of V as the subset: the bound is relative to |U|.
    VertexSet half = all;
    std::shuffle(half.begin(), half.end(), rng);
    half.resize(n / 2);
    std::sort(half.begin(), half.end());
    const CenterSet ch = SubsetCenters(d, half, s, rng);
    for (int c : CellCounts(d, ch.dist_to_centers, half)) {
      o.ok = o.ok && c <= 4.0 * half.size() / s;
    }
    return o;
  });
  double total = 0;
  bool ok = true;
  for (const Outcome& o : outs) {
    total += o.centers;
    ok = ok && o.ok;
  }
  const double mean = total / outs.size();
  const double bound = 2 * s * std::log2(n);
  CriterionResult c = Make(6, "subset centers meet the cell bound");
  c.passed = ok && mean <= bound;
  c.detail = std::string("cell bound ") + (ok ? "held" : "violated") +
             " on 200 outputs, mean |A| " + Fixed(mean, 2) +
             " (need <= " + Fixed(bound, 0) + ")";
  return c;
}

Graph FigureTwoGraph() {
  Graph g(10);
  // a b c d e s1 s2 are 0..6; 7, 8, 9 sit in the overlaps of the balls.
  const std::pair<int, int> edges[] = {{0, 5}, {1, 6}, {5, 2}, {5, 3},
                                       {6, 4}, {5, 6}, {7, 0}, {7, 1},
                                       {8, 2}, {8, 3}, {9, 3}, {9, 4}};
  for (auto [x, y] : edges) g.AddEdge(x, y);
  return g;
}

CriterionResult Criterion7(int workers) {
  const auto ok = ParallelMap(200, workers, [&](std::size_t i) {
    const std::uint64_t seed = i + 1;
    const int n = 16 + static_cast<int>(seed * 37 % 241);
    Graph g;
    VertexSet sep;
    std::mt19937_64 rng(seed);
    if (i % 2 == 0) {
      const ChordalInstance c = GenRandomChordal(n, 3 + seed % 3, seed);
      g = c.graph;
      const int bag = i % 4 == 0
                          ? BalancedBagSeparator(c.clique_tree, g)
                          : static_cast<int>(rng() % c.clique_tree.num_bags());
      sep = c.clique_tree.bags[bag];
    } else {
      g = GenRandomBoundedDegree(n, 3 + seed % 2, seed);
      std::uniform_int_distribution<Vertex> pick(0, n - 1);
      const int size = 1 + seed % 4;
      while (static_cast<int>(sep.size()) < size) {
        const Vertex v = pick(rng);
        if (std::find(sep.begin(), sep.end(), v) == sep.end()) sep.push_back(v);
      }
      std::sort(sep.begin(), sep.end());
    }
    OracleSession s(g);
    return Partition(s, AllVertices(n), sep).clusters ==
           ConnectedComponents(g, sep);
  });
  const int good = static_cast<int>(std::count(ok.begin(), ok.end(), true));
  const Graph fig = FigureTwoGraph();
  OracleSession s(fig);
  const VertexSet sep = {5, 6};
  const ClusterFamily f = Partition(s, AllVertices(10), sep);
  const bool fig_ok =
      f.clusters == std::vector<VertexSet>{{0, 1, 7}, {2, 3, 4, 8, 9}} &&
      f.anchors == VertexSet{0, 1, 2, 3, 4};
  CriterionResult c = Make(7, "partition equals the true components");
  c.passed = good == 200 && fig_ok;
  c.detail = std::to_string(good) +
             "/200 random instances match; two-ball "
             "figure instance " +
             (fig_ok ? "matches" : "differs");
  return c;
}

CriterionResult Criterion8(int workers) {
  struct Outcome {
    bool valid = false;
    bool within = false;
    double used_fraction = 0;
  };
  const auto outs = ParallelMap(100, workers, [&](std::size_t i) {
    const std::uint64_t seed = i + 1;
    std::mt19937_64 rng(seed);
    const int n = 16 + static_cast<int>(rng() % 497);
    Graph g;
    switch (i % 3) {
      case 0:
        g = GenRandomBoundedDegree(n, 3 + seed % 2, seed);
        break;
      case 1:
        g = GenRandomChordal(n, 4, seed).graph;
        break;
      default:
        g = GenGrid(n);
        break;
    }
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    const Vertex a = pick(rng);
    Vertex b = pick(rng);
    while (b == a) b = pick(rng);
    OracleSession s(g);
    const auto path = ShortestPathSubroutine(s, AllVertices(n), a, b);
    const auto truth = BfsDistances(g, a);
    Outcome o;
    o.valid = path.front() == a && path.back() == b &&
              static_cast<Distance>(path.size()) - 1 == truth[b];
    for (std::size_t j = 0; o.valid && j + 1 < path.size(); ++j) {
      o.valid = g.HasEdge(path[j], path[j + 1]);
    }
    const double cap = 4.0 * n * (std::ceil(std::log2(n)) + 1);
    o.within = s.counts().cached() <= cap;
    o.used_fraction = s.counts().cached() / cap;
    return o;
  });
  int valid = 0, within = 0;
  double worst = 0;
  for (const Outcome& o : outs) {
    valid += o.valid;
    within += o.within;
    worst = std::max(worst, o.used_fraction);
  }
  CriterionResult c =
      Make(8, "shortest-path subroutine stays within its budget");
  c.passed = valid == 100 && within == 100;
  c.detail = std::to_string(valid) + "/100 valid shortest paths, " +
             std::to_string(within) + "/100 within 4|U|(ceil(log2|U|)+1), " +
             "worst use " + Fixed(100 * worst, 1) + "% of the cap";
  return c;
}

CriterionResult Criterion9(int workers) {
  const int n = 2048;
  const ChordalParams params = ChordalParams::FromDegree(3);
  const auto ok = ParallelMap(300, workers, [&](std::size_t i) {
    const std::uint64_t seed = i + 1;
    const ChordalInstance c = GenRandomChordal(n, 3, seed);
    OracleSession s(c.graph);
    std::mt19937_64 rng(seed);
    const auto k = BalancedSeparatorAttempt(s, AllVertices(n), params, rng);
    if (!k) return false;
    // Judge the returned clique against the true components.
    for (const VertexSet& part : ConnectedComponents(c.graph, *k)) {
      if (part.size() >= params.beta * n) return false;
    }
    return true;
  });
  const int good = static_cast<int>(std::count(ok.begin(), ok.end(), true));
  const double freq = good / 300.0;
  CriterionResult c = Make(9, "one separator repeat succeeds often enough");
  c.passed = freq >= 0.6;
  c.detail = "success " + std::to_string(good) + "/300 = " + Fixed(freq, 3) +
             " (need >= 0.6), beta " + Fixed(params.beta, 4);
  return c;
}

CriterionResult Criterion10(int workers) {
  std::vector<RunSpec> specs;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    specs.push_back(Spec(Algorithm::kGreedyVerify, Family::kRandomBoundedDegree,
                         256, 4, seed));
    specs.push_back(Spec(Algorithm::kVerifySubgraph,
                         Family::kRandomBoundedDegree, 256, 4, seed));
  }
  const auto rs = RunAll(specs, workers);
  const double factor = std::log(256.0) + 1;
  int good = 0;
  double worst = 0;
  for (std::size_t i = 0; i < rs.size(); i += 2) {
    const ExperimentRecord& greedy = rs[i];
    const ExperimentRecord& recursive = rs[i + 1];
    const auto it = greedy.stats.find("nonedge_queries");
    if (!greedy.correct || !recursive.correct || it == greedy.stats.end()) {
      continue;
    }
    const double ratio =
        it->second / (factor * static_cast<double>(recursive.queries_cached));
    worst = std::max(worst, ratio);
    good += ratio <= 1.0;
  }
  CriterionResult c =
      Make(10, "greedy non-edge queries within (ln n + 1) x recursive");
  c.passed = good == 30;
  c.detail = std::to_string(good) + "/30 instances hold, worst " +
             Fixed(worst, 4) + " of the allowance";
  return c;
}

CriterionResult Criterion11(int) {
  const int n = 128;
  const Graph star = GenStarAdversary(n);
  OracleSession clean(star);
  const VerifyResult yes = GreedyVerify(clean, star);
  const double need = 0.9 * (n - 1) * (n - 2) / 2.0;
  Graph chorded = GenStarAdversary(n, Edge{37, 90});
  OracleSession dirty(chorded);
  const VerifyResult no = GreedyVerify(dirty, star);
  CriterionResult c = Make(11, "star adversary forces quadratic verification");
  c.passed = yes.yes && !no.yes && clean.counts().cached() >= need;
  c.detail = std::to_string(clean.counts().cached()) + " queries on the " +
             "chord-free star (need >= " + Fixed(need, 0) + "), verdicts " +
             (yes.yes ? "yes" : "no") + " without chord and " +
             (no.yes ? "yes" : "no") + " with chord";
  return c;
}

}  // namespace

std::vector<CriterionResult> RunAcceptance(const AcceptanceOptions& options) {
  using Runner = CriterionResult (*)(int);
  const Runner runners[kNumCriteria] = {
      Criterion1, Criterion2, Criterion3, Criterion4,  Criterion5,  Criterion6,
      Criterion7, Criterion8, Criterion9, Criterion10, Criterion11,
  };
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kNumCriteria; ++id) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), id) ==
            options.only.end()) {
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = runners[id - 1](std::max(options.workers, 1));
    } catch (const std::exception& e) {
      r.id = id;
      r.title = "criterion aborted";
      r.passed = false;
      r.detail = e.what();
    }
    r.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (options.on_result) options.on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string FormatCriterion(const CriterionResult& r) {
  return "criterion " + std::to_string(r.id) + ": " +
         (r.passed ? "PASS" : "FAIL") + "  " + r.title + " (" + r.detail +
         ") [" + Fixed(r.elapsed_s, 1) + " s]";
}

}  // namespace graphprobe
