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

#include "graphprobe/verify.h"

#include <cmath>
#include <random>
#include <set>

#include "graphprobe/cover.h"
#include "graphprobe/gen.h"
#include "graphprobe/metric.h"
#include "graphprobe/oracle.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace graphprobe {
namespace {

using ::graphprobe::testing::BruteCertificates;
using ::graphprobe::testing::CycleGraph;
using ::graphprobe::testing::PathGraph;
using ::graphprobe::testing::PlantExtraEdge;
using ::graphprobe::testing::RandomSparseGraph;
using ::graphprobe::testing::StarGraph;

std::vector<Vertex> AllVertices(int n) {
  std::vector<Vertex> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

TEST(CertificateTest, PathOfFour) {
  const Graph p4 = PathGraph(4);
  const auto s = CertifiedNonEdges(p4, AllPairsDistances(p4), 0, 3);
  EXPECT_EQ(s, (std::vector<Edge>{{0, 2}, {0, 3}, {1, 3}}));
  const std::set<Edge> brute = BruteCertificates(p4, 0, 3);
  EXPECT_EQ(std::set<Edge>(s.begin(), s.end()), brute);
}

TEST(CertificateTest, AdjacentPairCertifiesNothing) {
  const Graph g = RandomSparseGraph(30, 4, 2);
  const DistanceMatrix d = AllPairsDistances(g);
  for (const Edge& e : g.Edges()) {
    EXPECT_TRUE(CertifiedNonEdges(g, d, e.u, e.v).empty());
  }
}

TEST(CertificateTest, EveryNonEdgeCertifiesItself) {
  const Graph g = RandomSparseGraph(25, 3, 5);
  const DistanceMatrix d = AllPairsDistances(g);
  for (Vertex a = 0; a < 25; ++a) {
    for (Vertex b = a + 1; b < 25; ++b) {
      if (g.HasEdge(a, b)) continue;
      const auto s = CertifiedNonEdges(g, d, a, b);
      EXPECT_TRUE(std::binary_search(s.begin(), s.end(), Edge{a, b}));
    }
  }
}

TEST(CertificateTest, MatchesBothOrientationsOfBruteForce) {
  const Graph g = RandomSparseGraph(30, 4, 8);
  const DistanceMatrix d = AllPairsDistances(g);
  for (Vertex u = 0; u < 30; u += 3) {
    for (Vertex v = u + 1; v < 30; v += 4) {
      auto brute = BruteCertificates(g, u, v);
      const auto mirror = BruteCertificates(g, v, u);
      brute.insert(mirror.begin(), mirror.end());
      const auto s = CertifiedNonEdges(g, d, u, v);
      EXPECT_EQ(std::set<Edge>(s.begin(), s.end()), brute);
    }
  }
}

// Plain greedy over all pairs with a set of remaining pairs; the reference
// for NonEdgeCover.
class BruteCover {
 public:
  explicit BruteCover(const Graph& g) : g_(g), d_(AllPairsDistances(g)) {
    for (Vertex a = 0; a < g.num_vertices(); ++a)
      for (Vertex b = a + 1; b < g.num_vertices(); ++b)
        if (!g.HasEdge(a, b)) left_.insert({a, b});
  }
  std::int64_t Score(Vertex u, Vertex v) const {
    std::int64_t s = 0;
    for (const Edge& e : CertifiedNonEdges(g_, d_, u, v)) s += left_.count(e);
    return s;
  }
  std::optional<NonEdgeCover::Choice> Next() const {
    if (left_.empty()) return std::nullopt;
    NonEdgeCover::Choice best{0, 0, -1};
    for (Vertex u = 0; u < g_.num_vertices(); ++u)
      for (Vertex v = u + 1; v < g_.num_vertices(); ++v) {
        const auto s = Score(u, v);
        if (s > best.score) best = {u, v, s};
      }
    return best;
  }
  void Confirm(Vertex u, Vertex v) {
    for (const Edge& e : CertifiedNonEdges(g_, d_, u, v)) left_.erase(e);
  }
  std::size_t left() const { return left_.size(); }

 private:
  Graph g_;
  DistanceMatrix d_;
  std::set<Edge> left_;
};

TEST(NonEdgeCoverTest, GreedySequenceMatchesBruteForce) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Graph g = RandomSparseGraph(28, 4, seed);
    NonEdgeCover cover(g);
    BruteCover brute(g);
    EXPECT_EQ(cover.uncovered(), static_cast<std::int64_t>(brute.left()));
    for (;;) {
      const auto got = cover.Next();
      const auto want = brute.Next();
      ASSERT_EQ(got.has_value(), want.has_value());
      if (!got) break;
      ASSERT_EQ(got->u, want->u);
      ASSERT_EQ(got->v, want->v);
      ASSERT_EQ(got->score, want->score);
      std::vector<Edge> newly;
      EXPECT_EQ(cover.Confirm(got->u, got->v, &newly), want->score);
      EXPECT_EQ(static_cast<std::int64_t>(newly.size()), want->score);
      brute.Confirm(want->u, want->v);
      ASSERT_EQ(cover.uncovered(), static_cast<std::int64_t>(brute.left()));
    }
  }
}

TEST(NonEdgeCoverTest, ScoresMatchDefinitionUnderPartialCover) {
  const Graph g = RandomSparseGraph(70, 4, 3);
  NonEdgeCover cover(g);
  BruteCover brute(g);
  cover.Confirm(0, 50);
  brute.Confirm(0, 50);
  cover.Confirm(7, 33);
  brute.Confirm(7, 33);
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < 70; u += 2)
    for (Vertex v = u + 1; v < 70; v += 3) pairs.push_back({u, v});
  const auto par = cover.ExactScores(pairs);
  const auto ser = cover.ExactScoresSerial(pairs);
  EXPECT_EQ(par, ser);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    EXPECT_EQ(ser[i], brute.Score(pairs[i].u, pairs[i].v));
  }
}

TEST(NonEdgeCoverTest, InsertEdgeUpdatesMetricAndUniverse) {
  Graph x = PathGraph(12);
  NonEdgeCover cover(x);
  const std::int64_t before = cover.uncovered();
  cover.InsertEdge(0, 11);
  x.AddEdge(0, 11);
  EXPECT_EQ(cover.metric(), AllPairsDistances(x));
  EXPECT_EQ(cover.uncovered(), before - 1);
  EXPECT_TRUE(cover.IsCovered(0, 11));
  EXPECT_EQ(cover.Score(0, 11), 0);
  const auto d = AllPairsDistances(CycleGraph(12));
  EXPECT_EQ(cover.metric(), d);
  EXPECT_EQ(cover.stats().rebuilds, 1);
  BruteCover brute(x);
  const auto want = brute.Next();
  const auto got = cover.Next();
  EXPECT_EQ(got->u, want->u);
  EXPECT_EQ(got->v, want->v);
}

TEST(NonEdgeCoverTest, RejectsDisconnectedCandidates) {
  Graph g(4);
  g.AddEdge(0, 1);
  EXPECT_THROW(NonEdgeCover cover(g), std::invalid_argument);
}

TEST(GreedyVerifyTest, PathOfThreeYes) {
  OracleSession s(PathGraph(3));
  const VerifyResult r = GreedyVerify(s, PathGraph(3));
  EXPECT_TRUE(r.yes);
  EXPECT_EQ(r.stats.edge_queries, 2);
  EXPECT_EQ(r.stats.nonedge_queries, 1);
}

TEST(GreedyVerifyTest, MissingChordIsCaught) {
  Graph hidden = PathGraph(4);
  hidden.AddEdge(0, 2);
  OracleSession s(hidden);
  const VerifyResult r = GreedyVerify(s, PathGraph(4));
  EXPECT_FALSE(r.yes);
  ASSERT_TRUE(r.mismatch.has_value());
  EXPECT_LT(r.mismatch->answered, r.mismatch->expected);
}

TEST(GreedyVerifyTest, StarForcesEveryLeafPair) {
  OracleSession s(StarGraph(6));
  const VerifyResult r = GreedyVerify(s, StarGraph(6));
  EXPECT_TRUE(r.yes);
  EXPECT_EQ(r.stats.edge_queries, 5);
  EXPECT_EQ(r.stats.nonedge_queries, 5 * 4 / 2);
}

TEST(GreedyVerifyTest, WrongEdgeFailsPrologue) {
  Graph candidate = PathGraph(5);
  candidate.AddEdge(0, 4);
  OracleSession s(PathGraph(5));
  const VerifyResult r = GreedyVerify(s, candidate);
  EXPECT_FALSE(r.yes);
  EXPECT_EQ(r.mismatch->expected, 1);
  EXPECT_EQ(r.stats.nonedge_queries, 0);
}

TEST(GreedyVerifyTest, ConfirmedPairsAreTrueNonEdgesAndProgress) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const Graph candidate = RandomSparseGraph(60, 4, seed);
    const Graph hidden = PlantExtraEdge(candidate, seed);
    OracleSession s(hidden);
    VerifyObserver obs;
    int rounds = 0;
    obs.on_confirm = [&](Vertex, Vertex, std::span<const Edge> pairs) {
      ++rounds;
      EXPECT_FALSE(pairs.empty());
      for (const Edge& e : pairs) ASSERT_FALSE(hidden.HasEdge(e.u, e.v));
    };
    GreedyVerifyOptions opts;
    opts.observer = &obs;
    EXPECT_FALSE(GreedyVerify(s, candidate, opts).yes);
    EXPECT_EQ(s.counts().cached(), candidate.num_edges() + rounds + 1);
  }
}

TEST(GreedyVerifyTest, PathOracleModeAgrees) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = RandomSparseGraph(50, 4, seed);
    OracleSession a(g), b(g);
    GreedyVerifyOptions path;
    path.mode = OracleMode::kPath;
    const VerifyResult ra = GreedyVerify(a, g);
    const VerifyResult rb = GreedyVerify(b, g, path);
    EXPECT_TRUE(ra.yes);
    EXPECT_TRUE(rb.yes);
    EXPECT_EQ(ra.stats.nonedge_queries, rb.stats.nonedge_queries);
    EXPECT_EQ(b.counts().distance, 0);
    OracleSession c(PlantExtraEdge(g, seed));
    EXPECT_FALSE(GreedyVerify(c, g, path).yes);
  }
}

TEST(RecursionParamsTest, Formula) {
  // n = 256, max degree 4: log n / log(8 * 32 * 17^2) < 1, so the schedule
  // degenerates to one exhaustive batch.
  const RecursionParams small = RecursionParams::Compute(256, 4);
  EXPECT_EQ(small.k0, 1);
  EXPECT_EQ(small.n0, 256);
  // n = 2^20, max degree 2: sqrt(20 / log2(20 * 32 * 25)) = 1.196...
  const RecursionParams big = RecursionParams::Compute(1 << 20, 2);
  const double expect_k0 =
      std::floor(std::sqrt(20.0 / std::log2(20.0 * 32 * 25)));
  EXPECT_EQ(big.k0, expect_k0);
  EXPECT_EQ(big.k0, 1);
  EXPECT_DOUBLE_EQ(big.s, 1 << 20);
  EXPECT_EQ(big.n0, 20);
  // Huge n reaches k0 = 2: 2^40 with max degree 2 gives
  // sqrt(40 / log2(40 * 800)) = 1.68...; 2^80 gives 2.2...
  const double lg = 80;
  const int k0 = static_cast<int>(std::sqrt(lg / std::log2(lg * 800)));
  EXPECT_EQ(k0, 2);
}

TEST(SubsetCentersTest, SmallTargetGivesNoCenters) {
  const Graph g = RandomSparseGraph(100, 4, 1);
  const DistanceMatrix d = AllPairsDistances(g);
  std::mt19937_64 rng(1);
  for (double s : {1.0, 2.5, 4.0}) {
    EXPECT_TRUE(SubsetCenters(d, AllVertices(100), s, rng).centers.empty());
  }
}

TEST(SubsetCentersTest, PostconditionAndExpectedSize) {
  const int n = 256;
  const double s = 16;
  double total = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = GenRandomBoundedDegree(n, 4, seed);
    const DistanceMatrix d = AllPairsDistances(g);
    std::mt19937_64 rng(seed);
    const auto u = AllVertices(n);
    const CenterSet cs = SubsetCenters(d, u, s, rng);
    const auto counts = CellCountsSerial(d, cs.dist_to_centers, u);
    for (int c : counts) ASSERT_LE(c, 4.0 * n / s);
    total += cs.centers.size();
  }
  EXPECT_LE(total / 100, 2 * s * std::log2(n));
}

TEST(SubsetCentersTest, SubsetPostconditionAndParallelKernel) {
  const Graph g = GenRandomBoundedDegree(300, 3, 4);
  const DistanceMatrix d = AllPairsDistances(g);
  std::vector<Vertex> u;
  for (Vertex v = 0; v < 300; v += 3) u.push_back(v);
  std::mt19937_64 rng(9);
  const CenterSet cs = SubsetCenters(d, u, 10, rng);
  const auto par = CellCounts(d, cs.dist_to_centers, u);
  const auto ser = CellCountsSerial(d, cs.dist_to_centers, u);
  EXPECT_EQ(par, ser);
  for (int c : ser) EXPECT_LE(c, 4.0 * u.size() / 10);
  // Centers have empty cells.
  for (Vertex a : cs.centers) EXPECT_EQ(ser[a], 0);
}

TEST(ExtendedCellTest, ContainsBallAndRespectsSizeBound) {
  const Graph p = PathGraph(30);
  const DistanceMatrix d = AllPairsDistances(p);
  CenterSet single;
  single.centers = {10};
  single.dist_to_centers.assign(d.row(10).begin(), d.row(10).end());
  const auto u = AllVertices(30);
  const VertexSet cell = ExtendedCell(d, single, 10, u);
  for (Vertex v : {8, 9, 10, 11, 12}) {
    EXPECT_TRUE(std::binary_search(cell.begin(), cell.end(), v));
  }
  EXPECT_THROW(ExtendedCell(d, single, 3, u), std::invalid_argument);

  const Graph g = GenRandomBoundedDegree(256, 4, 5);
  const DistanceMatrix dg = AllPairsDistances(g);
  std::mt19937_64 rng(5);
  const auto all = AllVertices(256);
  const double s = 16;
  const CenterSet cs = SubsetCenters(dg, all, s, rng);
  const int delta = g.MaxDegree();
  for (Vertex a : cs.centers) {
    const double bound = (delta * delta + 1) * std::max(4.0 * 256 / s, 1.0);
    EXPECT_LE(ExtendedCell(dg, cs, a, all).size(), bound);
  }
}

TEST(ExtendedCellTest, EightCycleWithAntipodalCenters) {
  const Graph c8 = CycleGraph(8);
  const DistanceMatrix d = AllPairsDistances(c8);
  CenterSet cs;
  cs.centers = {0, 4};
  cs.dist_to_centers.resize(8);
  for (Vertex v = 0; v < 8; ++v) {
    cs.dist_to_centers[v] = std::min(d.at(0, v), d.at(4, v));
  }
  // By hand: d(A, .) = 0 1 2 1 0 1 2 1 for vertices 0..7. N2(0) =
  // {6, 7, 0, 1, 2}; C(1) = {v : d(1, v) < d(A, v)} = {1, 2}, C(7) =
  // {7, 6}, C(2) = {2}, C(6) = {6}, C(0) = {}. So D_0 = {0, 1, 2, 6, 7}.
  const auto u = AllVertices(8);
  EXPECT_EQ(ExtendedCell(d, cs, 0, u), (VertexSet{0, 1, 2, 6, 7}));
  EXPECT_EQ(ExtendedCell(d, cs, 4, u), (VertexSet{2, 3, 4, 5, 6}));
  const std::vector<Vertex> half = {0, 1, 2, 3};
  EXPECT_EQ(ExtendedCell(d, cs, 4, half), (VertexSet{2, 3}));
}

TEST(VerifySubgraphTest, DefaultScheduleOnRandomGraph) {
  const int n = 200;
  const Graph g = GenRandomBoundedDegree(n, 3, 11);
  OracleSession s(g);
  ASSERT_TRUE(VerifyEdges(s, g).yes);
  const std::int64_t after_edges = s.counts().cached();
  std::mt19937_64 rng(11);
  const auto params = RecursionParams::Compute(n, g.MaxDegree());
  const VerifyResult r = VerifySubgraph(s, g, AllVertices(n), params, rng);
  EXPECT_TRUE(r.yes);
  // The degenerate schedule is one exhaustive batch: every pair once.
  EXPECT_EQ(s.counts().cached(), std::int64_t{n} * (n - 1) / 2);
  EXPECT_LE(s.counts().cached() - after_edges, std::int64_t{n} * (n - 1) / 2);
}

RecursionParams Forced(double s, std::int64_t n0, int delta) {
  RecursionParams p;
  p.k0 = 2;
  p.s = s;
  p.n0 = n0;
  p.max_degree = delta;
  return p;
}

TEST(VerifySubgraphTest, RecursionCoversEdgesAndDecides) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const int n = 200;
    const Graph g = GenRandomBoundedDegree(n, 3, seed);
    VerifyObserver obs;
    int nodes_with_cells = 0;
    obs.on_cells = [&](std::span<const Vertex> u, std::span<const Vertex>,
                       std::span<const VertexSet> cells) {
      ++nodes_with_cells;
      // Every candidate edge inside U lies inside some extended cell.
      for (Vertex x : u)
        for (Vertex y : g.neighbors(x)) {
          if (y < x || !std::binary_search(u.begin(), u.end(), y)) continue;
          const bool covered =
              std::any_of(cells.begin(), cells.end(), [&](const VertexSet& c) {
                return std::binary_search(c.begin(), c.end(), x) &&
                       std::binary_search(c.begin(), c.end(), y);
              });
          ASSERT_TRUE(covered) << x << "-" << y;
        }
    };
    const auto params = Forced(16, 30, g.MaxDegree());
    OracleSession yes_session(g);
    std::mt19937_64 rng(seed);
    const VerifyResult yes =
        VerifySubgraph(yes_session, g, AllVertices(n), params, rng, &obs);
    EXPECT_TRUE(yes.yes);
    EXPECT_GT(yes.stats.recursion_nodes, 1);
    EXPECT_GT(nodes_with_cells, 0);

    OracleSession no_session(PlantExtraEdge(g, seed));
    std::mt19937_64 rng2(seed);
    EXPECT_FALSE(
        VerifySubgraph(no_session, g, AllVertices(n), params, rng2).yes);
  }
}

TEST(VerifySubgraphTest, BaseCaseIsExhaustive) {
  const Graph g = CycleGraph(10);
  OracleSession s(g);
  std::mt19937_64 rng(0);
  const std::vector<Vertex> u = {0, 3, 4, 8};
  const VerifyResult r = VerifySubgraph(s, g, u, Forced(16, 10, 2), rng);
  EXPECT_TRUE(r.yes);
  EXPECT_EQ(s.counts().cached(), 6);
  EXPECT_EQ(r.stats.recursion_nodes, 1);
  EXPECT_THROW(VerifySubgraph(s, g, AllVertices(10), Forced(3, 2, 2), rng),
               std::invalid_argument);
}

TEST(VerifyChordalTest, RandomChordalYesAndPlantedNo) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const int n = 300;
    const ChordalInstance c = GenRandomChordal(n, 5, seed);
    const Graph& g = c.graph;
    OracleSession s(g);
    ASSERT_TRUE(VerifyEdges(s, g).yes);
    const VerifyResult r = VerifyChordal(s, g, AllVertices(n));
    EXPECT_TRUE(r.yes);
    const int delta = g.MaxDegree();
    const double envelope = 4.0 * (delta + 1) * (delta + 1) * n * std::log2(n);
    EXPECT_LE(r.stats.nonedge_queries, envelope);
    EXPECT_LT(r.stats.nonedge_queries, std::int64_t{n} * (n - 1) / 2);

    const Graph hidden = PlantExtraEdge(g, seed);
    OracleSession bad(hidden);
    VerifyObserver obs;
    obs.on_separator = [&](std::span<const Vertex>, const VertexSet&,
                           std::span<const VertexSet> comps) {
      // Both batches matched, so no hidden edge may join two components.
      std::vector<int> comp_of(n, -1);
      for (std::size_t i = 0; i < comps.size(); ++i)
        for (Vertex x : comps[i]) comp_of[x] = i;
      for (Vertex x = 0; x < n; ++x)
        for (Vertex y : hidden.neighbors(x))
          if (comp_of[x] != -1 && comp_of[y] != -1) {
            ASSERT_EQ(comp_of[x], comp_of[y]);
          }
    };
    ASSERT_TRUE(VerifyEdges(bad, g).yes);
    EXPECT_FALSE(VerifyChordal(bad, g, AllVertices(n), &obs).yes);
  }
}

TEST(VerifyChordalTest, SmallSubsetBaseCase) {
  const Graph g = PathGraph(6);
  OracleSession s(g);
  const VerifyResult r = VerifyChordal(s, g, AllVertices(6));
  EXPECT_TRUE(r.yes);
  EXPECT_EQ(r.stats.recursion_nodes, 1);
  EXPECT_EQ(s.counts().cached(), 15);
}

TEST(VerifyTreewidthTest, PartialKTreeYesPlantedNoAndOverlayAudit) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const int n = 300;
    const DecomposedInstance inst = GenPartialKTree(n, 3, 5, seed);
    const Graph& g = inst.graph;
    const DistanceMatrix truth = AllPairsDistances(g);
    VerifyObserver obs;
    obs.on_overlay = [&](std::span<const Vertex>, const WeightedOverlay& f) {
      for (const WeightedEdge& e : f.Edges()) {
        ASSERT_EQ(e.weight, truth.at(e.u, e.v));
      }
    };
    OracleSession s(g);
    const VerifyResult r =
        VerifyTreewidth(s, g, &inst.decomposition, AllVertices(n), &obs);
    EXPECT_TRUE(r.yes);
    EXPECT_LE(r.stats.width, 3);
    EXPECT_GT(r.stats.recursion_nodes, 1);
    EXPECT_LE(r.stats.max_local_degree,
              g.MaxDegree() + (r.stats.width + 1) * (r.stats.max_depth + 1));
    EXPECT_LT(s.counts().cached(), std::int64_t{n} * (n - 1) / 2);

    OracleSession bad(PlantExtraEdge(g, seed));
    EXPECT_FALSE(
        VerifyTreewidth(bad, g, &inst.decomposition, AllVertices(n)).yes);
  }
}

TEST(VerifyTreewidthTest, MinFillFallbackAndInvalidInput) {
  const Graph g = GenGrid(64);
  OracleSession s(g);
  const VerifyResult r = VerifyTreewidth(s, g, nullptr, AllVertices(64));
  EXPECT_TRUE(r.yes);
  EXPECT_GE(r.stats.width, 8);
  TreeDecomposition broken;
  broken.bags = {{0, 1}};
  broken.tree = {{}};
  EXPECT_THROW(VerifyTreewidth(s, g, &broken, AllVertices(64)),
               std::invalid_argument);
}

}  // namespace
}  // namespace graphprobe
