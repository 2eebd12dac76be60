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

#ifndef GRAPHPROBE_VERIFY_H_
#define GRAPHPROBE_VERIFY_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "graphprobe/components.h"
#include "graphprobe/decomposition.h"
#include "graphprobe/graph.h"
#include "graphprobe/metric.h"
#include "graphprobe/oracle.h"

namespace graphprobe {

enum class OracleMode { kDistance, kPath };

// The first query whose answer disagreed with the candidate metric.
struct Mismatch {
  Vertex u = 0;
  Vertex v = 0;
  Distance expected = 0;
  Distance answered = 0;
};

struct VerifyStats {
  std::int64_t edge_queries = 0;     // counted by the edge prologue
  std::int64_t nonedge_queries = 0;  // counted after it
  std::int64_t recursion_nodes = 0;
  int max_depth = 0;
  // Largest degree seen in a local graph of candidate plus virtual edges
  // (bounded-treewidth recursion only).
  int max_local_degree = 0;
  int width = -1;  // decomposition width used, if any
};

struct VerifyResult {
  bool yes = false;
  std::optional<Mismatch> mismatch;
  VerifyStats stats;
};

// Test-mode hooks. Each receives candidate-side data only; ground-truth
// assertions live with the caller, who owns the hidden graph.
struct VerifyObserver {
  // Greedy loop: a matched query at (u, v) confirmed these pairs.
  std::function<void(Vertex u, Vertex v, std::span<const Edge> confirmed)>
      on_confirm;
  // Recursive verification: centers and extended cells of a node.
  std::function<void(std::span<const Vertex> subset,
                     std::span<const Vertex> centers,
                     std::span<const VertexSet> cells)>
      on_cells;
  // Separator recursions, after both batches of a node matched.
  std::function<void(std::span<const Vertex> subset, const VertexSet& sep,
                     std::span<const VertexSet> components)>
      on_separator;
  // Bounded-treewidth recursion, on entry to every node.
  std::function<void(std::span<const Vertex> subset,
                     const WeightedOverlay& overlay)>
      on_overlay;
};

// Queries every edge of the candidate; any answer other than 1 is a no.
VerifyResult VerifyEdges(OracleSession& session, const Graph& candidate,
                         OracleMode mode = OracleMode::kDistance);

struct GreedyVerifyOptions {
  OracleMode mode = OracleMode::kDistance;
  const VerifyObserver* observer = nullptr;
};

// Edge prologue followed by greedy set cover over the certificate sets.
VerifyResult GreedyVerify(OracleSession& session, const Graph& candidate,
                          const GreedyVerifyOptions& options = {});

// Schedule of the recursive verifier, logarithms base 2. When the formula
// gives k0 < 1 the schedule degenerates to k0 = 1 with n0 = n, one
// exhaustive batch.
struct RecursionParams {
  int k0 = 1;
  double s = 1;
  std::int64_t n0 = 0;
  int max_degree = 0;

  static RecursionParams Compute(int n, int max_degree);
};

// Centers A with their candidate distances d(A, v) (kUnreachable when A is
// empty).
struct CenterSet {
  VertexSet centers;
  std::vector<Distance> dist_to_centers;
  double s = 1;
  int rounds = 0;
};

// |C_A(w) ∩ U| for every w, where C_A(w) = {v : d(w, v) < d(A, v)}.
std::vector<int> CellCounts(const DistanceMatrix& metric,
                            std::span<const Distance> dist_to_centers,
                            std::span<const Vertex> subset);
std::vector<int> CellCountsSerial(const DistanceMatrix& metric,
                                  std::span<const Distance> dist_to_centers,
                                  std::span<const Vertex> subset);

// Random center selection on the candidate metric, no queries. Throws
// std::runtime_error after 64 * log2(n) rounds without convergence.
CenterSet SubsetCenters(const DistanceMatrix& metric,
                        std::span<const Vertex> subset, double s,
                        std::mt19937_64& rng);

// D_a: cells of the radius-2 ball around a, plus the ball, within U.
// Sorted.
VertexSet ExtendedCell(const DistanceMatrix& metric, const CenterSet& centers,
                       Vertex a, std::span<const Vertex> subset);

// Recursive verification of G[U]; assumes the candidate's edges were
// already confirmed.
VerifyResult VerifySubgraph(OracleSession& session, const Graph& candidate,
                            std::span<const Vertex> subset,
                            const RecursionParams& params, std::mt19937_64& rng,
                            const VerifyObserver* observer = nullptr);

// Clique separator recursion for chordal candidates; assumes confirmed
// edges.
VerifyResult VerifyChordal(OracleSession& session, const Graph& candidate,
                           std::span<const Vertex> subset,
                           const VerifyObserver* observer = nullptr);

// Bag separator recursion with weighted virtual edges between separator
// vertices. `td` must be a decomposition of the candidate; when absent a
// min-fill decomposition is used. Assumes confirmed edges.
VerifyResult VerifyTreewidth(OracleSession& session, const Graph& candidate,
                             const TreeDecomposition* td,
                             std::span<const Vertex> subset,
                             const VerifyObserver* observer = nullptr);

}  // namespace graphprobe

#endif  // GRAPHPROBE_VERIFY_H_
