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

#ifndef GRAPHPROBE_RECONSTRUCT_H_
#define GRAPHPROBE_RECONSTRUCT_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphprobe/components.h"
#include "graphprobe/graph.h"
#include "graphprobe/oracle.h"

namespace graphprobe {

// S^X_{u,v} over a reconstruction graph x: the non-edges of x that a
// matching query at (u, v) rules out. x must be connected; throws
// std::invalid_argument otherwise or when u == v.
std::vector<Edge> ReconstructionCertificates(const Graph& x, Vertex u,
                                             Vertex v);

struct GreedyReconstructStats {
  std::int64_t init_queries = 0;
  std::int64_t loop_queries = 0;
  // Loop iterations whose answer disagreed with X and added an edge.
  std::int64_t edge_additions = 0;
  std::int64_t confirmations = 0;
};

// Test hook called after every loop iteration. `added` is the edge put into
// X, or nullopt when the iteration confirmed `confirmed` as non-edges.
struct ReconstructObserver {
  std::function<void(const Graph& x, std::span<const Edge> confirmed,
                     std::optional<Edge> added)>
      on_step;
};

struct GreedyReconstructResult {
  Graph graph;
  GreedyReconstructStats stats;
};

// Greedy reconstruction over a shortest-path oracle. Starts from the union
// of the paths from every vertex to vertex 0, then repeatedly queries the
// pair maximizing |S^X_{u,v} \ Y|. A disagreeing answer contributes the
// first edge of the returned path (scanning from u) that X lacks.
GreedyReconstructResult GreedyReconstruct(
    OracleSession& session, const ReconstructObserver* observer = nullptr);

// Raised when a computation that must run on cached answers finds a pair
// that was never queried. Always a bug in the caller.
class CacheMiss : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// B(a) = {x in U \ S : d(a, x) <= d(S, x)}, read from cached distances
// only. Throws CacheMiss when an answer in (S + {a}) x U is missing.
VertexSet Cluster(const OracleSession& session, std::span<const Vertex> u,
                  std::span<const Vertex> s, Vertex a);

// Clusters after merging, each sorted and listed by smallest member, with
// the anchors W = (N(S) cap U) \ S they grew from.
struct ClusterFamily {
  std::vector<VertexSet> clusters;
  VertexSet anchors;
};

// Components of G[U] \ S from distance queries alone: Query(S, U), then
// Query(N(S) cap U, U), clusters around every anchor, merging overlaps. U
// must be self-contained and S a nonempty subset of U.
ClusterFamily Partition(OracleSession& session, std::span<const Vertex> u,
                        std::span<const Vertex> s);

// A shortest a-b path inside the self-contained set U by splitting at the
// lowest-id geodesic vertex at distance floor(d(a, b) / 2) from a.
std::vector<Vertex> ShortestPathSubroutine(OracleSession& session,
                                           std::span<const Vertex> u, Vertex a,
                                           Vertex b);

struct ChordalParams {
  int max_degree = 0;
  // Subsets of at most n0 vertices are solved by exhaustive queries.
  std::int64_t n0 = 0;
  double beta = 0;
  // Sampled pairs per repeat: ceil(c1 * log2 |U|).
  double c1 = 0;

  static ChordalParams FromDegree(int max_degree);
};

struct SeparatorStats {
  std::int64_t attempts = 0;
  std::int64_t sampled_paths = 0;
  std::int64_t cliques_tried = 0;
};

// One repeat of the separator search: sample paths, pick the most frequent
// vertex x, then try every clique through x: subsets of N(x) \ {x} by
// increasing bitmask over the neighbors in id order, with {x} alone last.
// Returns the first clique whose removal leaves components all smaller than
// beta |U|.
std::optional<VertexSet> BalancedSeparatorAttempt(
    OracleSession& session, std::span<const Vertex> u,
    const ChordalParams& params, std::mt19937_64& rng,
    SeparatorStats* stats = nullptr);

class SeparatorNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxSeparatorRepeats = 16;

// Repeats the attempt up to kMaxSeparatorRepeats times, then throws
// SeparatorNotFound; with a chordal hidden graph that means the degree
// bound or chordality assumption was violated.
VertexSet BalancedSeparator(OracleSession& session, std::span<const Vertex> u,
                            const ChordalParams& params, std::mt19937_64& rng,
                            SeparatorStats* stats = nullptr);

struct ChordalReconstructStats {
  std::int64_t recursion_nodes = 0;
  std::int64_t base_cases = 0;
  int max_depth = 0;
  SeparatorStats separator;
};

struct ChordalObserver {
  // After each split: the subset, its separator and the parts found.
  std::function<void(std::span<const Vertex> u, const VertexSet& separator,
                     std::span<const VertexSet> parts)>
      on_split;
};

struct ChordalReconstructResult {
  std::vector<Edge> edges;  // sorted
  ChordalReconstructStats stats;
};

// Edges of G[U] for a chordal hidden graph; U = V when `u` is empty. With
// n0 overridden far below its default a split can fail to shrink some part;
// such a subset is then solved exhaustively.
ChordalReconstructResult ReconstructChordal(
    OracleSession& session, std::span<const Vertex> u,
    const ChordalParams& params, std::mt19937_64& rng,
    const ChordalObserver* observer = nullptr);

}  // namespace graphprobe

#endif  // GRAPHPROBE_RECONSTRUCT_H_
