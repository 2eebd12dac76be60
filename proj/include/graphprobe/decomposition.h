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

#ifndef GRAPHPROBE_DECOMPOSITION_H_
#define GRAPHPROBE_DECOMPOSITION_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphprobe/components.h"
#include "graphprobe/graph.h"

namespace graphprobe {

// Tree of bags. `tree[i]` lists the bag indices adjacent to bag i. Bags are
// kept sorted.
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::vector<int>> tree;

  int num_bags() const { return static_cast<int>(bags.size()); }
  // Max bag size minus one; -1 for an empty decomposition.
  int width() const;
  void AddTreeEdge(int a, int b);

  friend bool operator==(const TreeDecomposition&,
                         const TreeDecomposition&) = default;
};

// A tree decomposition whose bags are exactly the maximal cliques.
struct CliqueTree : TreeDecomposition {};

// Checks both decomposition axioms plus that `tree` is a tree (a forest is
// accepted only if g is disconnected). On failure writes a reason.
bool IsValidDecomposition(const TreeDecomposition& td, const Graph& g,
                          std::string* why = nullptr);

// Additionally checks that every bag is a maximal clique and no clique
// repeats.
bool IsValidCliqueTree(const TreeDecomposition& td, const Graph& g,
                       std::string* why = nullptr);

// Maximum cardinality search with lowest-id tie-break, reversed. Returns
// nullopt when g is not chordal. Position 0 is eliminated first.
std::optional<std::vector<Vertex>> PerfectEliminationOrder(const Graph& g);

inline bool IsChordal(const Graph& g) {
  return PerfectEliminationOrder(g).has_value();
}

// Clique tree from a perfect elimination order: bags are the maximal
// cliques (sorted, listed in lexicographic order), joined by a maximum
// weight spanning tree over shared vertices. Throws std::invalid_argument
// on non-chordal input.
CliqueTree BuildCliqueTree(const Graph& g);

// Index of a bag whose removal leaves components of at most n/2 vertices.
// Among qualifying bags the one with the smallest largest component wins,
// then the lowest index. Throws std::invalid_argument if none qualifies
// (td invalid for g).
int BalancedBagSeparator(const TreeDecomposition& td, const Graph& g);

// Elimination-order decomposition using the min-fill heuristic, lowest id on
// ties.
TreeDecomposition MinFillDecomposition(const Graph& g);

// Bags intersected with `vertices` and renumbered to local ids (position in
// `vertices`). Empty bags are kept so the tree stays connected.
TreeDecomposition RestrictDecomposition(const TreeDecomposition& td,
                                        std::span<const Vertex> vertices,
                                        int parent_num_vertices);

}  // namespace graphprobe

#endif  // GRAPHPROBE_DECOMPOSITION_H_
