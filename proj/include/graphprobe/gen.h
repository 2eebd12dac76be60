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

#ifndef GRAPHPROBE_GEN_H_
#define GRAPHPROBE_GEN_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphprobe/decomposition.h"
#include "graphprobe/graph.h"

namespace graphprobe {

enum class Family {
  kTree,
  kCycle,
  kGrid,
  kRandomBoundedDegree,
  kRandomChordal,
  kPartialKTree,
  kStarAdversary,
  kBinaryTreeLb,
};

std::string_view FamilyName(Family family);
// Accepts the names returned by FamilyName.
std::optional<Family> ParseFamily(std::string_view name);
std::vector<Family> AllFamilies();

struct GenSpec {
  Family family = Family::kRandomBoundedDegree;
  int n = 0;
  int max_degree = 4;
  int k = 1;  // width bound for partial k-trees
  std::uint64_t seed = 0;
  std::optional<Edge> chord;  // star adversary only
};

// A generated hidden graph plus what is known about it by construction.
struct Generated {
  GenSpec spec;
  Graph graph;
  // Witness decomposition when the family has one (clique tree for the
  // chordal families, the construction tree for partial k-trees).
  std::optional<TreeDecomposition> decomposition;
  int declared_max_degree = 0;
  std::optional<int> declared_width;
  std::optional<int> diameter_bound;
  bool chordal = false;
};

// Random tree with every degree at most max_degree (>= 2 unless n <= 2):
// each new vertex attaches to a uniformly chosen earlier vertex with spare
// degree.
Graph GenTree(int n, int max_degree, std::uint64_t seed);
Graph GenCycle(int n);
// floor(sqrt(n)) rows, row-major; the last row may be partial.
Graph GenGrid(int n);
// Random spanning tree under the degree budget, then random non-edges up to
// max(n - 1, floor(0.7 * floor(max_degree * n / 2))) edges or saturation.
Graph GenRandomBoundedDegree(int n, int max_degree, std::uint64_t seed);
std::int64_t RandomBoundedDegreeTarget(int n, int max_degree);

struct ChordalInstance {
  Graph graph;
  CliqueTree clique_tree;
};
// Grows a clique tree: each new vertex joins a random subset K of a random
// bag (|K| <= max_degree - 1, spare degree only).
ChordalInstance GenRandomChordal(int n, int max_degree, std::uint64_t seed);

struct DecomposedInstance {
  Graph graph;
  TreeDecomposition decomposition;
};
// Subgraph of a k-tree: each new vertex picks a bag B and a k-subset K' of
// it, links to a random nonempty part of K', and hangs bag K' + {v} under B.
DecomposedInstance GenPartialKTree(int n, int k, int max_degree,
                                   std::uint64_t seed);

// Star centered at 0, optionally with one chord between two leaves.
Graph GenStarAdversary(int n, std::optional<Edge> chord = std::nullopt);

// n = 3t - 1 vertices: a complete binary tree on heap ids 1..2t-1 (vertex
// id = heap id - 1), a matching from leaf i to i + t, and a random subgraph
// of max degree max_degree - 1 on the last t vertices. t a power of two.
Graph GenBinaryTreeLb(int t, int max_degree, std::uint64_t seed);

// Dispatches on spec.family and re-validates every declared property with
// independent checks; throws std::logic_error if one fails and
// std::invalid_argument for infeasible parameters. For the binary-tree
// family spec.n must equal 3t - 1.
Generated Generate(const GenSpec& spec);

// Re-checks a Generated record; returns an empty string when valid.
std::string ValidateGenerated(const Generated& g);

// Sidecar JSON describing the instance (family parameters and declared
// properties).
std::string SidecarJson(const Generated& g);

}  // namespace graphprobe

#endif  // GRAPHPROBE_GEN_H_
