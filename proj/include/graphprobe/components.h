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

#ifndef GRAPHPROBE_COMPONENTS_H_
#define GRAPHPROBE_COMPONENTS_H_

#include <span>
#include <vector>

#include "graphprobe/graph.h"

namespace graphprobe {

using VertexSet = std::vector<Vertex>;

// Connected components of g minus `removed`. Each component is sorted and
// the list is ordered by smallest member.
std::vector<VertexSet> ConnectedComponents(const Graph& g,
                                           std::span<const Vertex> removed);

// Components of g[within] minus `removed`; `removed` may contain vertices
// outside `within`.
std::vector<VertexSet> ComponentsWithin(const Graph& g,
                                        std::span<const Vertex> within,
                                        std::span<const Vertex> removed);

// Induced subgraph on `vertices` (any order, no duplicates). Local vertex i
// corresponds to to_parent[i] = vertices[i].
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};
Subgraph InducedSubgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace graphprobe

#endif  // GRAPHPROBE_COMPONENTS_H_
