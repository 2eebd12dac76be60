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

#include "graphprobe/components.h"

#include <algorithm>
#include <stdexcept>

namespace graphprobe {

std::vector<VertexSet> ComponentsWithin(const Graph& g,
                                        std::span<const Vertex> within,
                                        std::span<const Vertex> removed) {
  const int n = g.num_vertices();
  // 0 = not in play, 1 = unvisited, 2 = visited.
  std::vector<char> state(n, 0);
  for (Vertex v : within) {
    CheckVertex(g, v);
    state[v] = 1;
  }
  for (Vertex v : removed) {
    CheckVertex(g, v);
    state[v] = 0;
  }
  std::vector<Vertex> order(within.begin(), within.end());
  std::sort(order.begin(), order.end());
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex start : order) {
    if (state[start] != 1) continue;
    VertexSet comp;
    state[start] = 2;
    stack.push_back(start);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (state[y] == 1) {
          state[y] = 2;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> ConnectedComponents(const Graph& g,
                                           std::span<const Vertex> removed) {
  std::vector<Vertex> all(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) all[v] = v;
  return ComponentsWithin(g, all, removed);
}

Subgraph InducedSubgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> to_local(g.num_vertices(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    CheckVertex(g, vertices[i]);
    if (to_local[vertices[i]] != -1) {
      throw std::invalid_argument("duplicate vertex in induced subgraph");
    }
    to_local[vertices[i]] = static_cast<Vertex>(i);
  }
  Subgraph out{Graph(static_cast<int>(vertices.size())),
               std::vector<Vertex>(vertices.begin(), vertices.end())};
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex y : g.neighbors(vertices[i])) {
      const Vertex j = to_local[y];
      if (j > static_cast<Vertex>(i)) out.graph.AddEdge(i, j);
    }
  }
  return out;
}

}  // namespace graphprobe
