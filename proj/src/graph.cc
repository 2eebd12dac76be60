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

#include "graphprobe/graph.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace graphprobe {

Graph::Graph(int num_vertices) {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
  adj_.resize(num_vertices);
}

Graph Graph::FromEdges(int num_vertices, std::span<const Edge> edges) {
  Graph g(num_vertices);
  for (const Edge& e : edges) {
    if (!g.AddEdge(e.u, e.v)) {
      throw std::invalid_argument("parallel edge " + std::to_string(e.u) + " " +
                                  std::to_string(e.v));
    }
  }
  return g;
}

int Graph::MaxDegree() const {
  int best = 0;
  for (const auto& nb : adj_)
    best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

bool Graph::HasEdge(Vertex u, Vertex v) const {
  if (!IsValidVertex(u) || !IsValidVertex(v)) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const Vertex target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

bool Graph::AddEdge(Vertex u, Vertex v) {
  CheckVertex(*this, u);
  CheckVertex(*this, v);
  if (u == v) {
    throw std::invalid_argument("self-loop at " + std::to_string(u));
  }
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++num_edges_;
  return true;
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

bool Graph::IsConnected() const {
  const int n = num_vertices();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : adj_[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

void CheckVertex(const Graph& g, Vertex v) {
  if (!g.IsValidVertex(v)) {
    throw std::invalid_argument("invalid vertex id " + std::to_string(v));
  }
}

}  // namespace graphprobe
