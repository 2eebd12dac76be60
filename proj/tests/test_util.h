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

// Brute-force reference computations used only by tests.

#ifndef GRAPHPROBE_TESTS_TEST_UTIL_H_
#define GRAPHPROBE_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "graphprobe/components.h"
#include "graphprobe/graph.h"

namespace graphprobe::testing {

inline Graph PathGraph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.AddEdge(v, v + 1);
  return g;
}

inline Graph CycleGraph(int n) {
  Graph g = PathGraph(n);
  g.AddEdge(0, n - 1);
  return g;
}

inline Graph StarGraph(int n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.AddEdge(0, v);
  return g;
}

inline Graph GridGraph(int rows, int cols) {
  Graph g(rows * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const Vertex v = r * cols + c;
      if (c + 1 < cols) g.AddEdge(v, v + 1);
      if (r + 1 < rows) g.AddEdge(v, v + cols);
    }
  }
  return g;
}

// Floyd-Warshall over adjacency, independent of the BFS code under test.
inline std::vector<std::vector<Distance>> FloydWarshall(const Graph& g) {
  const int n = g.num_vertices();
  constexpr Distance kInf = 1 << 28;
  std::vector<std::vector<Distance>> d(n, std::vector<Distance>(n, kInf));
  for (Vertex v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (Vertex w : g.neighbors(v)) d[v][w] = 1;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  for (auto& row : d) {
    for (Distance& x : row) {
      if (x >= kInf) x = kUnreachable;
    }
  }
  return d;
}

// All maximal cliques by subset enumeration; n <= 20.
inline std::set<VertexSet> MaximalCliquesBruteForce(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) adj[v] |= 1u << w;
  }
  std::vector<std::uint32_t> cliques;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (mask >> v & 1) ok = (mask & ~(1u << v) & ~adj[v]) == 0;
    }
    if (ok) cliques.push_back(mask);
  }
  std::set<VertexSet> out;
  for (std::uint32_t c : cliques) {
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (!(c >> v & 1) && (c & ~adj[v]) == 0) maximal = false;
    }
    if (!maximal) continue;
    VertexSet s;
    for (int v = 0; v < n; ++v) {
      if (c >> v & 1) s.push_back(v);
    }
    out.insert(s);
  }
  return out;
}

// Connected random graph with max degree <= max_degree, built without the
// library generators.
inline Graph RandomSparseGraph(int n, int max_degree, std::uint64_t seed,
                               double extra_fraction = 0.5) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) {
    for (int attempt = 0;; ++attempt) {
      const Vertex p = std::uniform_int_distribution<Vertex>(0, v - 1)(rng);
      if (g.degree(p) < max_degree || attempt > 64 * n) {
        g.AddEdge(p, v);
        break;
      }
    }
  }
  const int extra = static_cast<int>(extra_fraction * n);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  for (int i = 0; i < extra * 4 && extra > 0; ++i) {
    const Vertex a = pick(rng), b = pick(rng);
    if (a == b || g.HasEdge(a, b)) continue;
    if (g.degree(a) >= max_degree || g.degree(b) >= max_degree) continue;
    g.AddEdge(a, b);
    if (g.num_edges() >= n - 1 + extra) break;
  }
  return g;
}

// Copy of g with one uniformly chosen non-edge added.
inline Graph PlantExtraEdge(const Graph& g, std::uint64_t seed,
                            Edge* planted = nullptr) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, g.num_vertices() - 1);
  for (;;) {
    const Vertex a = pick(rng), b = pick(rng);
    if (a == b || g.HasEdge(a, b)) continue;
    Graph out = g;
    out.AddEdge(a, b);
    if (planted != nullptr) *planted = Edge::Canonical(a, b);
    return out;
  }
}

// S_{u,v} from the definition over a Floyd-Warshall table.
inline std::set<Edge> BruteCertificates(const Graph& g, Vertex u, Vertex v) {
  const auto d = FloydWarshall(g);
  std::set<Edge> out;
  const int n = g.num_vertices();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (a == b || g.HasEdge(a, b)) continue;
      if (d[u][a] + d[b][v] + 1 < d[u][v]) out.insert(Edge::Canonical(a, b));
    }
  }
  return out;
}

}  // namespace graphprobe::testing

#endif  // GRAPHPROBE_TESTS_TEST_UTIL_H_
