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

#ifndef GRAPHPROBE_GRAPH_H_
#define GRAPHPROBE_GRAPH_H_

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace graphprobe {

// Vertices are dense ids in [0, n).
using Vertex = std::int32_t;

// Hop distance. Unreachable pairs carry kUnreachable, which is negative so it
// can never be confused with a hop count; always test with IsReachable()
// before doing arithmetic.
using Distance = std::int32_t;
inline constexpr Distance kUnreachable = -1;
constexpr bool IsReachable(Distance d) { return d >= 0; }

// Unordered vertex pair, stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static constexpr Edge Canonical(Vertex a, Vertex b) {
    return a < b ? Edge{a, b} : Edge{b, a};
  }
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Key for hashing an unordered pair.
constexpr std::uint64_t PairKey(Vertex a, Vertex b) {
  const Edge e = Edge::Canonical(a, b);
  return (static_cast<std::uint64_t>(e.u) << 32) |
         static_cast<std::uint32_t>(e.v);
}

// Unweighted undirected simple graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);

  // Builds a graph from an edge list. Throws std::invalid_argument on
  // self-loops, out-of-range endpoints or repeated edges.
  static Graph FromEdges(int num_vertices, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  std::int64_t num_edges() const { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int MaxDegree() const;

  bool HasEdge(Vertex u, Vertex v) const;
  bool IsValidVertex(Vertex v) const { return v >= 0 && v < num_vertices(); }

  // Inserts {u, v}; returns false if it is already present. Throws on a
  // self-loop or invalid endpoint.
  bool AddEdge(Vertex u, Vertex v);

  // All edges in canonical form, sorted.
  std::vector<Edge> Edges() const;

  bool IsConnected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::int64_t num_edges_ = 0;
};

// Throws std::invalid_argument unless v is a vertex of g.
void CheckVertex(const Graph& g, Vertex v);

}  // namespace graphprobe

#endif  // GRAPHPROBE_GRAPH_H_
