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

#ifndef GRAPHPROBE_METRIC_H_
#define GRAPHPROBE_METRIC_H_

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "graphprobe/graph.h"

namespace graphprobe {

// Hop distances from `source`; kUnreachable for vertices in other
// components. Throws std::invalid_argument on an invalid source.
std::vector<Distance> BfsDistances(const Graph& g, Vertex source);

// Dense symmetric n x n distance table, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), data_(std::size_t(n) * n, 0) {}

  int size() const { return n_; }
  Distance at(Vertex u, Vertex v) const { return data_[Index(u, v)]; }
  Distance& at(Vertex u, Vertex v) { return data_[Index(u, v)]; }
  std::span<const Distance> row(Vertex u) const {
    return {data_.data() + std::size_t(u) * n_, std::size_t(n_)};
  }
  std::span<Distance> row(Vertex u) {
    return {data_.data() + std::size_t(u) * n_, std::size_t(n_)};
  }
  // Largest finite entry.
  Distance Diameter() const;

  friend bool operator==(const DistanceMatrix&,
                         const DistanceMatrix&) = default;

 private:
  std::size_t Index(Vertex u, Vertex v) const {
    return std::size_t(u) * n_ + v;
  }
  int n_ = 0;
  std::vector<Distance> data_;
};

// All-pairs hop distances, one BFS per source. The parallel version splits
// sources across OpenMP threads; the serial version is the reference.
DistanceMatrix AllPairsDistances(const Graph& g);
DistanceMatrix AllPairsDistancesSerial(const Graph& g);

struct WeightedEdge {
  Vertex u = 0;
  Vertex v = 0;
  Distance weight = 1;
  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Auxiliary weighted edges laid over a graph. Weights are positive hop
// counts. Re-adding a pair keeps the smaller weight.
class WeightedOverlay {
 public:
  WeightedOverlay() = default;
  explicit WeightedOverlay(int num_vertices) : adj_(num_vertices) {}

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }

  // Throws std::invalid_argument for u == v, w < 1 or invalid endpoints.
  void Add(Vertex u, Vertex v, Distance w);
  std::optional<Distance> Weight(Vertex u, Vertex v) const;

  std::span<const std::pair<Vertex, Distance>> incident(Vertex v) const {
    return adj_[v];
  }
  // Sorted by (u, v).
  std::vector<WeightedEdge> Edges() const;

 private:
  std::map<Edge, Distance> weights_;
  std::vector<std::vector<std::pair<Vertex, Distance>>> adj_;
};

// Distances from `source` where graph edges weigh 1 and overlay edges weigh
// their stored weight.
std::vector<Distance> WeightedDistances(const Graph& g,
                                        const WeightedOverlay& overlay,
                                        Vertex source);

// All-pairs distance table. Without an overlay (or with an empty one) this
// is AllPairsDistances; otherwise weighted shortest paths.
DistanceMatrix Metric(const Graph& g, const WeightedOverlay* overlay = nullptr);

// N(v): closed neighborhood. N2(v): closed radius-2 ball. Both sorted.
struct Neighborhoods {
  std::vector<Vertex> closed;
  std::vector<Vertex> radius2;
};
Neighborhoods ClosedNeighborhoods(const Graph& g, Vertex v);

// Per-source BFS rows computed on demand and memoized. When the graph has
// more than `dense_cap` vertices only the most recent `dense_cap` rows are
// kept. Not synchronized; confine an instance to one thread.
class LazyMetric {
 public:
  static constexpr int kDefaultDenseCap = 4096;

  explicit LazyMetric(const Graph& g, int dense_cap = kDefaultDenseCap);

  // Above the dense cap a returned row stays valid only until the next call.
  std::span<const Distance> Row(Vertex source);
  Distance At(Vertex u, Vertex v) { return Row(u)[v]; }
  int num_vertices() const { return g_->num_vertices(); }
  std::size_t rows_computed() const { return rows_computed_; }

 private:
  const Graph* g_;
  int dense_cap_;
  std::vector<std::vector<Distance>> dense_rows_;
  std::unordered_map<Vertex, std::vector<Distance>> sparse_rows_;
  std::deque<Vertex> sparse_order_;
  std::size_t rows_computed_ = 0;
};

}  // namespace graphprobe

#endif  // GRAPHPROBE_METRIC_H_
