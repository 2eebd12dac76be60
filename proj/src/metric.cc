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

#include "graphprobe/metric.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>

namespace graphprobe {
namespace {

void BfsInto(const Graph& g, Vertex source, std::span<Distance> dist,
             std::vector<Vertex>& queue) {
  std::fill(dist.begin(), dist.end(), kUnreachable);
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    const Distance next = dist[x] + 1;
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = next;
        queue.push_back(y);
      }
    }
  }
}

}  // namespace

std::vector<Distance> BfsDistances(const Graph& g, Vertex source) {
  CheckVertex(g, source);
  std::vector<Distance> dist(g.num_vertices());
  std::vector<Vertex> queue;
  queue.reserve(g.num_vertices());
  BfsInto(g, source, dist, queue);
  return dist;
}

Distance DistanceMatrix::Diameter() const {
  Distance best = 0;
  for (Distance d : data_) best = std::max(best, d);
  return best;
}

DistanceMatrix AllPairsDistances(const Graph& g) {
  const int n = g.num_vertices();
  DistanceMatrix out(n);
#pragma omp parallel
  {
    std::vector<Vertex> queue;
    queue.reserve(n);
#pragma omp for schedule(dynamic, 16)
    for (Vertex s = 0; s < n; ++s) BfsInto(g, s, out.row(s), queue);
  }
  return out;
}

DistanceMatrix AllPairsDistancesSerial(const Graph& g) {
  const int n = g.num_vertices();
  DistanceMatrix out(n);
  for (Vertex s = 0; s < n; ++s) {
    const std::vector<Distance> row = BfsDistances(g, s);
    std::copy(row.begin(), row.end(), out.row(s).begin());
  }
  return out;
}

void WeightedOverlay::Add(Vertex u, Vertex v, Distance w) {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) {
    throw std::invalid_argument("overlay endpoint out of range");
  }
  if (u == v) throw std::invalid_argument("overlay self-loop");
  if (w < 1) throw std::invalid_argument("overlay weight must be >= 1");
  const Edge key = Edge::Canonical(u, v);
  auto [it, inserted] = weights_.try_emplace(key, w);
  if (!inserted) {
    if (w >= it->second) return;
    it->second = w;
    for (auto& [x, wx] : adj_[u]) {
      if (x == v) wx = w;
    }
    for (auto& [x, wx] : adj_[v]) {
      if (x == u) wx = w;
    }
    return;
  }
  adj_[u].emplace_back(v, w);
  adj_[v].emplace_back(u, w);
}

std::optional<Distance> WeightedOverlay::Weight(Vertex u, Vertex v) const {
  auto it = weights_.find(Edge::Canonical(u, v));
  if (it == weights_.end()) return std::nullopt;
  return it->second;
}

std::vector<WeightedEdge> WeightedOverlay::Edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(weights_.size());
  for (const auto& [e, w] : weights_) out.push_back({e.u, e.v, w});
  return out;
}

std::vector<Distance> WeightedDistances(const Graph& g,
                                        const WeightedOverlay& overlay,
                                        Vertex source) {
  CheckVertex(g, source);
  const int n = g.num_vertices();
  if (overlay.num_vertices() != 0 && overlay.num_vertices() != n) {
    throw std::invalid_argument("overlay sized for a different graph");
  }
  std::vector<Distance> dist(n, kUnreachable);
  using Item = std::pair<Distance, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0;
  heap.push({0, source});
  auto relax = [&](Vertex y, Distance d) {
    if (dist[y] == kUnreachable || d < dist[y]) {
      dist[y] = d;
      heap.push({d, y});
    }
  };
  while (!heap.empty()) {
    const auto [d, x] = heap.top();
    heap.pop();
    if (d != dist[x]) continue;
    for (Vertex y : g.neighbors(x)) relax(y, d + 1);
    if (overlay.num_vertices() != 0) {
      for (const auto& [y, w] : overlay.incident(x)) relax(y, d + w);
    }
  }
  return dist;
}

DistanceMatrix Metric(const Graph& g, const WeightedOverlay* overlay) {
  if (overlay == nullptr || overlay->empty()) return AllPairsDistances(g);
  const int n = g.num_vertices();
  if (overlay->num_vertices() != n) {
    throw std::invalid_argument("overlay sized for a different graph");
  }
  DistanceMatrix out(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (Vertex s = 0; s < n; ++s) {
    const std::vector<Distance> row = WeightedDistances(g, *overlay, s);
    std::copy(row.begin(), row.end(), out.row(s).begin());
  }
  return out;
}

Neighborhoods ClosedNeighborhoods(const Graph& g, Vertex v) {
  CheckVertex(g, v);
  Neighborhoods out;
  out.closed.push_back(v);
  for (Vertex x : g.neighbors(v)) out.closed.push_back(x);
  out.radius2 = out.closed;
  for (Vertex x : g.neighbors(v)) {
    for (Vertex y : g.neighbors(x)) out.radius2.push_back(y);
  }
  std::sort(out.closed.begin(), out.closed.end());
  std::sort(out.radius2.begin(), out.radius2.end());
  out.radius2.erase(std::unique(out.radius2.begin(), out.radius2.end()),
                    out.radius2.end());
  return out;
}

LazyMetric::LazyMetric(const Graph& g, int dense_cap)
    : g_(&g), dense_cap_(dense_cap) {
  if (g.num_vertices() <= dense_cap_) dense_rows_.resize(g.num_vertices());
}

std::span<const Distance> LazyMetric::Row(Vertex source) {
  CheckVertex(*g_, source);
  if (!dense_rows_.empty()) {
    auto& row = dense_rows_[source];
    if (row.empty()) {
      row = BfsDistances(*g_, source);
      ++rows_computed_;
    }
    return row;
  }
  auto it = sparse_rows_.find(source);
  if (it != sparse_rows_.end()) return it->second;
  if (static_cast<int>(sparse_order_.size()) >= dense_cap_) {
    sparse_rows_.erase(sparse_order_.front());
    sparse_order_.pop_front();
  }
  sparse_order_.push_back(source);
  ++rows_computed_;
  return sparse_rows_.emplace(source, BfsDistances(*g_, source)).first->second;
}

}  // namespace graphprobe
