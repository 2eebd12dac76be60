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

#ifndef GRAPHPROBE_COVER_H_
#define GRAPHPROBE_COVER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "graphprobe/graph.h"
#include "graphprobe/metric.h"

namespace graphprobe {

// The certificate set S_{u,v}: non-edges {a, b} of g with
// d(u, a) + d(b, v) + 1 < d(u, v) in either orientation, where d is the
// metric of g. Computed straight from the definition; O(n^2).
std::vector<Edge> CertifiedNonEdges(const Graph& g, const DistanceMatrix& d,
                                    Vertex u, Vertex v);

// Greedy set cover of the non-edges of a candidate graph by the sets
// S_{u,v}. Uncovered pairs are held as one bitset row per vertex; the
// argmax uses a lazy priority queue of upper bounds refined in tiers:
//
//   tier 0: sum over layers of u times balls of v (no dependence on Y),
//   tier 1: per-row ball sizes capped by the row's uncovered count,
//   tier 2: the exact count, valid for the epoch it was computed in.
//
// Every bound only shrinks as more pairs get covered, so the first entry
// popped with an exact, current score is a true maximizer. Ties go to the
// lexicographically smallest (u, v) with u < v.
class NonEdgeCover {
 public:
  struct Choice {
    Vertex u = 0;
    Vertex v = 0;
    std::int64_t score = 0;
  };

  struct Stats {
    std::int64_t bound_evaluations = 0;
    std::int64_t exact_evaluations = 0;
    std::int64_t rebuilds = 0;
  };

  // g must be connected. The universe is every non-edge of g.
  explicit NonEdgeCover(const Graph& g);

  int num_vertices() const { return n_; }
  const Graph& graph() const { return g_; }
  const DistanceMatrix& metric() const { return dist_; }
  std::int64_t uncovered() const { return total_uncovered_; }
  bool IsCovered(Vertex a, Vertex b) const;

  // |S_{u,v} \ Y| right now.
  std::int64_t Score(Vertex u, Vertex v) const;

  // Maximizer of |S_{u,v} \ Y|, or nullopt once everything is covered.
  std::optional<Choice> Next();

  // Y <- Y + S_{u,v}. Returns the number of newly covered pairs; if
  // `newly` is given the pairs are appended to it.
  std::int64_t Confirm(Vertex u, Vertex v, std::vector<Edge>* newly = nullptr);

  // Adds {x, y} to the candidate graph, updates the metric exactly and
  // takes the pair out of the universe. Pairs whose two metric rows are
  // unchanged keep their queue entries, which stay valid upper bounds since
  // their scores can only drop; all other pairs are seeded afresh.
  void InsertEdge(Vertex x, Vertex y);

  // Exact scores of many pairs at once; the parallel kernel splits pairs
  // across OpenMP threads.
  std::vector<std::int64_t> ExactScores(std::span<const Edge> pairs) const;
  std::vector<std::int64_t> ExactScoresSerial(
      std::span<const Edge> pairs) const;

  const Stats& stats() const { return stats_; }

 private:
  struct Entry {
    std::int64_t bound;
    Vertex u;
    Vertex v;
    std::uint32_t epoch;
    // Insertion count when the entry was seeded; older than the last change
    // of either metric row means the entry is dead.
    std::uint32_t generation;
    std::uint8_t tier;
  };
  struct EntryLess {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.bound != b.bound) return a.bound < b.bound;
      if (a.u != b.u) return a.u > b.u;
      return a.v > b.v;
    }
  };

  const std::uint64_t* Ball(Vertex v, Distance r) const;
  std::int64_t BallSize(Vertex v, Distance r) const;
  void BuildBalls();
  void RebuildQueue();
  void PushEntry(const Entry& e);
  Entry PopEntry();
  bool IsLive(const Entry& e) const;
  std::int64_t LayerBound(Vertex u, Vertex v) const;
  std::int64_t RowBound(Vertex u, Vertex v) const;
  // Calls fn(a, word_index, mask_word) for every nonzero word of the
  // certificate mask restricted to rows that still hold uncovered pairs.
  template <typename Fn>
  void ForEachMaskWord(Vertex u, Vertex v, Fn&& fn) const;

  int n_;
  int words_;
  Graph g_;
  DistanceMatrix dist_;
  std::vector<Distance> ecc_;
  std::vector<std::size_t> ball_offset_;
  std::vector<std::uint64_t> balls_;
  std::vector<std::int32_t> ball_sizes_;
  std::vector<std::size_t> size_offset_;
  std::vector<std::uint64_t> uncovered_rows_;
  std::vector<std::int32_t> row_count_;
  std::vector<std::uint64_t> active_rows_;
  std::int64_t total_uncovered_ = 0;
  std::uint32_t epoch_ = 0;
  std::uint32_t generation_ = 0;
  // Insertion count at which each metric row last changed.
  std::vector<std::uint32_t> row_changed_at_;
  std::vector<Entry> queue_;  // binary heap under EntryLess
  Stats stats_;
};

}  // namespace graphprobe

#endif  // GRAPHPROBE_COVER_H_
