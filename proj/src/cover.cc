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

#include "graphprobe/cover.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace graphprobe {
namespace {

constexpr int kWordBits = 64;
// Ball storage beyond this many words (2 GiB) is refused.
constexpr std::size_t kMaxBallWords = std::size_t{1} << 28;

bool Satisfies(const DistanceMatrix& d, Vertex u, Vertex v, Vertex a,
               Vertex b) {
  const Distance duv = d.at(u, v);
  return d.at(u, a) + d.at(b, v) + 1 < duv || d.at(u, b) + d.at(a, v) + 1 < duv;
}

}  // namespace

std::vector<Edge> CertifiedNonEdges(const Graph& g, const DistanceMatrix& d,
                                    Vertex u, Vertex v) {
  CheckVertex(g, u);
  CheckVertex(g, v);
  if (u == v) throw std::invalid_argument("certificate set needs u != v");
  std::vector<Edge> out;
  const int n = g.num_vertices();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.HasEdge(a, b) && Satisfies(d, u, v, a, b)) out.push_back({a, b});
    }
  }
  return out;
}

NonEdgeCover::NonEdgeCover(const Graph& g)
    : n_(g.num_vertices()),
      words_((g.num_vertices() + kWordBits - 1) / kWordBits),
      g_(g),
      dist_(AllPairsDistances(g)) {
  for (Vertex v = 0; v < n_; ++v) {
    for (Distance x : dist_.row(v)) {
      if (!IsReachable(x)) {
        throw std::invalid_argument("candidate graph must be connected");
      }
    }
  }
  uncovered_rows_.assign(std::size_t(n_) * words_, 0);
  row_count_.assign(n_, 0);
  active_rows_.assign(words_, 0);
  for (Vertex a = 0; a < n_; ++a) {
    std::uint64_t* row = &uncovered_rows_[std::size_t(a) * words_];
    for (Vertex b = 0; b < n_; ++b) {
      if (b != a && dist_.at(a, b) >= 2) {
        row[b / kWordBits] |= std::uint64_t{1} << (b % kWordBits);
        ++row_count_[a];
      }
    }
    if (row_count_[a] > 0) {
      active_rows_[a / kWordBits] |= std::uint64_t{1} << (a % kWordBits);
    }
    total_uncovered_ += row_count_[a];
  }
  total_uncovered_ /= 2;
  BuildBalls();
  RebuildQueue();
}

void NonEdgeCover::BuildBalls() {
  ecc_.assign(n_, 0);
  ball_offset_.assign(n_ + 1, 0);
  size_offset_.assign(n_ + 1, 0);
  for (Vertex v = 0; v < n_; ++v) {
    const auto row = dist_.row(v);
    ecc_[v] = n_ == 0 ? 0 : *std::max_element(row.begin(), row.end());
    ball_offset_[v + 1] = ball_offset_[v] + std::size_t(ecc_[v] + 1) * words_;
    size_offset_[v + 1] = size_offset_[v] + ecc_[v] + 1;
  }
  if (ball_offset_[n_] > kMaxBallWords) {
    throw std::length_error("distance balls need too much memory");
  }
  balls_.assign(ball_offset_[n_], 0);
  ball_sizes_.assign(size_offset_[n_], 0);
  for (Vertex v = 0; v < n_; ++v) {
    std::uint64_t* base = &balls_[ball_offset_[v]];
    std::int32_t* sizes = &ball_sizes_[size_offset_[v]];
    const auto row = dist_.row(v);
    for (Vertex x = 0; x < n_; ++x) {
      base[std::size_t(row[x]) * words_ + x / kWordBits] |= std::uint64_t{1}
                                                            << (x % kWordBits);
      ++sizes[row[x]];
    }
    for (Distance r = 1; r <= ecc_[v]; ++r) {
      std::uint64_t* cur = base + std::size_t(r) * words_;
      const std::uint64_t* prev = cur - words_;
      for (int w = 0; w < words_; ++w) cur[w] |= prev[w];
      sizes[r] += sizes[r - 1];
    }
  }
}

const std::uint64_t* NonEdgeCover::Ball(Vertex v, Distance r) const {
  if (r < 0) return nullptr;
  r = std::min(r, ecc_[v]);
  return &balls_[ball_offset_[v] + std::size_t(r) * words_];
}

std::int64_t NonEdgeCover::BallSize(Vertex v, Distance r) const {
  if (r < 0) return 0;
  return ball_sizes_[size_offset_[v] + std::min(r, ecc_[v])];
}

bool NonEdgeCover::IsCovered(Vertex a, Vertex b) const {
  CheckVertex(g_, a);
  CheckVertex(g_, b);
  if (a == b) return true;
  return !(uncovered_rows_[std::size_t(a) * words_ + b / kWordBits] >>
               (b % kWordBits) &
           1);
}

template <typename Fn>
void NonEdgeCover::ForEachMaskWord(Vertex u, Vertex v, Fn&& fn) const {
  const Distance reach = dist_.at(u, v) - 2;
  if (reach < 0) return;
  const std::uint64_t* near_u = Ball(u, reach);
  const std::uint64_t* near_v = Ball(v, reach);
  for (int rw = 0; rw < words_; ++rw) {
    std::uint64_t rows = (near_u[rw] | near_v[rw]) & active_rows_[rw];
    while (rows != 0) {
      const Vertex a = rw * kWordBits + std::countr_zero(rows);
      rows &= rows - 1;
      // Partners b of a: d(v, b) <= reach - d(u, a), or the mirror image.
      const std::uint64_t* pv = Ball(v, reach - dist_.at(u, a));
      const std::uint64_t* pu = Ball(u, reach - dist_.at(v, a));
      const std::uint64_t* unc = &uncovered_rows_[std::size_t(a) * words_];
      for (int w = 0; w < words_; ++w) {
        std::uint64_t m =
            (pv != nullptr ? pv[w] : 0) | (pu != nullptr ? pu[w] : 0);
        m &= unc[w];
        if (m != 0) fn(a, w, m);
      }
    }
  }
}

std::int64_t NonEdgeCover::Score(Vertex u, Vertex v) const {
  std::int64_t twice = 0;
  ForEachMaskWord(
      u, v, [&](Vertex, int, std::uint64_t m) { twice += std::popcount(m); });
  return twice / 2;
}

std::int64_t NonEdgeCover::LayerBound(Vertex u, Vertex v) const {
  const Distance reach = dist_.at(u, v) - 2;
  std::int64_t sum = 0;
  for (Distance i = 0; i <= std::min(reach, ecc_[u]); ++i) {
    const std::int64_t layer = BallSize(u, i) - BallSize(u, i - 1);
    sum += layer * BallSize(v, reach - i);
  }
  return sum;
}

std::int64_t NonEdgeCover::RowBound(Vertex u, Vertex v) const {
  const Distance reach = dist_.at(u, v) - 2;
  if (reach < 0) return 0;
  const std::uint64_t* near_u = Ball(u, reach);
  const std::uint64_t* near_v = Ball(v, reach);
  std::int64_t twice = 0;
  for (int rw = 0; rw < words_; ++rw) {
    std::uint64_t rows = (near_u[rw] | near_v[rw]) & active_rows_[rw];
    while (rows != 0) {
      const Vertex a = rw * kWordBits + std::countr_zero(rows);
      rows &= rows - 1;
      const std::int64_t cap = BallSize(v, reach - dist_.at(u, a)) +
                               BallSize(u, reach - dist_.at(v, a));
      twice += std::min<std::int64_t>(cap, row_count_[a]);
    }
  }
  return twice / 2;
}

void NonEdgeCover::RebuildQueue() {
  queue_.clear();
  row_changed_at_.assign(n_, generation_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (dist_.at(u, v) < 2) continue;
      const std::int64_t bound = std::min(LayerBound(u, v), total_uncovered_);
      if (bound > 0) queue_.push_back({bound, u, v, epoch_, generation_, 0});
    }
  }
  stats_.bound_evaluations += static_cast<std::int64_t>(queue_.size());
  std::make_heap(queue_.begin(), queue_.end(), EntryLess());
}

void NonEdgeCover::PushEntry(const Entry& e) {
  queue_.push_back(e);
  std::push_heap(queue_.begin(), queue_.end(), EntryLess());
}

NonEdgeCover::Entry NonEdgeCover::PopEntry() {
  std::pop_heap(queue_.begin(), queue_.end(), EntryLess());
  const Entry e = queue_.back();
  queue_.pop_back();
  return e;
}

bool NonEdgeCover::IsLive(const Entry& e) const {
  return e.generation >= row_changed_at_[e.u] &&
         e.generation >= row_changed_at_[e.v];
}

std::optional<NonEdgeCover::Choice> NonEdgeCover::Next() {
  while (total_uncovered_ > 0) {
    if (queue_.empty()) {
      throw std::logic_error("uncovered pairs remain but no candidate scores");
    }
    Entry e = PopEntry();
    if (!IsLive(e)) continue;
    if (e.tier == 2 && e.epoch == epoch_) return Choice{e.u, e.v, e.bound};
    if (e.tier == 0) {
      e.bound = std::min(e.bound, RowBound(e.u, e.v));
      e.tier = 1;
      ++stats_.bound_evaluations;
    } else {
      e.bound = Score(e.u, e.v);
      e.tier = 2;
      ++stats_.exact_evaluations;
    }
    e.epoch = epoch_;
    if (e.bound > 0) PushEntry(e);
  }
  return std::nullopt;
}

std::int64_t NonEdgeCover::Confirm(Vertex u, Vertex v,
                                   std::vector<Edge>* newly) {
  CheckVertex(g_, u);
  CheckVertex(g_, v);
  std::int64_t cleared = 0;
  ForEachMaskWord(u, v, [&](Vertex a, int w, std::uint64_t m) {
    if (newly != nullptr) {
      for (std::uint64_t bits = m; bits != 0; bits &= bits - 1) {
        const Vertex b = w * kWordBits + std::countr_zero(bits);
        if (a < b) newly->push_back({a, b});
      }
    }
    const int k = std::popcount(m);
    uncovered_rows_[std::size_t(a) * words_ + w] &= ~m;
    row_count_[a] -= k;
    if (row_count_[a] == 0) {
      active_rows_[a / kWordBits] &= ~(std::uint64_t{1} << (a % kWordBits));
    }
    cleared += k;
  });
  if (cleared > 0) {
    ++epoch_;
    total_uncovered_ -= cleared / 2;
  }
  return cleared / 2;
}

void NonEdgeCover::InsertEdge(Vertex x, Vertex y) {
  if (!g_.AddEdge(x, y)) return;
  const std::vector<Distance> dx(dist_.row(x).begin(), dist_.row(x).end());
  const std::vector<Distance> dy(dist_.row(y).begin(), dist_.row(y).end());
  ++generation_;
  std::vector<char> changed(n_, 0);
  for (Vertex s = 0; s < n_; ++s) {
    auto row = dist_.row(s);
    for (Vertex t = 0; t < n_; ++t) {
      const Distance via = std::min(dx[s] + 1 + dy[t], dy[s] + 1 + dx[t]);
      if (via < row[t]) {
        row[t] = via;
        changed[s] = 1;
      }
    }
    if (changed[s]) row_changed_at_[s] = generation_;
  }
  for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
    std::uint64_t& word =
        uncovered_rows_[std::size_t(a) * words_ + b / kWordBits];
    const std::uint64_t bit = std::uint64_t{1} << (b % kWordBits);
    if (word & bit) {
      word &= ~bit;
      if (--row_count_[a] == 0) {
        active_rows_[a / kWordBits] &= ~(std::uint64_t{1} << (a % kWordBits));
      }
      if (a == x) --total_uncovered_;
    }
  }
  ++epoch_;
  ++stats_.rebuilds;
  BuildBalls();
  // Dead entries are dropped wholesale once they dominate the heap.
  std::vector<Entry> kept;
  const bool compact = queue_.size() > std::size_t(n_) * n_;
  if (compact) {
    for (const Entry& e : queue_) {
      if (IsLive(e)) kept.push_back(e);
    }
  }
  std::int64_t seeded = 0;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (!changed[u] && !changed[v]) continue;
      if (dist_.at(u, v) < 2) continue;
      const std::int64_t bound = std::min(LayerBound(u, v), total_uncovered_);
      if (bound <= 0) continue;
      const Entry e{bound, u, v, epoch_, generation_, 0};
      if (compact) {
        kept.push_back(e);
      } else {
        PushEntry(e);
      }
      ++seeded;
    }
  }
  if (compact) {
    queue_ = std::move(kept);
    std::make_heap(queue_.begin(), queue_.end(), EntryLess());
  }
  stats_.bound_evaluations += seeded;
}

std::vector<std::int64_t> NonEdgeCover::ExactScores(
    std::span<const Edge> pairs) const {
  std::vector<std::int64_t> out(pairs.size());
  const std::int64_t count = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < count; ++i) {
    out[i] = Score(pairs[i].u, pairs[i].v);
  }
  return out;
}

std::vector<std::int64_t> NonEdgeCover::ExactScoresSerial(
    std::span<const Edge> pairs) const {
  std::vector<std::int64_t> out(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out[i] = Score(pairs[i].u, pairs[i].v);
  }
  return out;
}

}  // namespace graphprobe
