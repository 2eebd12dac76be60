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

#include "graphprobe/oracle.h"

#include <algorithm>
#include <ostream>

namespace graphprobe {
namespace {

constexpr Distance kUnknown = -2;
constexpr std::int64_t kDeadlineStride = 1024;

}  // namespace

OracleSession::OracleSession(Graph hidden, OracleOptions options)
    : n_(hidden.num_vertices()),
      hidden_(std::move(hidden)),
      truth_(hidden_, options.dense_cap),
      options_(options),
      dense_(n_ <= options.dense_cap) {
  if (options_.time_limit) {
    deadline_ = std::chrono::steady_clock::now() + *options_.time_limit;
  }
  if (dense_) dense_cache_.assign(std::size_t(n_) * n_, kUnknown);
}

void OracleSession::Validate(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw std::invalid_argument("query on invalid vertex pair (" +
                                std::to_string(u) + ", " + std::to_string(v) +
                                ")");
  }
}

void OracleSession::CheckDeadline() const {
  if (deadline_ && std::chrono::steady_clock::now() > *deadline_) {
    throw TimeLimitExceeded("time limit exceeded", counts_);
  }
}

Distance OracleSession::Lookup(Vertex u, Vertex v) const {
  if (dense_) return dense_cache_[std::size_t(u) * n_ + v];
  const auto it = sparse_cache_.find(PairKey(u, v));
  return it == sparse_cache_.end() ? kUnknown : it->second;
}

void OracleSession::Store(Vertex u, Vertex v, Distance d) {
  if (dense_) {
    dense_cache_[std::size_t(u) * n_ + v] = d;
    dense_cache_[std::size_t(v) * n_ + u] = d;
  } else {
    sparse_cache_[PairKey(u, v)] = d;
  }
}

void OracleSession::Charge(QueryKind kind) {
  if (options_.budget && counts_.cached() >= *options_.budget) {
    throw BudgetExhausted(
        "query budget of " + std::to_string(*options_.budget) + " exhausted",
        counts_);
  }
  if (kind == QueryKind::kDistance) {
    ++counts_.distance;
  } else {
    ++counts_.path;
  }
}

Distance OracleSession::Answer(Vertex u, Vertex v) {
  ++counts_.raw;
  if (counts_.raw % kDeadlineStride == 0) CheckDeadline();
  if (u == v) return 0;
  Distance d = Lookup(u, v);
  if (d != kUnknown) return d;
  Charge(QueryKind::kDistance);
  d = truth_.At(u, v);
  Store(u, v, d);
  if (options_.record_log) log_.push_back({QueryKind::kDistance, u, v, d, {}});
  return d;
}

Distance OracleSession::QueryDistance(Vertex u, Vertex v) {
  Validate(u, v);
  return Answer(u, v);
}

std::vector<Vertex> OracleSession::QueryPath(Vertex u, Vertex v) {
  Validate(u, v);
  ++counts_.raw;
  if (counts_.raw % kDeadlineStride == 0) CheckDeadline();
  if (u == v) return {u};
  const std::uint64_t key = PairKey(u, v);
  auto it = path_cache_.find(key);
  if (it == path_cache_.end()) {
    Charge(QueryKind::kPath);
    const Vertex src = std::min(u, v);
    const Vertex dst = std::max(u, v);
    const auto row = truth_.Row(src);
    std::vector<Vertex> path;
    if (IsReachable(row[dst])) {
      Vertex cur = dst;
      path.push_back(cur);
      while (cur != src) {
        // Adjacency is sorted, so the first qualifying neighbor is lowest.
        for (Vertex w : hidden_.neighbors(cur)) {
          if (row[w] == row[cur] - 1) {
            cur = w;
            break;
          }
        }
        path.push_back(cur);
      }
      std::reverse(path.begin(), path.end());
    }
    const Distance d =
        path.empty() ? kUnreachable : static_cast<Distance>(path.size() - 1);
    if (Lookup(u, v) == kUnknown) Store(u, v, d);
    it = path_cache_.emplace(key, std::move(path)).first;
    if (options_.record_log) {
      log_.push_back({QueryKind::kPath, src, dst, d, it->second});
    }
  }
  std::vector<Vertex> out = it->second;
  if (!out.empty() && out.front() != u) std::reverse(out.begin(), out.end());
  return out;
}

void OracleSession::QueryRow(Vertex source, std::span<const Vertex> targets,
                             std::vector<Distance>& out) {
  out.resize(targets.size());
  for (std::size_t j = 0; j < targets.size(); ++j) {
    Validate(source, targets[j]);
    out[j] = Answer(source, targets[j]);
  }
}

DistanceTable OracleSession::QueryBatch(std::span<const Vertex> s,
                                        std::span<const Vertex> t) {
  if (s.empty() || t.empty()) {
    throw std::invalid_argument("query batch on an empty set");
  }
  DistanceTable table{{s.begin(), s.end()}, {t.begin(), t.end()}, {}};
  table.data.reserve(s.size() * t.size());
  std::vector<Distance> row;
  for (Vertex a : s) {
    QueryRow(a, t, row);
    table.data.insert(table.data.end(), row.begin(), row.end());
  }
  return table;
}

std::optional<Distance> OracleSession::Cached(Vertex u, Vertex v) const {
  Validate(u, v);
  if (u == v) return 0;
  const Distance d = Lookup(u, v);
  if (d == kUnknown) return std::nullopt;
  return d;
}

void OracleSession::WriteLogCsv(std::ostream& out) const {
  out << "idx,kind,u,v,answer\n";
  for (std::size_t i = 0; i < log_.size(); ++i) {
    const QueryLogEntry& e = log_[i];
    out << i << ',' << (e.kind == QueryKind::kDistance ? "distance" : "path")
        << ',' << e.u << ',' << e.v << ',';
    if (e.kind == QueryKind::kDistance) {
      out << e.distance;
    } else {
      for (std::size_t k = 0; k < e.path.size(); ++k) {
        if (k > 0) out << '-';
        out << e.path[k];
      }
    }
    out << '\n';
  }
}

Distance DistanceFromPathOracle(OracleSession& session, Vertex u, Vertex v) {
  const std::vector<Vertex> path = session.QueryPath(u, v);
  return path.empty() ? kUnreachable : static_cast<Distance>(path.size() - 1);
}

}  // namespace graphprobe
