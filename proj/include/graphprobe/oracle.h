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

#ifndef GRAPHPROBE_ORACLE_H_
#define GRAPHPROBE_ORACLE_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphprobe/graph.h"
#include "graphprobe/metric.h"

namespace graphprobe {

struct QueryCounts {
  // Distinct non-identity pairs answered, by oracle kind.
  std::int64_t distance = 0;
  std::int64_t path = 0;
  // Every requested pair, repeats and identities included.
  std::int64_t raw = 0;

  std::int64_t cached() const { return distance + path; }
};

class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(const std::string& what, QueryCounts counts)
      : std::runtime_error(what), counts_(counts) {}
  const QueryCounts& counts() const { return counts_; }

 private:
  QueryCounts counts_;
};

class TimeLimitExceeded : public std::runtime_error {
 public:
  TimeLimitExceeded(const std::string& what, QueryCounts counts)
      : std::runtime_error(what), counts_(counts) {}
  const QueryCounts& counts() const { return counts_; }

 private:
  QueryCounts counts_;
};

enum class QueryKind { kDistance, kPath };

struct QueryLogEntry {
  QueryKind kind = QueryKind::kDistance;
  Vertex u = 0;
  Vertex v = 0;
  Distance distance = 0;
  std::vector<Vertex> path;  // Empty for distance queries.
};

struct OracleOptions {
  // Maximum number of counted queries; exceeding it throws BudgetExhausted.
  std::optional<std::int64_t> budget;
  std::optional<std::chrono::milliseconds> time_limit;
  bool record_log = false;
  // Pairs cached in a dense table up to this many vertices, hashed above.
  int dense_cap = LazyMetric::kDefaultDenseCap;
};

// |S| x |T| answers of a batch, row-major in the order S and T were given.
struct DistanceTable {
  std::vector<Vertex> rows;
  std::vector<Vertex> cols;
  std::vector<Distance> data;

  Distance at(std::size_t i, std::size_t j) const {
    return data[i * cols.size() + j];
  }
};

// The only access point to a hidden graph. Algorithms see answers, never
// adjacency. Each distinct unordered pair is counted once per session and
// per oracle kind; (u, u) is answered for free. Not thread safe: a session
// belongs to one run.
class OracleSession {
 public:
  explicit OracleSession(Graph hidden, OracleOptions options = {});
  OracleSession(const OracleSession&) = delete;
  OracleSession& operator=(const OracleSession&) = delete;

  int num_vertices() const { return n_; }

  Distance QueryDistance(Vertex u, Vertex v);
  // A shortest path from u to v; of all shortest paths, the one traced by
  // BFS from the smaller endpoint taking the lowest-id parent at each hop.
  std::vector<Vertex> QueryPath(Vertex u, Vertex v);
  // Query(S, T): every pair of S x T, repeats inside the batch and pairs
  // already answered served without recounting.
  DistanceTable QueryBatch(std::span<const Vertex> s,
                           std::span<const Vertex> t);
  // Query({source}, targets) written into `out` (resized to targets.size()).
  void QueryRow(Vertex source, std::span<const Vertex> targets,
                std::vector<Distance>& out);

  // A previously answered distance, without querying.
  std::optional<Distance> Cached(Vertex u, Vertex v) const;

  const QueryCounts& counts() const { return counts_; }
  const std::vector<QueryLogEntry>& log() const { return log_; }
  // CSV with header idx,kind,u,v,answer. Path answers are dash-joined.
  void WriteLogCsv(std::ostream& out) const;

  // Throws TimeLimitExceeded once the deadline has passed. Queries check
  // this themselves; long query-free computations may call it directly.
  void CheckDeadline() const;

 private:
  Distance Answer(Vertex u, Vertex v);
  void Charge(QueryKind kind);
  void Validate(Vertex u, Vertex v) const;
  Distance Lookup(Vertex u, Vertex v) const;
  void Store(Vertex u, Vertex v, Distance d);

  int n_;
  Graph hidden_;
  LazyMetric truth_;
  OracleOptions options_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  QueryCounts counts_;
  std::vector<QueryLogEntry> log_;
  bool dense_;
  std::vector<Distance> dense_cache_;
  std::unordered_map<std::uint64_t, Distance> sparse_cache_;
  std::unordered_map<std::uint64_t, std::vector<Vertex>> path_cache_;
};

// Distance through a shortest-path query; uses the path counter.
Distance DistanceFromPathOracle(OracleSession& session, Vertex u, Vertex v);

}  // namespace graphprobe

#endif  // GRAPHPROBE_ORACLE_H_
