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

#include "graphprobe/reconstruct.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "graphprobe/cover.h"
#include "graphprobe/metric.h"

namespace graphprobe {
namespace {

VertexSet Sorted(std::span<const Vertex> s) {
  VertexSet out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

Distance CachedOrThrow(const OracleSession& session, Vertex u, Vertex v) {
  const std::optional<Distance> d = session.Cached(u, v);
  if (!d) {
    throw CacheMiss("no cached answer for pair (" + std::to_string(u) + ", " +
                    std::to_string(v) + ")");
  }
  return *d;
}

// Path-compressing union-find over cluster indices.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

std::vector<Vertex> PathWithin(OracleSession& session,
                               std::span<const Vertex> u, Vertex a, Vertex b) {
  const Distance d = session.QueryDistance(a, b);
  if (d <= 1) return {a, b};
  std::vector<Distance> da, db;
  session.QueryRow(a, u, da);
  session.QueryRow(b, u, db);
  const Distance mid = d / 2;
  Vertex c = -1;
  std::vector<Vertex> near, far;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (da[i] + db[i] != d) continue;
    if (da[i] < mid) {
      near.push_back(u[i]);
    } else if (da[i] > mid) {
      far.push_back(u[i]);
    } else if (c == -1 || u[i] < c) {
      c = u[i];
    }
  }
  if (c == -1) {
    throw std::runtime_error(
        "no geodesic midpoint inside the subset; it is not self-contained");
  }
  std::vector<Vertex> path = PathWithin(session, near, a, c);
  const std::vector<Vertex> rest = PathWithin(session, far, c, b);
  path.insert(path.end(), rest.begin() + 1, rest.end());
  return path;
}

class ChordalReconstructor {
 public:
  ChordalReconstructor(OracleSession& session, const ChordalParams& params,
                       std::mt19937_64& rng, const ChordalObserver* observer)
      : session_(session), params_(params), rng_(rng), observer_(observer) {}

  void Run(const VertexSet& u, int depth) {
    ++result_.stats.recursion_nodes;
    result_.stats.max_depth = std::max(result_.stats.max_depth, depth);
    if (static_cast<std::int64_t>(u.size()) <= params_.n0) {
      Exhaustive(u);
      return;
    }
    const VertexSet k =
        BalancedSeparator(session_, u, params_, rng_, &result_.stats.separator);
    const ClusterFamily parts = Partition(session_, u, k);
    if (observer_ != nullptr && observer_->on_split) {
      observer_->on_split(u, k, parts.clusters);
    }
    for (const VertexSet& part : parts.clusters) {
      VertexSet sub = part;
      sub.insert(sub.end(), k.begin(), k.end());
      std::sort(sub.begin(), sub.end());
      // Only reachable with an overridden n0 far below its default: the
      // split made no progress, so finish this subset directly.
      if (sub.size() >= u.size()) {
        Exhaustive(u);
        return;
      }
    }
    for (const VertexSet& part : parts.clusters) {
      VertexSet sub = part;
      sub.insert(sub.end(), k.begin(), k.end());
      std::sort(sub.begin(), sub.end());
      Run(sub, depth + 1);
    }
  }

  ChordalReconstructResult Finish() {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    result_.edges = std::move(edges_);
    return std::move(result_);
  }

 private:
  void Exhaustive(const VertexSet& u) {
    ++result_.stats.base_cases;
    if (u.size() < 2) return;
    const DistanceTable t = session_.QueryBatch(u, u);
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t j = i + 1; j < u.size(); ++j) {
        if (t.at(i, j) == 1) edges_.push_back(Edge::Canonical(u[i], u[j]));
      }
    }
  }

  OracleSession& session_;
  const ChordalParams& params_;
  std::mt19937_64& rng_;
  const ChordalObserver* observer_;
  std::vector<Edge> edges_;
  ChordalReconstructResult result_;
};

}  // namespace

std::vector<Edge> ReconstructionCertificates(const Graph& x, Vertex u,
                                             Vertex v) {
  if (!x.IsConnected()) {
    throw std::invalid_argument("reconstruction graph must be connected");
  }
  return CertifiedNonEdges(x, AllPairsDistances(x), u, v);
}

GreedyReconstructResult GreedyReconstruct(OracleSession& session,
                                          const ReconstructObserver* observer) {
  const int n = session.num_vertices();
  GreedyReconstructResult result{Graph(n), {}};
  if (n == 1) return result;
  const Vertex u0 = 0;
  Graph x(n);
  for (Vertex u = 1; u < n; ++u) {
    const std::vector<Vertex> path = session.QueryPath(u, u0);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (!x.HasEdge(path[i], path[i + 1])) x.AddEdge(path[i], path[i + 1]);
    }
  }
  result.stats.init_queries = session.counts().cached();

  NonEdgeCover cover(x);
  std::vector<Edge> confirmed;
  while (const std::optional<NonEdgeCover::Choice> c = cover.Next()) {
    const std::vector<Vertex> path = session.QueryPath(c->u, c->v);
    const Distance answered = static_cast<Distance>(path.size()) - 1;
    if (answered == cover.metric().at(c->u, c->v)) {
      confirmed.clear();
      cover.Confirm(c->u, c->v, &confirmed);
      ++result.stats.confirmations;
      if (observer != nullptr && observer->on_step) {
        observer->on_step(cover.graph(), confirmed, std::nullopt);
      }
      continue;
    }
    // X is a subgraph of G, so the true path is strictly shorter and must
    // use an edge X lacks.
    std::optional<Edge> added;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (!cover.graph().HasEdge(path[i], path[i + 1])) {
        added = Edge::Canonical(path[i], path[i + 1]);
        break;
      }
    }
    if (!added) {
      throw std::logic_error("oracle path disagrees with X but adds no edge");
    }
    cover.InsertEdge(added->u, added->v);
    ++result.stats.edge_additions;
    if (observer != nullptr && observer->on_step) {
      observer->on_step(cover.graph(), {}, added);
    }
  }
  result.stats.loop_queries =
      session.counts().cached() - result.stats.init_queries;
  result.graph = cover.graph();
  return result;
}

VertexSet Cluster(const OracleSession& session, std::span<const Vertex> u,
                  std::span<const Vertex> s, Vertex a) {
  VertexSet out;
  for (Vertex x : u) {
    if (std::find(s.begin(), s.end(), x) != s.end()) continue;
    Distance to_s = kUnreachable;
    for (Vertex z : s) {
      const Distance d = CachedOrThrow(session, z, x);
      if (to_s == kUnreachable || d < to_s) to_s = d;
    }
    const Distance to_a = x == a ? 0 : CachedOrThrow(session, a, x);
    if (to_a <= to_s) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClusterFamily Partition(OracleSession& session, std::span<const Vertex> u,
                        std::span<const Vertex> s) {
  if (s.empty()) throw std::invalid_argument("separator must be nonempty");
  const VertexSet us = Sorted(u);
  const VertexSet ss = Sorted(s);
  if (!std::includes(us.begin(), us.end(), ss.begin(), ss.end())) {
    throw std::invalid_argument("separator must lie inside the subset");
  }
  const DistanceTable from_s = session.QueryBatch(ss, us);
  VertexSet near;
  for (std::size_t j = 0; j < us.size(); ++j) {
    for (std::size_t i = 0; i < ss.size(); ++i) {
      if (from_s.at(i, j) <= 1) {
        near.push_back(us[j]);
        break;
      }
    }
  }
  session.QueryBatch(near, us);

  ClusterFamily out;
  std::set_difference(near.begin(), near.end(), ss.begin(), ss.end(),
                      std::back_inserter(out.anchors));
  std::vector<VertexSet> balls;
  balls.reserve(out.anchors.size());
  for (Vertex a : out.anchors) balls.push_back(Cluster(session, us, ss, a));

  // Clusters sharing a vertex end up in one set.
  DisjointSets sets(static_cast<int>(balls.size()));
  std::vector<int> owner(session.num_vertices(), -1);
  for (std::size_t i = 0; i < balls.size(); ++i) {
    for (Vertex x : balls[i]) {
      if (owner[x] == -1) {
        owner[x] = static_cast<int>(i);
      } else {
        sets.Union(owner[x], static_cast<int>(i));
      }
    }
  }
  std::vector<int> slot(balls.size(), -1);
  for (std::size_t i = 0; i < balls.size(); ++i) {
    const int root = sets.Find(static_cast<int>(i));
    if (slot[root] == -1) {
      slot[root] = static_cast<int>(out.clusters.size());
      out.clusters.emplace_back();
    }
    VertexSet& merged = out.clusters[slot[root]];
    merged.insert(merged.end(), balls[i].begin(), balls[i].end());
  }
  for (VertexSet& c : out.clusters) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  std::sort(out.clusters.begin(), out.clusters.end(),
            [](const VertexSet& a, const VertexSet& b) {
              return a.front() < b.front();
            });
  return out;
}

std::vector<Vertex> ShortestPathSubroutine(OracleSession& session,
                                           std::span<const Vertex> u, Vertex a,
                                           Vertex b) {
  if (a == b) throw std::invalid_argument("endpoints must differ");
  return PathWithin(session, u, a, b);
}

ChordalParams ChordalParams::FromDegree(int max_degree) {
  if (max_degree < 1 || max_degree > 24) {
    throw std::invalid_argument("max degree must lie in [1, 24]");
  }
  const double d = max_degree;
  ChordalParams p;
  p.max_degree = max_degree;
  p.n0 = (std::int64_t{1} << (max_degree + 2)) * (max_degree + 1) *
         (max_degree + 1);
  p.beta = std::max(1.0 - 1.0 / (d * std::ldexp(1.0, max_degree + 1)),
                    std::sqrt(1.0 - 1.0 / (4.0 * (d + 1))));
  p.c1 = 256.0 * (d + 1) * (d + 1);
  return p;
}

std::optional<VertexSet> BalancedSeparatorAttempt(OracleSession& session,
                                                  std::span<const Vertex> u,
                                                  const ChordalParams& params,
                                                  std::mt19937_64& rng,
                                                  SeparatorStats* stats) {
  const VertexSet us = Sorted(u);
  if (us.size() < 2) throw std::invalid_argument("subset too small to split");
  SeparatorStats local;
  SeparatorStats& st = stats != nullptr ? *stats : local;
  ++st.attempts;

  const auto samples = static_cast<std::int64_t>(
      std::ceil(params.c1 * std::log2(static_cast<double>(us.size()))));
  std::vector<std::int64_t> occurrences(session.num_vertices(), 0);
  std::uniform_int_distribution<std::size_t> pick(0, us.size() - 1);
  for (std::int64_t i = 0; i < samples; ++i) {
    Vertex a, b;
    do {
      a = us[pick(rng)];
      b = us[pick(rng)];
    } while (a == b);
    for (Vertex v : ShortestPathSubroutine(session, us, a, b)) {
      ++occurrences[v];
    }
    ++st.sampled_paths;
  }
  Vertex x = us.front();
  for (Vertex v : us) {
    if (occurrences[v] > occurrences[x]) x = v;
  }

  std::vector<Distance> row;
  session.QueryRow(x, us, row);
  VertexSet closed, around;
  for (std::size_t i = 0; i < us.size(); ++i) {
    if (row[i] > 1) continue;
    closed.push_back(us[i]);
    if (us[i] != x) around.push_back(us[i]);
  }
  if (around.size() > 30) {
    throw std::runtime_error("neighborhood too large for clique enumeration");
  }
  const DistanceTable adj = session.QueryBatch(closed, closed);
  const auto pos = [&](Vertex v) {
    return std::lower_bound(closed.begin(), closed.end(), v) - closed.begin();
  };
  const double limit = params.beta * static_cast<double>(us.size());
  const std::uint32_t masks = std::uint32_t{1} << around.size();
  // Nonempty neighbor subsets by increasing mask, then {x} alone.
  for (std::uint32_t step = 1; step <= masks; ++step) {
    const std::uint32_t mask = step % masks;
    VertexSet k = {x};
    bool clique = true;
    for (std::size_t i = 0; i < around.size() && clique; ++i) {
      if (!(mask >> i & 1)) continue;
      for (std::size_t j = 0; j < i && clique; ++j) {
        if ((mask >> j & 1) && adj.at(pos(around[i]), pos(around[j])) != 1) {
          clique = false;
        }
      }
      k.push_back(around[i]);
    }
    if (!clique) continue;
    std::sort(k.begin(), k.end());
    ++st.cliques_tried;
    const ClusterFamily parts = Partition(session, us, k);
    std::size_t largest = 0;
    for (const VertexSet& p : parts.clusters) {
      largest = std::max(largest, p.size());
    }
    if (static_cast<double>(largest) < limit) return k;
  }
  return std::nullopt;
}

VertexSet BalancedSeparator(OracleSession& session, std::span<const Vertex> u,
                            const ChordalParams& params, std::mt19937_64& rng,
                            SeparatorStats* stats) {
  for (int i = 0; i < kMaxSeparatorRepeats; ++i) {
    if (auto k = BalancedSeparatorAttempt(session, u, params, rng, stats)) {
      return *std::move(k);
    }
  }
  throw SeparatorNotFound(
      "no balanced clique separator after " +
      std::to_string(kMaxSeparatorRepeats) +
      " repeats; the hidden graph is likely not chordal or exceeds the "
      "degree bound");
}

ChordalReconstructResult ReconstructChordal(OracleSession& session,
                                            std::span<const Vertex> u,
                                            const ChordalParams& params,
                                            std::mt19937_64& rng,
                                            const ChordalObserver* observer) {
  VertexSet all = Sorted(u);
  if (all.empty()) {
    all.resize(session.num_vertices());
    std::iota(all.begin(), all.end(), 0);
  }
  ChordalReconstructor r(session, params, rng, observer);
  r.Run(all, 0);
  return r.Finish();
}

}  // namespace graphprobe
