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

#include "graphprobe/verify.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "graphprobe/cover.h"

namespace graphprobe {
namespace {

// Queries rows x cols and compares every answer with expected(a, b).
// Stops at the first disagreeing row and records it.
template <typename Expected>
bool CheckBatch(OracleSession& session, std::span<const Vertex> rows,
                std::span<const Vertex> cols, Expected&& expected,
                VerifyResult& result) {
  std::vector<Distance> answers;
  for (Vertex a : rows) {
    session.QueryRow(a, cols, answers);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Distance want = expected(a, cols[j]);
      if (answers[j] != want) {
        result.yes = false;
        result.mismatch = Mismatch{a, cols[j], want, answers[j]};
        return false;
      }
    }
  }
  return true;
}

VertexSet SortedUnion(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

VertexSet Sorted(std::span<const Vertex> subset) {
  VertexSet u(subset.begin(), subset.end());
  std::sort(u.begin(), u.end());
  if (std::adjacent_find(u.begin(), u.end()) != u.end()) {
    throw std::invalid_argument("vertex subset has duplicates");
  }
  return u;
}

void Track(VerifyStats& stats, int depth) {
  ++stats.recursion_nodes;
  stats.max_depth = std::max(stats.max_depth, depth);
}

}  // namespace

VerifyResult VerifyEdges(OracleSession& session, const Graph& candidate,
                         OracleMode mode) {
  VerifyResult r;
  r.yes = true;
  const std::int64_t start = session.counts().cached();
  for (const Edge& e : candidate.Edges()) {
    const Distance d = mode == OracleMode::kDistance
                           ? session.QueryDistance(e.u, e.v)
                           : DistanceFromPathOracle(session, e.u, e.v);
    if (d != 1) {
      r.yes = false;
      r.mismatch = Mismatch{e.u, e.v, 1, d};
      break;
    }
  }
  r.stats.edge_queries = session.counts().cached() - start;
  return r;
}

VerifyResult GreedyVerify(OracleSession& session, const Graph& candidate,
                          const GreedyVerifyOptions& options) {
  VerifyResult r = VerifyEdges(session, candidate, options.mode);
  if (!r.yes) return r;
  const std::int64_t start = session.counts().cached();
  NonEdgeCover cover(candidate);
  std::vector<Edge> confirmed;
  const VerifyObserver* obs = options.observer;
  while (const auto choice = cover.Next()) {
    session.CheckDeadline();
    const Distance d =
        options.mode == OracleMode::kDistance
            ? session.QueryDistance(choice->u, choice->v)
            : DistanceFromPathOracle(session, choice->u, choice->v);
    const Distance want = cover.metric().at(choice->u, choice->v);
    if (d != want) {
      r.yes = false;
      r.mismatch = Mismatch{choice->u, choice->v, want, d};
      break;
    }
    if (obs != nullptr && obs->on_confirm) {
      confirmed.clear();
      cover.Confirm(choice->u, choice->v, &confirmed);
      obs->on_confirm(choice->u, choice->v, confirmed);
    } else {
      cover.Confirm(choice->u, choice->v);
    }
  }
  r.stats.nonedge_queries = session.counts().cached() - start;
  return r;
}

RecursionParams RecursionParams::Compute(int n, int max_degree) {
  RecursionParams p;
  p.max_degree = max_degree;
  int k0 = 0;
  if (n >= 4) {
    const double lg = std::log2(static_cast<double>(n));
    const double ball = static_cast<double>(max_degree) * max_degree + 1;
    const double inner = lg * 32.0 * ball * ball;
    k0 = static_cast<int>(std::floor(std::sqrt(lg / std::log2(inner))));
  }
  if (k0 < 1) {
    p.k0 = 1;
    p.s = n;
    p.n0 = n;
    return p;
  }
  p.k0 = k0;
  p.s = std::pow(static_cast<double>(n), 1.0 / k0);
  const double ball = static_cast<double>(max_degree) * max_degree + 1;
  const double n0 = std::pow(4.0 * ball, k0);
  p.n0 = n0 >= 9e18 ? std::numeric_limits<std::int64_t>::max()
                    : static_cast<std::int64_t>(n0);
  return p;
}

namespace {

inline bool CloserThanCenters(Distance dw, Distance da) {
  return !IsReachable(da) || dw < da;
}

}  // namespace

std::vector<int> CellCounts(const DistanceMatrix& metric,
                            std::span<const Distance> dist_to_centers,
                            std::span<const Vertex> subset) {
  const int n = metric.size();
  std::vector<int> counts(n, 0);
#pragma omp parallel for schedule(static)
  for (Vertex w = 0; w < n; ++w) {
    const auto row = metric.row(w);
    int c = 0;
    for (Vertex v : subset) c += CloserThanCenters(row[v], dist_to_centers[v]);
    counts[w] = c;
  }
  return counts;
}

std::vector<int> CellCountsSerial(const DistanceMatrix& metric,
                                  std::span<const Distance> dist_to_centers,
                                  std::span<const Vertex> subset) {
  const int n = metric.size();
  std::vector<int> counts(n, 0);
  for (Vertex w = 0; w < n; ++w) {
    for (Vertex v : subset) {
      counts[w] += CloserThanCenters(metric.at(w, v), dist_to_centers[v]);
    }
  }
  return counts;
}

CenterSet SubsetCenters(const DistanceMatrix& metric,
                        std::span<const Vertex> subset, double s,
                        std::mt19937_64& rng) {
  const int n = metric.size();
  if (subset.empty()) throw std::invalid_argument("empty vertex subset");
  if (!(s >= 1 && s <= n)) throw std::invalid_argument("s must lie in [1, n]");
  CenterSet cs;
  cs.s = s;
  cs.dist_to_centers.assign(n, kUnreachable);
  const double threshold = 4.0 * static_cast<double>(subset.size()) / s;
  const int cap = 64 * static_cast<int>(std::ceil(std::log2(std::max(n, 2))));
  std::vector<Vertex> heavy;
  for (;;) {
    const std::vector<int> counts =
        CellCounts(metric, cs.dist_to_centers, subset);
    heavy.clear();
    for (Vertex w = 0; w < n; ++w) {
      if (counts[w] > threshold) heavy.push_back(w);
    }
    if (heavy.empty()) break;
    if (cs.rounds >= cap) {
      throw std::runtime_error("center selection did not converge within " +
                               std::to_string(cap) + " rounds");
    }
    std::bernoulli_distribution pick(
        std::min(s / static_cast<double>(heavy.size()), 1.0));
    for (Vertex w : heavy) {
      if (!pick(rng)) continue;
      cs.centers.push_back(w);
      const auto row = metric.row(w);
      for (Vertex v = 0; v < n; ++v) {
        Distance& d = cs.dist_to_centers[v];
        if (!IsReachable(d) || row[v] < d) d = row[v];
      }
    }
    ++cs.rounds;
  }
  std::sort(cs.centers.begin(), cs.centers.end());
  return cs;
}

VertexSet ExtendedCell(const DistanceMatrix& metric, const CenterSet& centers,
                       Vertex a, std::span<const Vertex> subset) {
  const int n = metric.size();
  if (!std::binary_search(centers.centers.begin(), centers.centers.end(), a)) {
    throw std::invalid_argument("extended cell of a non-center");
  }
  VertexSet ball;
  for (Vertex b = 0; b < n; ++b) {
    if (metric.at(a, b) <= 2) ball.push_back(b);
  }
  VertexSet out;
  for (Vertex v : subset) {
    bool in = metric.at(a, v) <= 2;
    for (std::size_t i = 0; !in && i < ball.size(); ++i) {
      in = CloserThanCenters(metric.at(ball[i], v), centers.dist_to_centers[v]);
    }
    if (in) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

class SubgraphVerifier {
 public:
  SubgraphVerifier(OracleSession& session, const Graph& candidate,
                   const RecursionParams& params, std::mt19937_64& rng,
                   const VerifyObserver* observer, VerifyResult& result)
      : session_(session),
        metric_(AllPairsDistances(candidate)),
        params_(params),
        rng_(rng),
        observer_(observer),
        result_(result) {}

  auto Expected() const {
    return [this](Vertex a, Vertex b) { return metric_.at(a, b); };
  }

  bool Run(const VertexSet& u, int depth) {
    Track(result_.stats, depth);
    session_.CheckDeadline();
    if (static_cast<std::int64_t>(u.size()) <= params_.n0) return Exhaustive(u);
    const CenterSet cs = SubsetCenters(metric_, u, params_.s, rng_);
    std::vector<VertexSet> cells;
    cells.reserve(cs.centers.size());
    for (Vertex a : cs.centers) {
      cells.push_back(ExtendedCell(metric_, cs, a, u));
      // A cell as large as U would recurse forever; settle this node
      // exhaustively instead.
      if (cells.back().size() >= u.size()) return Exhaustive(u);
    }
    if (observer_ != nullptr && observer_->on_cells) {
      observer_->on_cells(u, cs.centers, cells);
    }
    for (std::size_t i = 0; i < cs.centers.size(); ++i) {
      const Vertex a = cs.centers[i];
      VertexSet ball;
      for (Vertex b = 0; b < metric_.size(); ++b) {
        if (metric_.at(a, b) <= 2) ball.push_back(b);
      }
      if (!CheckBatch(session_, ball, u, Expected(), result_)) return false;
      if (!cells[i].empty() && !Run(cells[i], depth + 1)) return false;
    }
    return true;
  }

 private:
  bool Exhaustive(const VertexSet& u) {
    return CheckBatch(session_, u, u, Expected(), result_);
  }

  OracleSession& session_;
  DistanceMatrix metric_;
  const RecursionParams& params_;
  std::mt19937_64& rng_;
  const VerifyObserver* observer_;
  VerifyResult& result_;
};

}  // namespace

VerifyResult VerifySubgraph(OracleSession& session, const Graph& candidate,
                            std::span<const Vertex> subset,
                            const RecursionParams& params, std::mt19937_64& rng,
                            const VerifyObserver* observer) {
  if (params.n0 < static_cast<std::int64_t>(subset.size()) && params.s <= 4) {
    throw std::invalid_argument(
        "recursion needs s > 4, otherwise no centers are ever chosen");
  }
  VerifyResult r;
  r.yes = true;
  const std::int64_t start = session.counts().cached();
  SubgraphVerifier verifier(session, candidate, params, rng, observer, r);
  verifier.Run(Sorted(subset), 0);
  r.stats.nonedge_queries = session.counts().cached() - start;
  return r;
}

VerifyResult VerifyChordal(OracleSession& session, const Graph& candidate,
                           std::span<const Vertex> subset,
                           const VerifyObserver* observer) {
  VerifyResult r;
  r.yes = true;
  const std::int64_t start = session.counts().cached();
  const DistanceMatrix metric = AllPairsDistances(candidate);
  const std::size_t base = 4 * (std::size_t(candidate.MaxDegree()) + 1);
  const auto expected = [&](Vertex a, Vertex b) { return metric.at(a, b); };

  std::function<bool(const VertexSet&, int)> run = [&](const VertexSet& u,
                                                       int depth) -> bool {
    Track(r.stats, depth);
    session.CheckDeadline();
    if (u.size() <= base) return CheckBatch(session, u, u, expected, r);
    const Subgraph sub = InducedSubgraph(candidate, u);
    const CliqueTree ct = BuildCliqueTree(sub.graph);
    VertexSet sep;
    for (Vertex local : ct.bags[BalancedBagSeparator(ct, sub.graph)]) {
      sep.push_back(sub.to_parent[local]);
    }
    if (!CheckBatch(session, sep, u, expected, r)) return false;
    // The S x U answers matched, so N(S) ∩ U can be read off the
    // candidate metric.
    VertexSet near;
    for (Vertex x : u) {
      const bool close = std::any_of(sep.begin(), sep.end(), [&](Vertex s) {
        return metric.at(s, x) <= 1;
      });
      if (close) near.push_back(x);
    }
    if (!CheckBatch(session, near, u, expected, r)) return false;
    const std::vector<VertexSet> comps = ComponentsWithin(candidate, u, sep);
    if (observer != nullptr && observer->on_separator) {
      observer->on_separator(u, sep, comps);
    }
    for (const VertexSet& c : comps) {
      if (!run(SortedUnion(c, sep), depth + 1)) return false;
    }
    return true;
  };
  run(Sorted(subset), 0);
  r.stats.nonedge_queries = session.counts().cached() - start;
  return r;
}

VerifyResult VerifyTreewidth(OracleSession& session, const Graph& candidate,
                             const TreeDecomposition* td,
                             std::span<const Vertex> subset,
                             const VerifyObserver* observer) {
  const int n = candidate.num_vertices();
  TreeDecomposition fallback;
  if (td == nullptr) {
    fallback = MinFillDecomposition(candidate);
    td = &fallback;
  } else {
    std::string why;
    if (!IsValidDecomposition(*td, candidate, &why)) {
      throw std::invalid_argument("not a decomposition of the candidate: " +
                                  why);
    }
  }
  VerifyResult r;
  r.yes = true;
  r.stats.width = td->width();
  const std::int64_t start = session.counts().cached();
  const std::size_t base = 4 * (std::size_t(std::max(td->width(), 0)) + 1);
  WeightedOverlay overlay(n);

  std::function<bool(const VertexSet&, int)> run = [&](const VertexSet& u,
                                                       int depth) -> bool {
    Track(r.stats, depth);
    session.CheckDeadline();
    if (observer != nullptr && observer->on_overlay) {
      observer->on_overlay(u, overlay);
    }
    // Local graph H on U: candidate edges plus virtual edges inside U.
    const Subgraph sub = InducedSubgraph(candidate, u);
    std::vector<Vertex> to_local(n, -1);
    for (std::size_t i = 0; i < u.size(); ++i) to_local[u[i]] = i;
    WeightedOverlay local(static_cast<int>(u.size()));
    Graph shape = sub.graph;
    for (Vertex x : u) {
      for (const auto& [y, w] : overlay.incident(x)) {
        if (x < y && to_local[y] != -1) {
          local.Add(to_local[x], to_local[y], w);
          shape.AddEdge(to_local[x], to_local[y]);
        }
      }
    }
    r.stats.max_local_degree =
        std::max(r.stats.max_local_degree, shape.MaxDegree());
    const DistanceMatrix h = Metric(sub.graph, &local);
    const auto expected = [&](Vertex a, Vertex b) {
      return h.at(to_local[a], to_local[b]);
    };
    if (u.size() <= base) return CheckBatch(session, u, u, expected, r);

    const TreeDecomposition restricted = RestrictDecomposition(*td, u, n);
    VertexSet sep_local =
        restricted.bags[BalancedBagSeparator(restricted, shape)];
    VertexSet sep;
    for (Vertex l : sep_local) sep.push_back(u[l]);
    if (!CheckBatch(session, sep, u, expected, r)) return false;
    // Neighbors of S in H, virtual edges included.
    std::vector<char> near_mark(u.size(), 0);
    for (Vertex l : sep_local) {
      near_mark[l] = 1;
      for (Vertex y : shape.neighbors(l)) near_mark[y] = 1;
    }
    VertexSet near;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (near_mark[i]) near.push_back(u[i]);
    }
    if (!CheckBatch(session, near, u, expected, r)) return false;

    std::vector<VertexSet> comps = ConnectedComponents(shape, sep_local);
    for (VertexSet& c : comps) {
      for (Vertex& x : c) x = u[x];
    }
    if (observer != nullptr && observer->on_separator) {
      observer->on_separator(u, sep, comps);
    }
    for (std::size_t i = 0; i < sep.size(); ++i) {
      for (std::size_t j = i + 1; j < sep.size(); ++j) {
        overlay.Add(sep[i], sep[j], *session.Cached(sep[i], sep[j]));
      }
    }
    for (const VertexSet& c : comps) {
      if (!run(SortedUnion(c, sep), depth + 1)) return false;
    }
    return true;
  };
  run(Sorted(subset), 0);
  r.stats.nonedge_queries = session.counts().cached() - start;
  return r;
}

}  // namespace graphprobe
