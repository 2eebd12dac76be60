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

#include "graphprobe/gen.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "graphprobe/metric.h"
#include "json.hpp"

namespace graphprobe {
namespace {

using Rng = std::mt19937_64;

constexpr std::array<std::pair<Family, std::string_view>, 8> kNames = {{
    {Family::kTree, "tree"},
    {Family::kCycle, "cycle"},
    {Family::kGrid, "grid"},
    {Family::kRandomBoundedDegree, "random-bounded-degree"},
    {Family::kRandomChordal, "random-chordal"},
    {Family::kPartialKTree, "partial-k-tree"},
    {Family::kStarAdversary, "star-adversary"},
    {Family::kBinaryTreeLb, "binary-tree-lb"},
}};

std::size_t Uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Vertices whose degree is below the budget, with O(1) removal.
class SparePool {
 public:
  SparePool(int n, int budget) : budget_(budget), pos_(n, -1) {}
  void Refresh(const Graph& g, Vertex v) {
    const bool spare = g.degree(v) < budget_;
    if (spare && pos_[v] == -1) {
      pos_[v] = static_cast<int>(items_.size());
      items_.push_back(v);
    } else if (!spare && pos_[v] != -1) {
      const Vertex last = items_.back();
      items_[pos_[v]] = last;
      pos_[last] = pos_[v];
      items_.pop_back();
      pos_[v] = -1;
    }
  }
  bool Has(Vertex v) const { return pos_[v] != -1; }
  std::size_t size() const { return items_.size(); }
  Vertex at(std::size_t i) const { return items_[i]; }
  Vertex Pick(Rng& rng) const { return items_[Uniform(rng, 0, size() - 1)]; }

 private:
  int budget_;
  std::vector<int> pos_;
  std::vector<Vertex> items_;
};

void CheckDegreeBudget(int n, int max_degree) {
  if (n > 2 && max_degree < 2) {
    throw std::invalid_argument("max degree must be at least 2 for n > 2");
  }
  if (n == 2 && max_degree < 1) {
    throw std::invalid_argument("max degree must be at least 1 for n = 2");
  }
}

Graph TreeInto(int n, int max_degree, Rng& rng, SparePool* pool_out) {
  if (n < 1) throw std::invalid_argument("need at least one vertex");
  CheckDegreeBudget(n, max_degree);
  Graph g(n);
  SparePool pool(n, max_degree);
  pool.Refresh(g, 0);
  for (Vertex v = 1; v < n; ++v) {
    const Vertex p = pool.Pick(rng);
    g.AddEdge(p, v);
    pool.Refresh(g, p);
    pool.Refresh(g, v);
  }
  if (pool_out != nullptr) *pool_out = std::move(pool);
  return g;
}

// Index of a random bag holding a vertex with spare degree.
int PickBagWithSpare(const std::vector<VertexSet>& bags, const SparePool& pool,
                     Rng& rng) {
  auto has_spare = [&](int b) {
    return std::any_of(bags[b].begin(), bags[b].end(),
                       [&](Vertex x) { return pool.Has(x); });
  };
  for (int attempt = 0; attempt < 32; ++attempt) {
    const int b = static_cast<int>(Uniform(rng, 0, bags.size() - 1));
    if (has_spare(b)) return b;
  }
  for (int b = static_cast<int>(bags.size()) - 1; b >= 0; --b) {
    if (has_spare(b)) return b;
  }
  throw std::invalid_argument("degree budget exhausted; parameters infeasible");
}

VertexSet RandomSubset(VertexSet from, std::size_t size, Rng& rng) {
  std::shuffle(from.begin(), from.end(), rng);
  from.resize(size);
  std::sort(from.begin(), from.end());
  return from;
}

TreeDecomposition CycleDecomposition(int n) {
  TreeDecomposition td;
  if (n <= 3) {
    VertexSet all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    td.bags = {all};
    td.tree = {{}};
    return td;
  }
  for (Vertex i = 1; i + 1 < n; ++i) td.bags.push_back({0, i, i + 1});
  td.tree.resize(td.bags.size());
  for (int b = 1; b < td.num_bags(); ++b) td.AddTreeEdge(b - 1, b);
  return td;
}

TreeDecomposition GridDecomposition(int n) {
  const int rows = std::max(1, static_cast<int>(std::sqrt(double(n))));
  const int cols = (n + rows - 1) / rows;
  TreeDecomposition td;
  if (n <= cols + 1) {
    VertexSet all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    td.bags = {all};
    td.tree = {{}};
    return td;
  }
  // Sliding windows of cols + 1 consecutive ids cover every right and down
  // edge.
  for (Vertex start = 0; start + cols < n; ++start) {
    VertexSet bag(cols + 1);
    for (int i = 0; i <= cols; ++i) bag[i] = start + i;
    td.bags.push_back(std::move(bag));
  }
  td.tree.resize(td.bags.size());
  for (int b = 1; b < td.num_bags(); ++b) td.AddTreeEdge(b - 1, b);
  return td;
}

}  // namespace

std::string_view FamilyName(Family family) {
  for (const auto& [f, name] : kNames) {
    if (f == family) return name;
  }
  return "unknown";
}

std::optional<Family> ParseFamily(std::string_view name) {
  for (const auto& [f, n] : kNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

std::vector<Family> AllFamilies() {
  std::vector<Family> out;
  for (const auto& [f, name] : kNames) out.push_back(f);
  return out;
}

Graph GenTree(int n, int max_degree, std::uint64_t seed) {
  Rng rng(seed);
  return TreeInto(n, max_degree, rng, nullptr);
}

Graph GenCycle(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.AddEdge(v, (v + 1) % n);
  return g;
}

Graph GenGrid(int n) {
  if (n < 1) throw std::invalid_argument("need at least one vertex");
  const int rows = std::max(1, static_cast<int>(std::sqrt(double(n))));
  const int cols = (n + rows - 1) / rows;
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) {
    if (v % cols + 1 < cols && v + 1 < n) g.AddEdge(v, v + 1);
    if (v + cols < n) g.AddEdge(v, v + cols);
  }
  return g;
}

std::int64_t RandomBoundedDegreeTarget(int n, int max_degree) {
  const std::int64_t full = std::int64_t{max_degree} * n / 2;
  return std::max<std::int64_t>(n - 1, static_cast<std::int64_t>(0.7 * full));
}

Graph GenRandomBoundedDegree(int n, int max_degree, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  if (max_degree < 2) throw std::invalid_argument("max degree must be >= 2");
  Rng rng(seed);
  SparePool pool(n, max_degree);
  Graph g = TreeInto(n, max_degree, rng, &pool);
  const std::int64_t target = RandomBoundedDegreeTarget(n, max_degree);
  int failures = 0;
  while (g.num_edges() < target && pool.size() >= 2 && failures < 32 * n) {
    const Vertex a = pool.Pick(rng);
    const Vertex b = pool.Pick(rng);
    if (a == b || g.HasEdge(a, b)) {
      ++failures;
      continue;
    }
    g.AddEdge(a, b);
    pool.Refresh(g, a);
    pool.Refresh(g, b);
  }
  if (g.num_edges() < target) {
    // Near saturation random probing stalls; finish from the explicit list.
    std::vector<Edge> feasible;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        const Edge e = Edge::Canonical(pool.at(i), pool.at(j));
        if (!g.HasEdge(e.u, e.v)) feasible.push_back(e);
      }
    }
    std::sort(feasible.begin(), feasible.end());
    std::shuffle(feasible.begin(), feasible.end(), rng);
    for (const Edge& e : feasible) {
      if (g.num_edges() >= target) break;
      if (g.degree(e.u) < max_degree && g.degree(e.v) < max_degree) {
        g.AddEdge(e.u, e.v);
      }
    }
  }
  return g;
}

ChordalInstance GenRandomChordal(int n, int max_degree, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("need at least one vertex");
  CheckDegreeBudget(n, max_degree);
  Rng rng(seed);
  Graph g(n);
  SparePool pool(n, max_degree);
  pool.Refresh(g, 0);
  TreeDecomposition td;
  td.bags = {{0}};
  td.tree = {{}};
  const std::size_t max_join = std::max(1, max_degree - 1);
  for (Vertex v = 1; v < n; ++v) {
    const int b = PickBagWithSpare(td.bags, pool, rng);
    VertexSet spare;
    for (Vertex x : td.bags[b]) {
      if (pool.Has(x)) spare.push_back(x);
    }
    const std::size_t size = Uniform(rng, 1, std::min(spare.size(), max_join));
    const VertexSet k = RandomSubset(spare, size, rng);
    for (Vertex x : k) {
      g.AddEdge(x, v);
      pool.Refresh(g, x);
    }
    pool.Refresh(g, v);
    if (k.size() == td.bags[b].size()) {
      td.bags[b].push_back(v);
    } else {
      VertexSet bag = k;
      bag.push_back(v);
      td.bags.push_back(std::move(bag));
      td.tree.emplace_back();
      td.AddTreeEdge(b, td.num_bags() - 1);
    }
  }
  ChordalInstance out{std::move(g), {}};
  static_cast<TreeDecomposition&>(out.clique_tree) = std::move(td);
  return out;
}

DecomposedInstance GenPartialKTree(int n, int k, int max_degree,
                                   std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("need at least one vertex");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  CheckDegreeBudget(n, max_degree);
  Rng rng(seed);
  Graph g(n);
  SparePool pool(n, max_degree);
  pool.Refresh(g, 0);
  TreeDecomposition td;
  td.bags = {{0}};
  td.tree = {{}};
  const std::size_t max_join = std::max(1, max_degree - 1);
  for (Vertex v = 1; v < n; ++v) {
    const int b = PickBagWithSpare(td.bags, pool, rng);
    const VertexSet& bag = td.bags[b];
    VertexSet spare, rest;
    for (Vertex x : bag) (pool.Has(x) ? spare : rest).push_back(x);
    // K' holds one spare vertex for sure, the rest drawn from the bag.
    std::shuffle(spare.begin(), spare.end(), rng);
    VertexSet others(spare.begin() + 1, spare.end());
    others.insert(others.end(), rest.begin(), rest.end());
    const std::size_t width = std::min<std::size_t>(k, bag.size());
    VertexSet kprime = RandomSubset(others, width - 1, rng);
    kprime.push_back(spare[0]);
    std::sort(kprime.begin(), kprime.end());
    VertexSet joinable;
    for (Vertex x : kprime) {
      if (pool.Has(x)) joinable.push_back(x);
    }
    const std::size_t size =
        Uniform(rng, 1, std::min(joinable.size(), max_join));
    for (Vertex x : RandomSubset(joinable, size, rng)) {
      g.AddEdge(x, v);
      pool.Refresh(g, x);
    }
    pool.Refresh(g, v);
    kprime.push_back(v);
    td.bags.push_back(std::move(kprime));
    td.tree.emplace_back();
    td.AddTreeEdge(b, td.num_bags() - 1);
  }
  return {std::move(g), std::move(td)};
}

Graph GenStarAdversary(int n, std::optional<Edge> chord) {
  if (n < 3) throw std::invalid_argument("a star needs at least 3 vertices");
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.AddEdge(0, v);
  if (chord) {
    const Edge c = Edge::Canonical(chord->u, chord->v);
    if (c.u < 1 || c.v >= n || c.u == c.v) {
      throw std::invalid_argument("chord must join two distinct leaves");
    }
    g.AddEdge(c.u, c.v);
  }
  return g;
}

Graph GenBinaryTreeLb(int t, int max_degree, std::uint64_t seed) {
  if (t < 1 || !std::has_single_bit(static_cast<unsigned>(t))) {
    throw std::invalid_argument("t must be a power of two");
  }
  if (max_degree < 3) throw std::invalid_argument("max degree must be >= 3");
  Rng rng(seed);
  const int n = 3 * t - 1;
  Graph g(n);
  for (int i = 2; i <= 2 * t - 1; ++i) g.AddEdge(i - 1, i / 2 - 1);
  for (int i = t; i <= 2 * t - 1; ++i) g.AddEdge(i - 1, i + t - 1);
  // Random near-maximal subgraph of degree <= max_degree - 1 on the extra
  // vertices: scan all pairs in random order, keep what fits.
  const Vertex first = 2 * t - 1;
  std::vector<Edge> pairs;
  for (Vertex a = first; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) pairs.push_back({a, b});
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::vector<int> inner(n, 0);
  for (const Edge& e : pairs) {
    if (inner[e.u] < max_degree - 1 && inner[e.v] < max_degree - 1) {
      g.AddEdge(e.u, e.v);
      ++inner[e.u];
      ++inner[e.v];
    }
  }
  return g;
}

Generated Generate(const GenSpec& spec) {
  Generated out;
  out.spec = spec;
  out.declared_max_degree = spec.max_degree;
  switch (spec.family) {
    case Family::kTree:
      out.graph = GenTree(spec.n, spec.max_degree, spec.seed);
      out.decomposition = BuildCliqueTree(out.graph);
      out.declared_width = 1;
      out.chordal = true;
      break;
    case Family::kCycle:
      out.graph = GenCycle(spec.n);
      out.declared_max_degree = 2;
      out.decomposition = CycleDecomposition(spec.n);
      out.declared_width = 2;
      break;
    case Family::kGrid:
      out.graph = GenGrid(spec.n);
      out.declared_max_degree = 4;
      out.decomposition = GridDecomposition(spec.n);
      break;
    case Family::kRandomBoundedDegree:
      out.graph = GenRandomBoundedDegree(spec.n, spec.max_degree, spec.seed);
      break;
    case Family::kRandomChordal: {
      ChordalInstance c = GenRandomChordal(spec.n, spec.max_degree, spec.seed);
      out.graph = std::move(c.graph);
      out.decomposition = std::move(c.clique_tree);
      out.chordal = true;
      break;
    }
    case Family::kPartialKTree: {
      DecomposedInstance d =
          GenPartialKTree(spec.n, spec.k, spec.max_degree, spec.seed);
      out.graph = std::move(d.graph);
      out.decomposition = std::move(d.decomposition);
      out.declared_width = spec.k;
      break;
    }
    case Family::kStarAdversary:
      out.graph = GenStarAdversary(spec.n, spec.chord);
      out.declared_max_degree = spec.n - 1;
      out.decomposition = BuildCliqueTree(out.graph);
      out.chordal = true;
      break;
    case Family::kBinaryTreeLb: {
      if ((spec.n + 1) % 3 != 0) {
        throw std::invalid_argument("binary-tree-lb needs n = 3t - 1");
      }
      const int t = (spec.n + 1) / 3;
      out.graph = GenBinaryTreeLb(t, spec.max_degree, spec.seed);
      out.diameter_bound = 2 * std::countr_zero(static_cast<unsigned>(t)) + 2;
      break;
    }
  }
  if (out.decomposition && !out.declared_width) {
    out.declared_width = out.decomposition->width();
  }
  const std::string problem = ValidateGenerated(out);
  if (!problem.empty()) {
    throw std::logic_error(std::string(FamilyName(spec.family)) +
                           " generator broke its contract: " + problem);
  }
  return out;
}

std::string ValidateGenerated(const Generated& gen) {
  const Graph& g = gen.graph;
  if (!g.IsConnected()) return "graph is disconnected";
  if (g.MaxDegree() > gen.declared_max_degree) return "degree bound exceeded";
  std::string why;
  if (gen.decomposition) {
    const bool ok = gen.chordal
                        ? IsValidCliqueTree(*gen.decomposition, g, &why)
                        : IsValidDecomposition(*gen.decomposition, g, &why);
    if (!ok) return "witness decomposition invalid: " + why;
    if (gen.declared_width &&
        gen.decomposition->width() > *gen.declared_width) {
      return "width bound exceeded";
    }
  }
  if (gen.chordal && !IsChordal(g)) return "graph is not chordal";
  switch (gen.spec.family) {
    case Family::kTree:
      if (g.num_edges() != g.num_vertices() - 1) return "tree has a cycle";
      break;
    case Family::kCycle:
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) != 2) return "cycle vertex of degree != 2";
      }
      break;
    default:
      break;
  }
  if (gen.diameter_bound) {
    if (AllPairsDistances(g).Diameter() > *gen.diameter_bound) {
      return "diameter bound exceeded";
    }
  }
  return "";
}

std::string SidecarJson(const Generated& gen) {
  nlohmann::ordered_json j;
  j["family"] = FamilyName(gen.spec.family);
  j["n"] = gen.graph.num_vertices();
  j["m"] = gen.graph.num_edges();
  j["seed"] = gen.spec.seed;
  j["max_degree"] = gen.declared_max_degree;
  j["observed_max_degree"] = gen.graph.MaxDegree();
  if (gen.spec.family == Family::kPartialKTree) j["k"] = gen.spec.k;
  if (gen.declared_width) j["width"] = *gen.declared_width;
  if (gen.decomposition) j["num_bags"] = gen.decomposition->num_bags();
  if (gen.diameter_bound) j["diameter_bound"] = *gen.diameter_bound;
  if (gen.spec.chord) {
    j["chord"] = {gen.spec.chord->u, gen.spec.chord->v};
  }
  j["chordal"] = gen.chordal;
  return j.dump(2) + "\n";
}

}  // namespace graphprobe
