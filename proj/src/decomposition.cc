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

#include "graphprobe/decomposition.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace graphprobe {
namespace {

bool Fail(std::string* why, std::string msg) {
  if (why != nullptr) *why = std::move(msg);
  return false;
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

void TreeDecomposition::AddTreeEdge(int a, int b) {
  if (tree.size() < bags.size()) tree.resize(bags.size());
  tree[a].push_back(b);
  tree[b].push_back(a);
}

bool IsValidDecomposition(const TreeDecomposition& td, const Graph& g,
                          std::string* why) {
  const int n = g.num_vertices();
  const int k = td.num_bags();
  if (static_cast<int>(td.tree.size()) != k) {
    return Fail(why, "tree adjacency size differs from bag count");
  }
  std::vector<std::vector<int>> bags_of(n);
  for (int i = 0; i < k; ++i) {
    for (Vertex v : td.bags[i]) {
      if (!g.IsValidVertex(v)) return Fail(why, "bag holds invalid vertex");
      bags_of[v].push_back(i);
    }
  }
  // The bag graph must be a forest.
  std::int64_t tree_edges = 0;
  DisjointSets forest(k);
  for (int i = 0; i < k; ++i) {
    for (int j : td.tree[i]) {
      if (j < 0 || j >= k || j == i) return Fail(why, "bad tree edge");
      if (std::count(td.tree[j].begin(), td.tree[j].end(), i) != 1) {
        return Fail(why, "tree adjacency not symmetric");
      }
      if (i < j) {
        ++tree_edges;
        if (!forest.Union(i, j)) return Fail(why, "tree has a cycle");
      }
    }
  }
  if (g.IsConnected() && k > 0 && tree_edges != k - 1) {
    return Fail(why, "tree is not connected");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (bags_of[v].empty()) {
      return Fail(why, "vertex " + std::to_string(v) + " in no bag");
    }
  }
  for (const Edge& e : g.Edges()) {
    const auto& a = bags_of[e.u];
    const auto& b = bags_of[e.v];
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(common));
    if (common.empty()) {
      return Fail(why, "edge " + std::to_string(e.u) + "-" +
                           std::to_string(e.v) + " in no bag");
    }
  }
  // Bags holding v must induce a connected subtree.
  std::vector<int> mark(k, -1);
  std::vector<int> stack;
  for (Vertex v = 0; v < n; ++v) {
    for (int b : bags_of[v]) mark[b] = v;
    int reached = 0;
    stack.assign(1, bags_of[v][0]);
    mark[bags_of[v][0]] = -2 - v;
    while (!stack.empty()) {
      const int b = stack.back();
      stack.pop_back();
      ++reached;
      for (int c : td.tree[b]) {
        if (mark[c] == v) {
          mark[c] = -2 - v;
          stack.push_back(c);
        }
      }
    }
    if (reached != static_cast<int>(bags_of[v].size())) {
      return Fail(why, "bags of vertex " + std::to_string(v) +
                           " are not connected in the tree");
    }
  }
  return true;
}

bool IsValidCliqueTree(const TreeDecomposition& td, const Graph& g,
                       std::string* why) {
  if (!IsValidDecomposition(td, g, why)) return false;
  std::set<VertexSet> seen;
  for (const VertexSet& bag : td.bags) {
    for (std::size_t i = 0; i < bag.size(); ++i) {
      for (std::size_t j = i + 1; j < bag.size(); ++j) {
        if (!g.HasEdge(bag[i], bag[j])) return Fail(why, "bag is not a clique");
      }
    }
    // Maximal iff no outside vertex is adjacent to the whole bag.
    if (!bag.empty()) {
      for (Vertex x : g.neighbors(bag[0])) {
        if (std::binary_search(bag.begin(), bag.end(), x)) continue;
        const bool all = std::all_of(bag.begin(), bag.end(),
                                     [&](Vertex y) { return g.HasEdge(x, y); });
        if (all) return Fail(why, "bag is not a maximal clique");
      }
    }
    if (!seen.insert(bag).second) return Fail(why, "clique repeated");
  }
  return true;
}

std::optional<std::vector<Vertex>> PerfectEliminationOrder(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> weight(n, 0);
  std::vector<char> numbered(n, 0);
  // buckets[w] holds unnumbered vertices of weight w; lowest id first.
  std::vector<std::set<Vertex>> buckets(n + 1);
  for (Vertex v = 0; v < n; ++v) buckets[0].insert(v);
  std::vector<Vertex> visit;
  visit.reserve(n);
  int top = 0;
  for (int step = 0; step < n; ++step) {
    while (top > 0 && buckets[top].empty()) --top;
    const Vertex v = *buckets[top].begin();
    buckets[top].erase(buckets[top].begin());
    numbered[v] = 1;
    visit.push_back(v);
    for (Vertex y : g.neighbors(v)) {
      if (numbered[y]) continue;
      buckets[weight[y]].erase(y);
      ++weight[y];
      buckets[weight[y]].insert(y);
      top = std::max(top, weight[y]);
    }
  }
  std::vector<Vertex> order(visit.rbegin(), visit.rend());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (Vertex v : order) {
    Vertex first = -1;
    for (Vertex y : g.neighbors(v)) {
      if (pos[y] > pos[v] && (first == -1 || pos[y] < pos[first])) first = y;
    }
    if (first == -1) continue;
    for (Vertex y : g.neighbors(v)) {
      if (pos[y] > pos[v] && y != first && !g.HasEdge(first, y)) {
        return std::nullopt;
      }
    }
  }
  return order;
}

CliqueTree BuildCliqueTree(const Graph& g) {
  const auto order = PerfectEliminationOrder(g);
  if (!order) throw std::invalid_argument("graph is not chordal");
  const int n = g.num_vertices();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[(*order)[i]] = i;
  std::vector<int> later_count(n, 0);
  std::vector<Vertex> first_later(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex y : g.neighbors(v)) {
      if (pos[y] > pos[v]) {
        ++later_count[v];
        if (first_later[v] == -1 || pos[y] < pos[first_later[v]]) {
          first_later[v] = y;
        }
      }
    }
  }
  // {v} + later(v) fails to be maximal exactly when some u with
  // first_later(u) == v has one more later neighbor than v.
  std::vector<char> maximal(n, 1);
  for (Vertex u = 0; u < n; ++u) {
    const Vertex p = first_later[u];
    if (p != -1 && later_count[u] == later_count[p] + 1) maximal[p] = 0;
  }
  CliqueTree ct;
  for (Vertex v = 0; v < n; ++v) {
    if (!maximal[v]) continue;
    VertexSet clique = {v};
    for (Vertex y : g.neighbors(v)) {
      if (pos[y] > pos[v]) clique.push_back(y);
    }
    std::sort(clique.begin(), clique.end());
    ct.bags.push_back(std::move(clique));
  }
  std::sort(ct.bags.begin(), ct.bags.end());
  const int k = ct.num_bags();
  ct.tree.assign(k, {});

  std::vector<std::vector<int>> cliques_of(n);
  for (int i = 0; i < k; ++i) {
    for (Vertex v : ct.bags[i]) cliques_of[v].push_back(i);
  }
  std::set<std::pair<int, int>> pairs;
  for (Vertex v = 0; v < n; ++v) {
    const auto& list = cliques_of[v];
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) {
        pairs.insert({list[a], list[b]});
      }
    }
  }
  std::vector<std::tuple<int, int, int>> candidates;  // (-weight, i, j)
  for (const auto& [i, j] : pairs) {
    VertexSet common;
    std::set_intersection(ct.bags[i].begin(), ct.bags[i].end(),
                          ct.bags[j].begin(), ct.bags[j].end(),
                          std::back_inserter(common));
    candidates.emplace_back(-static_cast<int>(common.size()), i, j);
  }
  std::sort(candidates.begin(), candidates.end());
  DisjointSets forest(k);
  for (const auto& [w, i, j] : candidates) {
    if (forest.Union(i, j)) ct.AddTreeEdge(i, j);
  }
  // Disconnected input: chain the component roots.
  int prev_root = -1;
  for (int i = 0; i < k; ++i) {
    if (forest.Find(i) != i) continue;
    if (prev_root != -1) ct.AddTreeEdge(prev_root, i);
    prev_root = i;
  }
  return ct;
}

int BalancedBagSeparator(const TreeDecomposition& td, const Graph& g) {
  const int n = g.num_vertices();
  int best = -1;
  std::size_t best_size = 0;
  for (int i = 0; i < td.num_bags(); ++i) {
    std::size_t largest = 0;
    for (const auto& comp : ConnectedComponents(g, td.bags[i])) {
      largest = std::max(largest, comp.size());
    }
    if (2 * largest > static_cast<std::size_t>(n)) continue;
    if (best == -1 || largest < best_size) {
      best = i;
      best_size = largest;
    }
  }
  if (best == -1) {
    throw std::invalid_argument("no bag is a balanced separator");
  }
  return best;
}

TreeDecomposition MinFillDecomposition(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::set<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) {
    adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  }
  auto fill_of = [&](Vertex v) {
    std::int64_t missing = 0;
    for (auto a = adj[v].begin(); a != adj[v].end(); ++a) {
      for (auto b = std::next(a); b != adj[v].end(); ++b) {
        if (!adj[*a].contains(*b)) ++missing;
      }
    }
    return missing;
  };
  std::vector<char> eliminated(n, 0);
  std::vector<int> elim_pos(n, -1);
  std::vector<VertexSet> bag_of(n);
  std::vector<Vertex> order;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    std::int64_t pick_fill = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (eliminated[v]) continue;
      const std::int64_t f = fill_of(v);
      if (pick == -1 || f < pick_fill) {
        pick = v;
        pick_fill = f;
        if (f == 0) break;
      }
    }
    VertexSet bag(adj[pick].begin(), adj[pick].end());
    for (auto a = adj[pick].begin(); a != adj[pick].end(); ++a) {
      for (auto b = std::next(a); b != adj[pick].end(); ++b) {
        adj[*a].insert(*b);
        adj[*b].insert(*a);
      }
    }
    for (Vertex y : adj[pick]) adj[y].erase(pick);
    adj[pick].clear();
    bag.push_back(pick);
    std::sort(bag.begin(), bag.end());
    bag_of[pick] = std::move(bag);
    eliminated[pick] = 1;
    elim_pos[pick] = step;
    order.push_back(pick);
  }
  TreeDecomposition td;
  td.bags.resize(n);
  td.tree.assign(n, {});
  // Bag i belongs to the i-th eliminated vertex.
  for (int i = 0; i < n; ++i) td.bags[i] = bag_of[order[i]];
  int prev_root = -1;
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[i];
    int parent = -1;
    for (Vertex y : bag_of[v]) {
      if (y != v && (parent == -1 || elim_pos[y] < parent))
        parent = elim_pos[y];
    }
    if (parent == -1) {
      if (prev_root != -1) td.AddTreeEdge(prev_root, i);
      prev_root = i;
    } else {
      td.AddTreeEdge(i, parent);
    }
  }
  return td;
}

TreeDecomposition RestrictDecomposition(const TreeDecomposition& td,
                                        std::span<const Vertex> vertices,
                                        int parent_num_vertices) {
  std::vector<Vertex> to_local(parent_num_vertices, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    to_local[vertices[i]] = static_cast<Vertex>(i);
  }
  TreeDecomposition out;
  out.tree = td.tree;
  out.bags.reserve(td.bags.size());
  for (const VertexSet& bag : td.bags) {
    VertexSet local;
    for (Vertex v : bag) {
      if (to_local[v] != -1) local.push_back(to_local[v]);
    }
    std::sort(local.begin(), local.end());
    out.bags.push_back(std::move(local));
  }
  return out;
}

}  // namespace graphprobe
