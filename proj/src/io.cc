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

#include "graphprobe/io.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace graphprobe {
namespace {

[[noreturn]] void ParseError(int line_no, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

bool NextContentLine(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

void WriteEdgeList(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.Edges()) out << e.u << ' ' << e.v << '\n';
}

Graph ReadEdgeList(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!NextContentLine(in, line, line_no))
    ParseError(line_no, "missing header");
  std::istringstream header(line);
  long long n = -1, m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0) {
    ParseError(line_no, "header must be \"n m\"");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  while (NextContentLine(in, line, line_no)) {
    std::istringstream row(line);
    long long u, v;
    if (!(row >> u >> v)) ParseError(line_no, "expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      ParseError(line_no, "endpoint out of range");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (static_cast<long long>(edges.size()) != m) {
    ParseError(line_no, "header promised " + std::to_string(m) +
                            " edges, got " + std::to_string(edges.size()));
  }
  return Graph::FromEdges(static_cast<int>(n), edges);
}

void WriteDecomposition(std::ostream& out, const TreeDecomposition& td) {
  for (int i = 0; i < td.num_bags(); ++i) {
    out << "bag " << i;
    for (Vertex v : td.bags[i]) out << ' ' << v;
    out << '\n';
  }
  for (int i = 0; i < td.num_bags(); ++i) {
    for (int j : td.tree[i]) {
      if (i < j) out << "tree " << i << ' ' << j << '\n';
    }
  }
}

TreeDecomposition ReadDecomposition(std::istream& in) {
  TreeDecomposition td;
  std::vector<std::pair<int, int>> links;
  std::string line;
  int line_no = 0;
  while (NextContentLine(in, line, line_no)) {
    std::istringstream row(line);
    std::string kind;
    row >> kind;
    if (kind == "bag") {
      int id;
      if (!(row >> id) || id < 0) ParseError(line_no, "bad bag id");
      if (id >= td.num_bags()) td.bags.resize(id + 1);
      VertexSet bag;
      long long v;
      while (row >> v) bag.push_back(static_cast<Vertex>(v));
      std::sort(bag.begin(), bag.end());
      td.bags[id] = std::move(bag);
    } else if (kind == "tree") {
      int a, b;
      if (!(row >> a >> b) || a < 0 || b < 0)
        ParseError(line_no, "bad tree edge");
      links.emplace_back(a, b);
    } else {
      ParseError(line_no, "unknown record \"" + kind + "\"");
    }
  }
  td.tree.assign(td.bags.size(), {});
  for (const auto& [a, b] : links) {
    if (a >= td.num_bags() || b >= td.num_bags()) {
      throw std::runtime_error("tree edge references a missing bag");
    }
    td.AddTreeEdge(a, b);
  }
  return td;
}

Graph ReadEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return ReadEdgeList(in);
}

void WriteEdgeListFile(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  WriteEdgeList(out, g);
}

TreeDecomposition ReadDecompositionFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return ReadDecomposition(in);
}

void WriteDecompositionFile(const std::string& path,
                            const TreeDecomposition& td) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  WriteDecomposition(out, td);
}

}  // namespace graphprobe
