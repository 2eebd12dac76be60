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

#ifndef GRAPHPROBE_IO_H_
#define GRAPHPROBE_IO_H_

#include <iosfwd>
#include <string>

#include "graphprobe/decomposition.h"
#include "graphprobe/graph.h"

namespace graphprobe {

// Edge-list text format: a header line "n m" followed by m lines "u v".
// Edges are written in canonical sorted order so equal graphs serialize to
// identical bytes. Blank lines and lines starting with '#' are skipped on
// read. Parse errors throw std::runtime_error naming the line.
void WriteEdgeList(std::ostream& out, const Graph& g);
Graph ReadEdgeList(std::istream& in);

// Decomposition text format: "bag <id> v1 v2 ..." lines followed by
// "tree <id1> <id2>" lines, each tree edge written once.
void WriteDecomposition(std::ostream& out, const TreeDecomposition& td);
TreeDecomposition ReadDecomposition(std::istream& in);

Graph ReadEdgeListFile(const std::string& path);
void WriteEdgeListFile(const std::string& path, const Graph& g);
TreeDecomposition ReadDecompositionFile(const std::string& path);
void WriteDecompositionFile(const std::string& path,
                            const TreeDecomposition& td);

}  // namespace graphprobe

#endif  // GRAPHPROBE_IO_H_
