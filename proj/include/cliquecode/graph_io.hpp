// Copyright 2026 The cliquecode Authors
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

// Graph text formats:
//
//   edge list  `n m` header, then m lines `u v` (0-based); `#` comment lines
//   DIMACS     `p edge n m` header, `e u v` lines (1-based); `c` comments
//   graph6     standard 6-bit encoding, up to 62 vertices

#ifndef CLIQUECODE_GRAPH_IO_HPP_
#define CLIQUECODE_GRAPH_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "cliquecode/graph.hpp"

namespace cliquecode {

enum class GraphFormat { kAuto, kEdgeList, kDimacs, kGraph6 };

GraphFormat parse_graph_format(std::string_view name);

Graph read_edge_list(std::istream& in);
Graph read_dimacs(std::istream& in);
Graph read_graph6(std::string_view line);

/// Parses `text` in the given format. kAuto sniffs the first
/// non-comment line.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::kAuto);

/// kAuto picks by extension (.g6/.graph6, .dimacs/.col) and falls back to
/// sniffing the content.
Graph read_graph_file(const std::filesystem::path& path,
                      GraphFormat format = GraphFormat::kAuto);

std::string write_edge_list(const Graph& g);
std::string write_graph6(const Graph& g);

}  // namespace cliquecode

#endif  // CLIQUECODE_GRAPH_IO_HPP_
