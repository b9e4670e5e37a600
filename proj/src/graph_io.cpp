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

#include "cliquecode/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

namespace cliquecode {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_count(std::string_view token, int line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                     std::string(token) + "'");
  }
  return value;
}

Graph finish(std::size_t n, std::size_t m, std::vector<Edge>& edges, int line_no) {
  if (edges.size() != m) {
    throw ParseError("line " + std::to_string(line_no) + ": header promised " +
                     std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  try {
    return Graph::from_edges(n, edges);
  } catch (const InputError& e) {
    throw ParseError(e.what());
  }
}

bool is_graph6_char(char c) { return c >= 63 && c <= 126; }

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "auto") return GraphFormat::kAuto;
  if (name == "edges" || name == "edge-list" || name == "edgelist") return GraphFormat::kEdgeList;
  if (name == "dimacs") return GraphFormat::kDimacs;
  if (name == "graph6" || name == "g6") return GraphFormat::kGraph6;
  throw InputError("unknown graph format '" + std::string(name) + "'");
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto tokens = split_ws(body);
    if (tokens.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two integers");
    }
    const std::size_t a = parse_count(tokens[0], line_no);
    const std::size_t b = parse_count(tokens[1], line_no);
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
    } else {
      if (a >= n || b >= n) {
        throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range");
      }
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  if (!have_header) throw ParseError("edge list: missing 'n m' header");
  return finish(n, m, edges, line_no);
}

Graph read_dimacs(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    auto body = trim(line);
    if (body.empty() || body.front() == 'c' || body.front() == '#') continue;
    auto tokens = split_ws(body);
    if (tokens[0] == "p") {
      if (have_header || tokens.size() != 4) {
        throw ParseError("line " + std::to_string(line_no) + ": bad 'p edge n m' header");
      }
      n = parse_count(tokens[2], line_no);
      m = parse_count(tokens[3], line_no);
      have_header = true;
    } else if (tokens[0] == "e") {
      if (!have_header || tokens.size() != 3) {
        throw ParseError("line " + std::to_string(line_no) + ": bad edge line");
      }
      const std::size_t a = parse_count(tokens[1], line_no);
      const std::size_t b = parse_count(tokens[2], line_no);
      if (a < 1 || b < 1 || a > n || b > n) {
        throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range");
      }
      edges.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown DIMACS line");
    }
  }
  if (!have_header) throw ParseError("DIMACS: missing 'p edge n m' header");
  return finish(n, m, edges, line_no);
}

Graph read_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw ParseError("graph6: empty input");
  for (char c : line) {
    if (!is_graph6_char(c)) throw ParseError("graph6: invalid character");
  }
  if (line.front() == 126) throw ParseError("graph6: only graphs up to 62 vertices are supported");
  const std::size_t n = static_cast<std::size_t>(line.front() - 63);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() != 1 + bytes) throw ParseError("graph6: wrong length for " + std::to_string(n) + " vertices");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int value = line[1 + k / 6] - 63;
      if ((value >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kAuto) {
    format = GraphFormat::kEdgeList;
    std::istringstream probe{std::string(text)};
    std::string line;
    while (std::getline(probe, line)) {
      auto body = trim(line);
      if (body.empty() || body.front() == '#') continue;
      const auto tokens = split_ws(body);
      if (body.starts_with(">>graph6<<") ||
          (tokens.size() == 1 && body != "c" &&
           !std::isdigit(static_cast<unsigned char>(body.front())))) {
        format = GraphFormat::kGraph6;
      } else if (tokens[0] == "c" || tokens[0] == "p") {
        format = GraphFormat::kDimacs;
      }
      break;
    }
  }
  std::istringstream in{std::string(text)};
  switch (format) {
    case GraphFormat::kDimacs:
      return read_dimacs(in);
    case GraphFormat::kGraph6: {
      std::string line;
      while (std::getline(in, line)) {
        if (!trim(line).empty()) return read_graph6(line);
      }
      throw ParseError("graph6: empty input");
    }
    default:
      return read_edge_list(in);
  }
}

Graph read_graph_file(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (format == GraphFormat::kAuto) {
    const auto ext = path.extension().string();
    if (ext == ".g6" || ext == ".graph6") format = GraphFormat::kGraph6;
    if (ext == ".dimacs" || ext == ".col") format = GraphFormat::kDimacs;
  }
  return parse_graph(buffer.str(), format);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 62) throw InputError("graph6: only graphs up to 62 vertices are supported");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

}  // namespace cliquecode
