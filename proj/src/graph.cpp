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

#include "cliquecode/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <string>

#include "bitmask.hpp"

namespace cliquecode {

Graph::Graph(std::size_t n) : neighbors_(n), matrix_(n * n, 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") references a vertex outside [0," + std::to_string(n) +
                       ")");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (g.matrix_[u * n + v] != 0) continue;
    g.matrix_[u * n + v] = 1;
    g.matrix_[v * n + u] = 1;
    g.neighbors_[u].push_back(v);
    g.neighbors_[v].push_back(u);
    ++g.edge_count_;
  }
  for (auto& list : g.neighbors_) std::sort(list.begin(), list.end());
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph graph_from_edge_list(std::size_t n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

LabeledGraph divisor_graph(std::uint64_t n) {
  if (n < 2) throw InputError("divisor_graph: n must be at least 2");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  std::vector<std::uint64_t> divisors(small.begin() + 1, small.end());
  divisors.insert(divisors.end(), large.rbegin(), large.rend());

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    for (std::size_t j = i + 1; j < divisors.size(); ++j) {
      if (std::gcd(divisors[i], divisors[j]) > 1) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  LabeledGraph out{Graph::from_edges(divisors.size(), edges), {}};
  out.labels.assign(divisors.begin(), divisors.end());
  return out;
}

LabeledGraph realize_sequence(std::span<const Natural> sequence) {
  if (sequence.empty()) throw InputError("realize_sequence: empty sequence");
  for (const auto& a : sequence) {
    if (a < 1) throw InputError("realize_sequence: entries must be positive");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (sequence[i] == 1) continue;
    for (std::size_t j = i + 1; j < sequence.size(); ++j) {
      if (gcd(sequence[i], sequence[j]) > 1) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return {Graph::from_edges(sequence.size(), edges),
          std::vector<Natural>(sequence.begin(), sequence.end())};
}

Family parse_family(std::string_view name) {
  if (name == "complete") return Family::kComplete;
  if (name == "path") return Family::kPath;
  if (name == "cycle") return Family::kCycle;
  if (name == "empty") return Family::kEmpty;
  throw InputError("unknown graph family '" + std::string(name) + "'");
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::kComplete: return "complete";
    case Family::kPath: return "path";
    case Family::kCycle: return "cycle";
    case Family::kEmpty: return "empty";
  }
  return "?";
}

Graph generate_family(Family family, std::size_t n) {
  if (n < 1) throw InputError("generate_family: n must be at least 1");
  std::vector<Edge> edges;
  switch (family) {
    case Family::kComplete:
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      }
      break;
    case Family::kPath:
      for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case Family::kCycle:
      if (n < 3) throw InputError("generate_family: a cycle needs n >= 3");
      for (Vertex v = 0; v < n; ++v) {
        edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
      }
      break;
    case Family::kEmpty:
      break;
  }
  return Graph::from_edges(n, edges);
}

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Vertex v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw InputError("permutation is not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> images(n);
  std::iota(images.begin(), images.end(), Vertex{0});
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(images_.size());
  for (Vertex v = 0; v < images_.size(); ++v) inv[images_[v]] = v;
  return Permutation(std::move(inv));
}

Graph apply_permutation(const Graph& g, const Permutation& p) {
  if (p.size() != g.vertex_count()) {
    throw InputError("apply_permutation: permutation size does not match graph");
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(p(u), p(v));
  return Graph::from_edges(g.vertex_count(), edges);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.vertex_count(), false);
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> component{root}, stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (seen[u]) continue;
        seen[u] = true;
        component.push_back(u);
        stack.push_back(u);
      }
    }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::optional<std::vector<int>> bipartite_coloring(const Graph& g) {
  std::vector<int> color(g.vertex_count(), -1);
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_bipartite(const Graph& g) { return bipartite_coloring(g).has_value(); }

std::vector<Vertex> isolated_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) out.push_back(v);
  }
  return out;
}

std::size_t independence_number(const Graph& g, SearchBudget budget) {
  using detail::VertexMask;
  detail::require_search_size(g, "independence_number");
  const auto adj = detail::adjacency_masks(g);
  NodeCounter nodes(budget);
  std::size_t best = 0;

  std::function<void(VertexMask, std::size_t)> search =
      [&](VertexMask candidates, std::size_t size) {
        nodes.tick();
        if (candidates == 0) {
          best = std::max(best, size);
          return;
        }
        if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
        const Vertex v = static_cast<Vertex>(std::countr_zero(candidates));
        search(candidates & ~adj[v] & ~detail::bit(v), size + 1);
        search(candidates & ~detail::bit(v), size);
      };

  const VertexMask all =
      g.vertex_count() == 64 ? ~VertexMask{0}
                             : (VertexMask{1} << g.vertex_count()) - 1;
  search(all, 0);
  return best;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.push_back(g.degree(v));
  std::sort(out.rbegin(), out.rend());
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.vertex_count()) {
      throw InputError("induced_subgraph: vertex out of range");
    }
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] != vertices[j] && g.adjacent(vertices[i], vertices[j])) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph::from_edges(vertices.size(), edges);
}

}  // namespace cliquecode
