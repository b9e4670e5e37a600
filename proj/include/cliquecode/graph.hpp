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

#ifndef CLIQUECODE_GRAPH_HPP_
#define CLIQUECODE_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "cliquecode/errors.hpp"
#include "cliquecode/natural.hpp"

namespace cliquecode {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are kept sorted and an adjacency matrix backs
/// `adjacent()`. Instances are immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on `n` vertices.
  explicit Graph(std::size_t n);

  /// Throws InputError on out-of-range ids or self-loops; duplicate edges
  /// (in either orientation) collapse.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const { return neighbors_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const {
    return matrix_[static_cast<std::size_t>(u) * vertex_count() + v] != 0;
  }
  const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_[v]; }
  std::size_t degree(Vertex v) const { return neighbors_[v].size(); }

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.neighbors_ == b.neighbors_;
  }

 private:
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::uint8_t> matrix_;
  std::size_t edge_count_ = 0;
};

Graph graph_from_edge_list(std::size_t n, std::span<const Edge> edges);

/// A graph whose vertex v carries the positive label labels[v].
struct LabeledGraph {
  Graph graph;
  std::vector<Natural> labels;
};

/// Divisors of n greater than 1, ascending, adjacent iff gcd > 1.
LabeledGraph divisor_graph(std::uint64_t n);

/// Vertex i carries sequence[i]; i ~ j iff i != j and gcd > 1.
LabeledGraph realize_sequence(std::span<const Natural> sequence);

enum class Family { kComplete, kPath, kCycle, kEmpty };

Family parse_family(std::string_view name);
std::string_view family_name(Family family);

/// K_n, P_n (0-1-...-(n-1)), C_n or the edgeless graph.
Graph generate_family(Family family, std::size_t n);

/// Bijection on 0..n-1 stored as an image array.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InputError unless `images` is a bijection on 0..size-1.
  explicit Permutation(std::vector<Vertex> images);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  Vertex operator()(Vertex v) const { return images_[v]; }
  const std::vector<Vertex>& images() const { return images_; }
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> images_;
};

/// The graph with edge {p(u), p(v)} for every edge {u, v} of g.
Graph apply_permutation(const Graph& g, const Permutation& p);

/// Vertex sets of connected components, each sorted, ordered by least vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Proper 2-coloring (0/1 per vertex) if one exists.
std::optional<std::vector<int>> bipartite_coloring(const Graph& g);
bool is_bipartite(const Graph& g);

std::vector<Vertex> isolated_vertices(const Graph& g);

/// Exact alpha(G). Graphs are limited to 64 vertices.
std::size_t independence_number(const Graph& g, SearchBudget budget = {});

/// Degree sequence sorted descending.
std::vector<std::size_t> degree_sequence(const Graph& g);

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace cliquecode

#endif  // CLIQUECODE_GRAPH_HPP_
