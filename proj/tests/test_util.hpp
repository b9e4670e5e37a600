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

#ifndef CLIQUECODE_TESTS_TEST_UTIL_HPP_
#define CLIQUECODE_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <vector>

#include "cliquecode/clique_cover.hpp"
#include "cliquecode/coding.hpp"
#include "cliquecode/graph.hpp"
#include "cliquecode/natural.hpp"

namespace cliquecode::testing {

// Graph with the union of the within-clique edges of `cliques`.
inline Graph graph_from_cliques(std::size_t n, const std::vector<Clique>& cliques) {
  std::vector<Edge> edges;
  for (const auto& c : cliques) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) edges.emplace_back(c[i], c[j]);
    }
  }
  return Graph::from_edges(n, edges);
}

// Two components built from five maximal cliques; one of them ({1..5})
// overlaps another in three vertices.
inline std::vector<Clique> sample_cliques() {
  return {{0, 1, 2, 3}, {1, 2, 3, 4, 5}, {6, 7, 9}, {8, 9}, {9, 10}};
}

inline Graph sample_graph() { return graph_from_cliques(11, sample_cliques()); }

// u1=0, u2=1, v=2, w1=3, w2=4. Two minimum coverings, one of which uses the
// non-maximal clique {u1, u2}.
inline Graph witness_graph() {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {2, 3}, {1, 4}, {2, 4}};
  return Graph::from_edges(5, edges);
}

inline Graph graph(std::size_t n, std::initializer_list<Edge> edges) {
  std::vector<Edge> list(edges);
  return Graph::from_edges(n, list);
}

inline std::vector<Natural> naturals(std::initializer_list<std::uint64_t> values) {
  return {values.begin(), values.end()};
}

inline CodingSequence seq(std::initializer_list<std::uint64_t> values) {
  return CodingSequence(naturals(values));
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

inline Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> images(n);
  std::iota(images.begin(), images.end(), Vertex{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

// A random total clique covering: maximal cliques in random order, each
// then shrunk while coverage survives, plus a few random extra cliques.
inline TotalCliqueCovering random_covering(std::mt19937_64& rng, const Graph& g) {
  auto pool = all_cliques(g, 1);
  std::vector<Clique> chosen = maximal_cliques(g);
  std::shuffle(chosen.begin(), chosen.end(), rng);
  std::uniform_int_distribution<std::size_t> extra(0, 2);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (std::size_t i = extra(rng); i > 0; --i) {
    const auto& c = pool[pick(rng)];
    if (std::find(chosen.begin(), chosen.end(), c) == chosen.end()) chosen.push_back(c);
  }
  // Drop members whose removal keeps the covering valid, in random order.
  std::vector<std::size_t> order(chosen.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution drop(0.5);
  std::vector<bool> keep(chosen.size(), true);
  for (std::size_t i : order) {
    if (!drop(rng)) continue;
    keep[i] = false;
    std::vector<Clique> trial;
    for (std::size_t j = 0; j < chosen.size(); ++j) {
      if (keep[j]) trial.push_back(chosen[j]);
    }
    if (trial.empty() || !is_total_clique_covering(g, TotalCliqueCovering(trial))) keep[i] = true;
  }
  std::vector<Clique> out;
  for (std::size_t j = 0; j < chosen.size(); ++j) {
    if (keep[j]) out.push_back(chosen[j]);
  }
  return TotalCliqueCovering(std::move(out));
}

inline PrimeAssignment random_assignment(std::mt19937_64& rng, std::size_t k) {
  std::vector<std::size_t> ranks(k);
  std::iota(ranks.begin(), ranks.end(), std::size_t{0});
  std::shuffle(ranks.begin(), ranks.end(), rng);
  return PrimeAssignment(std::move(ranks));
}

// Relabels `s` so that vertex v becomes its position once the vertices are
// stably sorted by label. This is the vertex order of the sorted coding
// sequence built from the same labels.
inline TotalCliqueCovering relabel_by_sorted_labels(const TotalCliqueCovering& s,
                                                    const std::vector<Natural>& labels) {
  std::vector<Vertex> order(labels.size());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return labels[a] < labels[b]; });
  std::vector<Vertex> position(labels.size());
  for (Vertex i = 0; i < order.size(); ++i) position[order[i]] = i;
  std::vector<Clique> cliques;
  for (const auto& c : s.cliques()) {
    Clique mapped;
    for (Vertex v : c) mapped.push_back(position[v]);
    cliques.push_back(std::move(mapped));
  }
  return TotalCliqueCovering(std::move(cliques));
}

// True when sequence-to-covering inverts covering-to-sequence for (g, s, a),
// up to the vertex reordering that sorting the labels introduces.
inline bool covering_round_trips(const Graph& g, const TotalCliqueCovering& s,
                                 const PrimeAssignment& a) {
  const auto sequence = coding_sequence_from_covering(g, s, a);
  const auto expected = relabel_by_sorted_labels(s, covering_labels(g, s, a));
  return covering_from_sequence(sequence).same_cliques(expected);
}

}  // namespace cliquecode::testing

#endif  // CLIQUECODE_TESTS_TEST_UTIL_HPP_
