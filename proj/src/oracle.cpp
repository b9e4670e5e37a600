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

#include "cliquecode/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cliquecode {
namespace {

constexpr std::size_t kOracleMaxVertices = 9;

using Cover = std::vector<std::vector<Vertex>>;

bool covers_everything(const Graph& g, const Cover& cover) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    bool hit = false;
    for (const auto& c : cover) hit = hit || std::find(c.begin(), c.end(), v) != c.end();
    if (!hit) return false;
  }
  for (const auto& [u, v] : g.edges()) {
    bool hit = false;
    for (const auto& c : cover) {
      hit = hit || (std::find(c.begin(), c.end(), u) != c.end() &&
                    std::find(c.begin(), c.end(), v) != c.end());
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

OracleReport brute_force_isomorphic(const Graph& g1, const Graph& g2, SearchBudget budget) {
  OracleReport report;
  const std::size_t n = g1.vertex_count();
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count() ||
      degree_sequence(g1) != degree_sequence(g2)) {
    return report;
  }
  NodeCounter nodes(budget);
  std::vector<Vertex> image(n, 0);
  std::vector<bool> used(n, false);

  std::function<bool(Vertex)> place = [&](Vertex v) -> bool {
    nodes.tick();
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || g1.degree(v) != g2.degree(w)) continue;
      bool consistent = true;
      for (Vertex u = 0; u < v && consistent; ++u) {
        consistent = g1.adjacent(u, v) == g2.adjacent(image[u], w);
      }
      if (!consistent) continue;
      used[w] = true;
      image[v] = w;
      if (place(v + 1)) return true;
      used[w] = false;
    }
    return false;
  };

  report.verdict = place(0);
  report.nodes_explored = nodes.count();
  if (report.verdict) report.permutation = Permutation(image);
  return report;
}

std::vector<std::vector<std::vector<Vertex>>> brute_force_minimum_coverings(const Graph& g,
                                                                            SearchBudget budget) {
  const std::size_t n = g.vertex_count();
  if (n == 0 || n > kOracleMaxVertices) {
    throw InputError("oracle coverings need 1.." + std::to_string(kOracleMaxVertices) + " vertices");
  }
  NodeCounter nodes(budget);

  // Every nonempty vertex subset that is a clique.
  std::vector<std::vector<Vertex>> cliques;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v) {
      if (mask & (1u << v)) members.push_back(v);
    }
    bool clique = true;
    for (std::size_t i = 0; i < members.size() && clique; ++i) {
      for (std::size_t j = i + 1; j < members.size() && clique; ++j) {
        clique = g.adjacent(members[i], members[j]);
      }
    }
    if (clique) cliques.push_back(std::move(members));
  }

  // Combinations of t cliques for t = 1, 2, ... until some cover appears.
  std::vector<Cover> found;
  for (std::size_t t = 1; t <= cliques.size() && found.empty(); ++t) {
    std::vector<std::size_t> pick(t);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      nodes.tick();
      Cover cover;
      for (std::size_t i : pick) cover.push_back(cliques[i]);
      if (covers_everything(g, cover)) {
        std::sort(cover.begin(), cover.end());
        found.push_back(std::move(cover));
      }
      std::size_t i = t;
      while (i > 0 && pick[i - 1] == cliques.size() - t + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < t; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Natural> brute_force_code(const Graph& g, SearchBudget budget) {
  const auto coverings = brute_force_minimum_coverings(g, budget);
  NodeCounter nodes(budget);

  std::vector<Natural> best;
  for (const auto& cover : coverings) {
    // Singletons of isolated vertices keep label 1; every other clique
    // takes a prime.
    std::vector<std::vector<Vertex>> bearing;
    for (const auto& c : cover) {
      if (c.size() == 1 && g.degree(c.front()) == 0) continue;
      bearing.push_back(c);
    }
    std::vector<std::uint64_t> primes;
    for (std::uint64_t candidate = 2; primes.size() < bearing.size(); ++candidate) {
      bool prime = true;
      for (std::uint64_t d = 2; d * d <= candidate && prime; ++d) prime = candidate % d != 0;
      if (prime) primes.push_back(candidate);
    }
    std::vector<std::size_t> order(bearing.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    do {
      nodes.tick();
      std::vector<Natural> labels(g.vertex_count(), 1);
      for (std::size_t i = 0; i < bearing.size(); ++i) {
        for (Vertex v : bearing[i]) labels[v] *= primes[order[i]];
      }
      std::sort(labels.begin(), labels.end());
      if (best.empty() || labels < best) best = std::move(labels);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return best;
}

void for_each_labeled_graph(std::size_t n, const std::function<void(const Graph&)>& visit) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  if (pairs.size() >= 63) throw InputError("too many labeled graphs to enumerate");
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t index = 0; index < total; ++index) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (index & (std::uint64_t{1} << b)) edges.push_back(pairs[b]);
    }
    visit(Graph::from_edges(n, edges));
  }
}

std::vector<Graph> all_labeled_graphs(std::size_t n) {
  std::vector<Graph> out;
  for_each_labeled_graph(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace cliquecode
