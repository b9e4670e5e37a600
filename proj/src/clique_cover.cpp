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

#include "cliquecode/clique_cover.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <sstream>

#include "bitmask.hpp"

namespace cliquecode {
namespace {

using detail::bit;
using detail::VertexMask;

std::vector<Vertex> intersect(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void bron_kerbosch(const Graph& g, Clique& r, std::vector<Vertex> p, std::vector<Vertex> x,
                   std::vector<Clique>& out) {
  if (p.empty()) {
    if (x.empty()) {
      Clique c = r;
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
    return;
  }
  // Pivot on the vertex of P u X with the most neighbors in P.
  Vertex pivot = p.front();
  std::size_t best = 0;
  for (const auto* side : {&p, &x}) {
    for (Vertex u : *side) {
      const std::size_t hits = intersect(p, g.neighbors(u)).size();
      if (hits >= best) {
        best = hits;
        pivot = u;
      }
    }
  }
  std::vector<Vertex> branch;
  std::set_difference(p.begin(), p.end(), g.neighbors(pivot).begin(),
                      g.neighbors(pivot).end(), std::back_inserter(branch));
  for (Vertex v : branch) {
    r.push_back(v);
    bron_kerbosch(g, r, intersect(p, g.neighbors(v)), intersect(x, g.neighbors(v)), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.insert(std::upper_bound(x.begin(), x.end(), v), v);
  }
}

void extend_clique(const Graph& g, Clique& current, const std::vector<Vertex>& candidates,
                   std::size_t min_size, const std::function<void(const Clique&)>& visit) {
  if (current.size() >= min_size) visit(current);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Vertex v = candidates[i];
    std::vector<Vertex> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
    }
    current.push_back(v);
    extend_clique(g, current, next, min_size, visit);
    current.pop_back();
  }
}

// Exact search for total clique coverings of the non-isolated part of a
// graph. Isolated vertices are handled by the caller (forced singletons).
//
// Depth-first over uncovered edges: pick the uncovered edge with the fewest
// admissible candidate cliques and branch over those candidates. Siblings
// tried earlier are forbidden in later branches, so each covering is
// generated once.
class CoverSearch {
 public:
  CoverSearch(const Graph& g, SearchBudget budget)
      : n_(g.vertex_count()), adj_(detail::adjacency_masks(g)), nodes_(budget),
        by_edge_(n_ * n_) {
    for_each_clique(g, 2, [&](const Clique& c) {
      const int id = static_cast<int>(candidates_.size());
      candidates_.push_back(detail::vertices_to_mask(c));
      for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) by_edge_[c[i] * n_ + c[j]].push_back(id);
      }
    });
    forbidden_.assign(candidates_.size(), 0);
  }

  // Returns the minimum number of cliques; fills `found` with every covering
  // of that size when `enumerate` is set, otherwise with one of them.
  std::size_t solve(bool enumerate) {
    enumerate_ = enumerate;
    std::vector<VertexMask> uncovered = adj_;
    if (std::all_of(uncovered.begin(), uncovered.end(), [](VertexMask m) { return m == 0; })) {
      found_.insert(std::vector<int>{});
      return 0;
    }
    std::size_t target = std::max<std::size_t>(1, lower_bound(uncovered));
    for (;; ++target) {
      target_ = target;
      done_ = false;
      dfs(uncovered, 0);
      if (!found_.empty()) return target;
    }
  }

  const std::set<std::vector<int>>& found() const { return found_; }
  VertexMask candidate(int id) const { return candidates_[id]; }
  std::uint64_t nodes() const { return nodes_.count(); }

 private:
  bool is_clique_mask(VertexMask m) const {
    for (VertexMask rest = m; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(rest));
      if (((adj_[v] | bit(v)) & m) != m) return false;
    }
    return true;
  }

  // Uncovered edges that pairwise fit in no common clique each need their
  // own clique; a greedy packing of them bounds the remaining depth.
  std::size_t lower_bound(const std::vector<VertexMask>& uncovered) const {
    std::vector<VertexMask> packed;
    for (Vertex u = 0; u < n_; ++u) {
      for (VertexMask m = uncovered[u] & ~((bit(u) << 1) - 1); m != 0; m &= m - 1) {
        const VertexMask e = bit(u) | (m & -m);
        const bool clash_all = std::none_of(packed.begin(), packed.end(),
                                            [&](VertexMask f) { return is_clique_mask(e | f); });
        if (clash_all) packed.push_back(e);
      }
    }
    return packed.size();
  }

  void dfs(std::vector<VertexMask>& uncovered, std::size_t depth) {
    nodes_.tick();
    if (done_) return;

    // Most constrained uncovered edge.
    std::size_t best_count = std::numeric_limits<std::size_t>::max();
    std::size_t best_slot = 0;
    bool any = false;
    for (Vertex u = 0; u < n_ && best_count > 0; ++u) {
      for (VertexMask m = uncovered[u] & ~((bit(u) << 1) - 1); m != 0; m &= m - 1) {
        any = true;
        const std::size_t slot = u * n_ + static_cast<std::size_t>(std::countr_zero(m));
        std::size_t count = 0;
        for (int id : by_edge_[slot]) count += forbidden_[id] == 0;
        if (count < best_count) {
          best_count = count;
          best_slot = slot;
          if (count == 0) break;
        }
      }
    }
    if (!any) {
      std::vector<int> ids = chosen_;
      std::sort(ids.begin(), ids.end());
      found_.insert(std::move(ids));
      if (!enumerate_) done_ = true;
      return;
    }
    if (depth == target_ || best_count == 0) return;
    if (depth + lower_bound(uncovered) > target_) return;

    std::vector<int> tried;
    for (int id : by_edge_[best_slot]) {
      if (forbidden_[id] != 0) continue;
      const std::vector<VertexMask> saved = uncovered;
      const VertexMask c = candidates_[id];
      for (VertexMask rest = c; rest != 0; rest &= rest - 1) {
        uncovered[std::countr_zero(rest)] &= ~c;
      }
      chosen_.push_back(id);
      dfs(uncovered, depth + 1);
      chosen_.pop_back();
      uncovered = saved;
      if (done_) break;
      forbidden_[id] = 1;
      tried.push_back(id);
    }
    for (int id : tried) forbidden_[id] = 0;
  }

  std::size_t n_;
  std::vector<VertexMask> adj_;
  NodeCounter nodes_;
  std::vector<VertexMask> candidates_;
  std::vector<std::vector<int>> by_edge_;
  std::vector<char> forbidden_;
  std::vector<int> chosen_;
  std::set<std::vector<int>> found_;
  std::size_t target_ = 0;
  bool enumerate_ = false;
  bool done_ = false;
};

MinimumCoverings run_cover_search(const Graph& g, SearchBudget budget, bool enumerate) {
  if (g.vertex_count() == 0) throw InputError("total clique covering of the empty graph");
  detail::require_search_size(g, "minimum_total_coverings");
  CoverSearch search(g, budget);
  const std::size_t core = search.solve(enumerate);
  const auto isolated = isolated_vertices(g);

  MinimumCoverings out;
  out.theta = core + isolated.size();
  out.nodes_explored = search.nodes();
  for (const auto& ids : search.found()) {
    std::vector<Clique> cliques;
    for (Vertex v : isolated) cliques.push_back({v});
    for (int id : ids) cliques.push_back(detail::mask_to_vertices(search.candidate(id)));
    out.coverings.push_back(TotalCliqueCovering(std::move(cliques)).canonical());
  }
  std::sort(out.coverings.begin(), out.coverings.end());
  return out;
}

}  // namespace

bool is_clique(const Graph& g, const Clique& c) {
  if (c.empty()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= g.vertex_count()) return false;
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (c[i] == c[j] || !g.adjacent(c[i], c[j])) return false;
    }
  }
  return true;
}

std::vector<Clique> maximal_cliques(const Graph& g) {
  std::vector<Clique> out;
  Clique r;
  std::vector<Vertex> p(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) p[v] = v;
  bron_kerbosch(g, r, std::move(p), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_clique(const Graph& g, std::size_t min_size,
                     const std::function<void(const Clique&)>& visit) {
  if (min_size < 1) throw InputError("for_each_clique: min_size must be at least 1");
  Clique current;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Vertex> later;
    for (Vertex u : g.neighbors(v)) {
      if (u > v) later.push_back(u);
    }
    current.push_back(v);
    extend_clique(g, current, later, min_size, visit);
    current.pop_back();
  }
}

std::vector<Clique> all_cliques(const Graph& g, std::size_t min_size) {
  std::vector<Clique> out;
  for_each_clique(g, min_size, [&](const Clique& c) { out.push_back(c); });
  return out;
}

bool clique_less(const Clique& a, const Clique& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

TotalCliqueCovering::TotalCliqueCovering(std::vector<Clique> cliques)
    : cliques_(std::move(cliques)) {
  for (auto& c : cliques_) {
    if (c.empty()) throw InputError("a covering cannot contain an empty clique");
    std::sort(c.begin(), c.end());
  }
}

TotalCliqueCovering TotalCliqueCovering::canonical() const {
  auto sorted = cliques_;
  std::sort(sorted.begin(), sorted.end(), clique_less);
  return TotalCliqueCovering(std::move(sorted));
}

std::set<Clique> TotalCliqueCovering::as_set() const {
  return {cliques_.begin(), cliques_.end()};
}

bool is_total_clique_covering(const Graph& g, const TotalCliqueCovering& s) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> vertex_covered(n, false);
  std::vector<bool> edge_covered(n * n, false);
  for (const auto& c : s.cliques()) {
    if (!is_clique(g, c)) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      vertex_covered[c[i]] = true;
      for (std::size_t j = i + 1; j < c.size(); ++j) edge_covered[c[i] * n + c[j]] = true;
    }
  }
  if (std::find(vertex_covered.begin(), vertex_covered.end(), false) != vertex_covered.end()) {
    return false;
  }
  for (const auto& [u, v] : g.edges()) {
    if (!edge_covered[u * n + v]) return false;
  }
  return true;
}

std::vector<std::size_t> prime_bearing_cliques(const Graph& g, const TotalCliqueCovering& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& c = s[i];
    if (c.size() == 1 && c.front() < g.vertex_count() && g.degree(c.front()) == 0) continue;
    out.push_back(i);
  }
  return out;
}

std::size_t theta_t(const Graph& g, SearchBudget budget) {
  return run_cover_search(g, budget, false).theta;
}

MinimumCoverings minimum_total_coverings(const Graph& g, SearchBudget budget) {
  return run_cover_search(g, budget, true);
}

TotalCliqueCovering covering_from_sequence(const CodingSequence& sequence) {
  std::vector<Clique> cliques;
  for (Vertex v = 0; v < sequence.size(); ++v) {
    if (sequence[v] == 1) cliques.push_back({v});
  }
  for (const auto& p : prime_factors(lambda_of(sequence))) {
    Clique c;
    for (Vertex v = 0; v < sequence.size(); ++v) {
      if (sequence[v] % p == 0) c.push_back(v);
    }
    cliques.push_back(std::move(c));
  }
  return TotalCliqueCovering(std::move(cliques));
}

bool prop1_certificate(const Graph& g, std::span<const Vertex> independent_set,
                       const TotalCliqueCovering& s) {
  for (std::size_t i = 0; i < independent_set.size(); ++i) {
    if (independent_set[i] >= g.vertex_count()) return false;
    for (std::size_t j = i + 1; j < independent_set.size(); ++j) {
      if (independent_set[i] == independent_set[j] ||
          g.adjacent(independent_set[i], independent_set[j])) {
        return false;
      }
    }
  }
  if (s.size() != independent_set.size()) return false;
  if (!is_total_clique_covering(g, s)) return false;
  std::vector<bool> owner_taken(s.size(), false);
  for (Vertex v : independent_set) {
    std::size_t hits = 0, owner = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (std::binary_search(s[i].begin(), s[i].end(), v)) {
        ++hits;
        owner = i;
      }
    }
    if (hits != 1 || owner_taken[owner]) return false;
    owner_taken[owner] = true;
  }
  return true;
}

std::string write_covering(const TotalCliqueCovering& s) {
  std::ostringstream out;
  for (const auto& c : s.cliques()) {
    for (std::size_t i = 0; i < c.size(); ++i) out << (i > 0 ? " " : "") << c[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace cliquecode
