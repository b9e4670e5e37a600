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

// Cliques, total clique coverings (cliques covering every vertex and every
// edge) and the exact total clique covering number.

#ifndef CLIQUECODE_CLIQUE_COVER_HPP_
#define CLIQUECODE_CLIQUE_COVER_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cliquecode/coding_sequence.hpp"
#include "cliquecode/errors.hpp"
#include "cliquecode/graph.hpp"

namespace cliquecode {

/// Sorted vertex ids.
using Clique = std::vector<Vertex>;

bool is_clique(const Graph& g, const Clique& c);

/// Inclusion-maximal cliques in lexicographic order of their vertex lists.
/// Isolated vertices come out as singletons.
std::vector<Clique> maximal_cliques(const Graph& g);

/// Calls `visit` once for every clique with at least `min_size` vertices.
void for_each_clique(const Graph& g, std::size_t min_size,
                     const std::function<void(const Clique&)>& visit);

std::vector<Clique> all_cliques(const Graph& g, std::size_t min_size);

/// Canonical clique order: by size, then by vertex list.
bool clique_less(const Clique& a, const Clique& b);

/// Ordered list of cliques. The order matters to polynomial variables and
/// prime assignments; `same_cliques` compares as sets.
class TotalCliqueCovering {
 public:
  TotalCliqueCovering() = default;
  /// Sorts the vertices of each clique. Throws InputError on an empty clique.
  explicit TotalCliqueCovering(std::vector<Clique> cliques);

  const std::vector<Clique>& cliques() const { return cliques_; }
  std::size_t size() const { return cliques_.size(); }
  const Clique& operator[](std::size_t i) const { return cliques_[i]; }

  TotalCliqueCovering canonical() const;
  std::set<Clique> as_set() const;
  bool same_cliques(const TotalCliqueCovering& other) const {
    return as_set() == other.as_set();
  }

  friend bool operator==(const TotalCliqueCovering&, const TotalCliqueCovering&) = default;
  friend bool operator<(const TotalCliqueCovering& a, const TotalCliqueCovering& b) {
    return a.cliques_ < b.cliques_;
  }

 private:
  std::vector<Clique> cliques_;
};

/// Every member is a clique of g and together they cover V and E.
bool is_total_clique_covering(const Graph& g, const TotalCliqueCovering& s);

/// Positions in `s` of the cliques that receive primes: all except
/// singletons of isolated vertices, in covering order.
std::vector<std::size_t> prime_bearing_cliques(const Graph& g,
                                               const TotalCliqueCovering& s);

/// Exact total clique covering number. Search supports up to 64 vertices.
std::size_t theta_t(const Graph& g, SearchBudget budget = {});

struct MinimumCoverings {
  std::size_t theta = 0;
  /// Each covering in canonical clique order; the list itself is sorted.
  std::vector<TotalCliqueCovering> coverings;
  std::uint64_t nodes_explored = 0;
};

/// Every distinct total clique covering of size theta_t(g).
///
/// Candidates are all cliques with two or more vertices plus the singletons
/// of isolated vertices; minimum coverings can need non-maximal cliques.
/// Throws BudgetExceeded rather than returning a partial list.
MinimumCoverings minimum_total_coverings(const Graph& g, SearchBudget budget = {});

/// The covering read off a coding sequence: a singleton per leading 1, then
/// for each prime of lambda (ascending) the vertices whose entry it divides.
/// Vertex i is the i-th entry.
TotalCliqueCovering covering_from_sequence(const CodingSequence& sequence);

/// True iff `independent_set` is independent, |S| equals its size, S is a
/// total clique covering and each independent vertex lies in exactly one
/// clique of S (a distinct one per vertex). Certifies theta_t = alpha and
/// uniqueness of the minimum covering.
bool prop1_certificate(const Graph& g, std::span<const Vertex> independent_set,
                       const TotalCliqueCovering& s);

/// One clique per line, space-separated vertex ids.
std::string write_covering(const TotalCliqueCovering& s);

}  // namespace cliquecode

#endif  // CLIQUECODE_CLIQUE_COVER_HPP_
