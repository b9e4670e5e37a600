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

// Canonical graph codes.
//
// A total clique covering S with k prime-bearing cliques turns into a coding
// sequence once the first k primes are assigned to those cliques: each vertex
// is labelled with the product of the primes of its cliques (1 for isolated
// vertices) and the labels are sorted. sigma[S] is the lexicographically
// least such sequence over all k! assignments, and code(G) is the least
// sigma[S] over all minimum total clique coverings. Two graphs are
// isomorphic exactly when their codes agree.

#ifndef CLIQUECODE_CODING_HPP_
#define CLIQUECODE_CODING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cliquecode/clique_cover.hpp"
#include "cliquecode/coding_sequence.hpp"
#include "cliquecode/errors.hpp"
#include "cliquecode/graph.hpp"
#include "cliquecode/natural.hpp"

namespace cliquecode {

/// Assignment of the first k primes to the k prime-bearing cliques of a
/// covering. rank(i) == 0 means the i-th prime-bearing clique gets 2.
class PrimeAssignment {
 public:
  PrimeAssignment() = default;
  /// `ranks` must be a permutation of 0..k-1.
  explicit PrimeAssignment(std::vector<std::size_t> ranks);

  static PrimeAssignment identity(std::size_t k);
  /// From the actual primes, e.g. {2, 5, 3, 7, 11}; they must be exactly
  /// the first k primes in some order.
  static PrimeAssignment from_primes(std::span<const std::uint64_t> primes);

  std::size_t size() const { return ranks_.size(); }
  std::size_t rank(std::size_t clique) const { return ranks_[clique]; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  std::vector<std::uint64_t> primes() const;

  friend bool operator==(const PrimeAssignment&, const PrimeAssignment&) = default;

 private:
  std::vector<std::size_t> ranks_;
};

/// Above this many prime-bearing cliques sigma[S] switches from trying every
/// assignment to branch and bound.
inline constexpr std::size_t kExhaustiveAssignmentLimit = 3;

/// Labels every vertex by the primes `a` gives the cliques containing it and
/// returns the sorted labels. Throws InputError if `s` is not a total clique
/// covering of g or `a` has the wrong size.
CodingSequence coding_sequence_from_covering(const Graph& g, const TotalCliqueCovering& s,
                                             const PrimeAssignment& a);

/// Per-vertex labels (in vertex order) for the same construction.
std::vector<Natural> covering_labels(const Graph& g, const TotalCliqueCovering& s,
                                     const PrimeAssignment& a);

/// sigma[S]: least coding sequence over all prime assignments for `s`, which
/// may be any total clique covering.
CodingSequence sigma_of_covering(const Graph& g, const TotalCliqueCovering& s,
                                 SearchBudget budget = {});

/// Same, but always via branch and bound or always via full enumeration.
/// Exposed so the two routes can be checked against each other.
CodingSequence sigma_of_covering_branch_and_bound(const Graph& g, const TotalCliqueCovering& s,
                                                  SearchBudget budget = {});
CodingSequence sigma_of_covering_exhaustive(const Graph& g, const TotalCliqueCovering& s,
                                            SearchBudget budget = {});

struct CodeResult {
  CodingSequence code;
  std::size_t theta = 0;
  std::size_t covering_count = 0;
  /// A minimum covering and assignment that produce `code`.
  TotalCliqueCovering covering;
  PrimeAssignment assignment;
};

CodeResult compute_code(const Graph& g, SearchBudget budget = {});

/// The canonical code sigma(G). Throws BudgetExceeded rather than
/// returning a minimum over a partial set of coverings.
CodingSequence code(const Graph& g, SearchBudget budget = {});

bool is_isomorphic_by_code(const Graph& g1, const Graph& g2, SearchBudget budget = {});

struct DivisorEmbedding {
  LabeledGraph labeled;
  Natural n;
};

/// Distinct labels s(v) with u ~ v iff gcd(s(u), s(v)) > 1, built from the
/// maximal cliques ordered by (least vertex, size, vertex list); n is the
/// lcm of the labels, so g is an induced subgraph of G(n).
DivisorEmbedding theorem1_labels(const Graph& g);

/// Same construction over an explicit clique order. `cliques` must form a
/// total clique covering of g (maximal cliques are one such choice).
///
/// Vertices sharing a prime product q1*q2*...*qr are told apart in id
/// order by multiplying with 1, q1, q2, ..., q1^2, q1*q2, ... (products of
/// their own primes in graded lexicographic order).
DivisorEmbedding theorem1_labels(const Graph& g, std::span<const Clique> cliques);

/// Labels are distinct, each divides n, and gcd adjacency reproduces g.
bool is_divisor_embedding(const Graph& g, const DivisorEmbedding& embedding);

/// Structural rules of a coding sequence plus realize_sequence(entries) ~= g,
/// the isomorphism decided by brute force (small graphs only).
bool validate_coding_sequence(const std::vector<Natural>& entries, const Graph& g,
                              SearchBudget budget = {});

}  // namespace cliquecode

#endif  // CLIQUECODE_CODING_HPP_
