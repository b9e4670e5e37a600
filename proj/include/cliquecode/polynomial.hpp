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

// Polynomial representations of graphs.
//
// Given a covering whose prime-bearing cliques are numbered 1..k, vertex v
// contributes the square-free monomial of the variables x_j of the cliques
// containing it (or the constant 1 if it is isolated). Summing over vertices
// gives f(G, S) with nonnegative integer coefficients; the canonical
// polynomial F(G) is the one read off the code.

#ifndef CLIQUECODE_POLYNOMIAL_HPP_
#define CLIQUECODE_POLYNOMIAL_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliquecode/clique_cover.hpp"
#include "cliquecode/coding.hpp"
#include "cliquecode/coding_sequence.hpp"
#include "cliquecode/graph.hpp"

namespace cliquecode {

/// Square-free monomial: a sorted set of 1-based variable indices. The empty
/// set is the constant 1.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<unsigned> variables);
  explicit Monomial(std::vector<unsigned> variables);

  const std::vector<unsigned>& variables() const { return variables_; }
  std::size_t degree() const { return variables_.size(); }
  bool is_constant() const { return variables_.empty(); }
  bool shares_variable(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> variables_;
};

/// Ascending degree, then lexicographic variable tuple.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class GraphPolynomial {
 public:
  using Terms = std::map<Monomial, std::uint64_t, MonomialOrder>;

  GraphPolynomial() = default;
  GraphPolynomial(std::initializer_list<std::pair<const Monomial, std::uint64_t>> terms);

  /// Adds `coefficient` copies of `m`. A zero coefficient is a no-op.
  void add(const Monomial& m, std::uint64_t coefficient = 1);

  const Terms& terms() const { return terms_; }
  std::uint64_t coefficient(const Monomial& m) const;
  std::uint64_t constant_term() const { return coefficient(Monomial{}); }
  /// Sum of coefficients, i.e. the number of vertices represented.
  std::uint64_t total_mass() const;
  /// Largest variable index in use.
  unsigned variable_count() const;

  friend bool operator==(const GraphPolynomial&, const GraphPolynomial&) = default;

 private:
  Terms terms_;
};

/// f(G, S): variables follow the order of the prime-bearing cliques in `s`.
GraphPolynomial poly_from_covering(const Graph& g, const TotalCliqueCovering& s);

/// p_i -> x_i with primes ranked by size among the primes of lambda; entries
/// equal to 1 add to the constant term. Throws InputError on an entry that
/// is not square-free.
GraphPolynomial poly_from_sequence(const CodingSequence& sequence);

/// F(G) = poly_from_sequence(code(g)).
GraphPolynomial canonical_polynomial(const Graph& g, SearchBudget budget = {});

/// F(G(n)) from the exponents of n sorted descending: the sum over nonempty
/// index sets I of prod_{i in I} r_i * prod_{i in I} x_i, or 1 if n is prime.
GraphPolynomial divisor_graph_polynomial_closed_form(std::uint64_t n);

struct FamilyForm {
  CodingSequence code;
  GraphPolynomial polynomial;
};

/// Known code and canonical polynomial of K_n (n >= 1), P_n (n >= 3),
/// C_n (n >= 4) and the edgeless graph (n >= 1).
FamilyForm closed_form_family(Family family, std::size_t n);

/// The monomial copies split into two nonempty groups with disjoint
/// variables; each constant copy may join either group.
bool detect_disconnected_poly(const GraphPolynomial& p);

/// The monomial copies (a coefficient c counts c times) split into two
/// groups, each free of shared variables.
bool detect_bipartite_poly(const GraphPolynomial& p);

/// `2*x1 + 2*x2 + x3 + 3*x1*x3`, terms in MonomialOrder; `0` when empty.
std::string render(const GraphPolynomial& p);

/// Inverse of render; whitespace-insensitive. Throws ParseError.
GraphPolynomial parse_polynomial(std::string_view text);

}  // namespace cliquecode

#endif  // CLIQUECODE_POLYNOMIAL_HPP_
