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

#include "cliquecode/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace cliquecode {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto at = s.find(sep);
    out.push_back(trim(s.substr(0, at)));
    if (at == std::string_view::npos) return out;
    s.remove_prefix(at + 1);
  }
}

std::uint64_t parse_u64(std::string_view token) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("bad number '" + std::string(token) + "' in polynomial");
  }
  return value;
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  unsigned find(unsigned x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(unsigned a, unsigned b) { parent[find(a)] = find(b); }
  std::vector<unsigned> parent;
};

std::vector<Natural> nontrivial_primes(const CodingSequence& sequence) {
  return prime_factors(lambda_of(sequence));
}

}  // namespace

Monomial::Monomial(std::initializer_list<unsigned> variables)
    : Monomial(std::vector<unsigned>(variables)) {}

Monomial::Monomial(std::vector<unsigned> variables) : variables_(std::move(variables)) {
  std::sort(variables_.begin(), variables_.end());
  if (std::adjacent_find(variables_.begin(), variables_.end()) != variables_.end()) {
    throw InputError("monomial variables must be distinct");
  }
  if (!variables_.empty() && variables_.front() == 0) {
    throw InputError("monomial variables are 1-based");
  }
}

bool Monomial::shares_variable(const Monomial& other) const {
  auto a = variables_.begin();
  auto b = other.variables_.begin();
  while (a != variables_.end() && b != other.variables_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.variables() < b.variables();
}

GraphPolynomial::GraphPolynomial(
    std::initializer_list<std::pair<const Monomial, std::uint64_t>> terms) {
  for (const auto& [m, c] : terms) add(m, c);
}

void GraphPolynomial::add(const Monomial& m, std::uint64_t coefficient) {
  if (coefficient == 0) return;
  terms_[m] += coefficient;
}

std::uint64_t GraphPolynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

std::uint64_t GraphPolynomial::total_mass() const {
  std::uint64_t mass = 0;
  for (const auto& [m, c] : terms_) mass += c;
  return mass;
}

unsigned GraphPolynomial::variable_count() const {
  unsigned k = 0;
  for (const auto& [m, c] : terms_) {
    if (!m.is_constant()) k = std::max(k, m.variables().back());
  }
  return k;
}

GraphPolynomial poly_from_covering(const Graph& g, const TotalCliqueCovering& s) {
  if (!is_total_clique_covering(g, s)) throw InputError("not a total clique covering of the graph");
  const auto bearing = prime_bearing_cliques(g, s);
  std::vector<std::vector<unsigned>> vars(g.vertex_count());
  for (std::size_t j = 0; j < bearing.size(); ++j) {
    for (Vertex v : s[bearing[j]]) vars[v].push_back(static_cast<unsigned>(j + 1));
  }
  GraphPolynomial p;
  for (auto& v : vars) p.add(Monomial(std::move(v)));
  return p;
}

GraphPolynomial poly_from_sequence(const CodingSequence& sequence) {
  const auto primes = nontrivial_primes(sequence);
  GraphPolynomial p;
  for (const auto& a : sequence.entries()) {
    std::vector<unsigned> vars;
    Natural rest = a;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (rest % primes[i] != 0) continue;
      rest /= primes[i];
      if (rest % primes[i] == 0) throw InputError("entry " + a.str() + " is not square-free");
      vars.push_back(static_cast<unsigned>(i + 1));
    }
    p.add(Monomial(std::move(vars)));
  }
  return p;
}

GraphPolynomial canonical_polynomial(const Graph& g, SearchBudget budget) {
  return poly_from_sequence(code(g, budget));
}

GraphPolynomial divisor_graph_polynomial_closed_form(std::uint64_t n) {
  if (n < 2) throw InputError("divisor graph needs n >= 2");
  std::vector<std::uint64_t> exponents;
  for (const auto& pp : factorize(Natural(n))) exponents.push_back(pp.exponent);
  std::sort(exponents.rbegin(), exponents.rend());

  GraphPolynomial p;
  if (exponents.size() == 1 && exponents.front() == 1) {
    p.add(Monomial{});
    return p;
  }
  const std::size_t k = exponents.size();
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << k); ++subset) {
    std::vector<unsigned> vars;
    std::uint64_t coefficient = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (subset & (std::uint64_t{1} << i)) {
        vars.push_back(static_cast<unsigned>(i + 1));
        coefficient *= exponents[i];
      }
    }
    p.add(Monomial(std::move(vars)), coefficient);
  }
  return p;
}

FamilyForm closed_form_family(Family family, std::size_t n) {
  const auto primes = first_primes(n + 1);
  auto prime = [&](std::size_t i) { return Natural(primes[i - 1]); };  // 1-based
  auto x = [](std::size_t i) { return static_cast<unsigned>(i); };

  std::vector<Natural> entries;
  GraphPolynomial poly;
  switch (family) {
    case Family::kEmpty:
      if (n < 1) throw InputError("edgeless family needs n >= 1");
      entries.assign(n, 1);
      poly.add(Monomial{}, n);
      break;
    case Family::kComplete:
      if (n < 1) throw InputError("complete family needs n >= 1");
      if (n == 1) {
        entries = {1};
        poly.add(Monomial{});
      } else {
        entries.assign(n, 2);
        poly.add(Monomial{1}, n);
      }
      break;
    case Family::kPath:
      if (n < 3) throw InputError("path family needs n >= 3");
      entries = {prime(1), prime(2)};
      poly.add(Monomial{1});
      poly.add(Monomial{2});
      for (std::size_t i = 1; i + 3 <= n; ++i) {
        entries.push_back(prime(i) * prime(i + 2));
        poly.add(Monomial{x(i), x(i + 2)});
      }
      entries.push_back(prime(n - 2) * prime(n - 1));
      poly.add(Monomial{x(n - 2), x(n - 1)});
      break;
    case Family::kCycle:
      if (n < 4) throw InputError("cycle family needs n >= 4");
      entries = {prime(1) * prime(2)};
      poly.add(Monomial{1, 2});
      for (std::size_t i = 1; i + 2 <= n; ++i) {
        entries.push_back(prime(i) * prime(i + 2));
        poly.add(Monomial{x(i), x(i + 2)});
      }
      entries.push_back(prime(n - 1) * prime(n));
      poly.add(Monomial{x(n - 1), x(n)});
      break;
  }
  std::sort(entries.begin(), entries.end());
  return {CodingSequence(std::move(entries)), std::move(poly)};
}

bool detect_disconnected_poly(const GraphPolynomial& p) {
  const unsigned k = p.variable_count();
  DisjointSets sets(k + 1);
  for (const auto& [m, c] : p.terms()) {
    if (m.is_constant()) continue;
    for (unsigned v : m.variables()) sets.unite(v, m.variables().front());
  }
  std::vector<bool> root(k + 1, false);
  std::size_t components = 0;
  for (const auto& [m, c] : p.terms()) {
    if (m.is_constant()) continue;
    const unsigned r = sets.find(m.variables().front());
    if (!root[r]) {
      root[r] = true;
      ++components;
    }
  }
  return components + p.constant_term() >= 2;
}

bool detect_bipartite_poly(const GraphPolynomial& p) {
  // Constant copies never conflict; three copies of one monomial always do.
  std::vector<Monomial> copies;
  for (const auto& [m, c] : p.terms()) {
    if (m.is_constant()) continue;
    if (c >= 3) return false;
    for (std::uint64_t i = 0; i < c; ++i) copies.push_back(m);
  }
  std::vector<int> side(copies.size(), -1);
  for (std::size_t root = 0; root < copies.size(); ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < copies.size(); ++b) {
        if (b == a || !copies[a].shares_variable(copies[b])) continue;
        if (side[b] == -1) {
          side[b] = 1 - side[a];
          stack.push_back(b);
        } else if (side[b] == side[a]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::string render(const GraphPolynomial& p) {
  if (p.terms().empty()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    std::string term;
    if (m.is_constant() || c != 1) term = std::to_string(c);
    for (unsigned v : m.variables()) {
      if (!term.empty()) term += '*';
      term += 'x' + std::to_string(v);
    }
    out += term;
  }
  return out;
}

GraphPolynomial parse_polynomial(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty polynomial");
  GraphPolynomial p;
  if (text == "0") return p;
  for (auto term : split(text, '+')) {
    if (term.empty()) throw ParseError("empty term in polynomial");
    std::uint64_t coefficient = 1;
    bool have_number = false;
    std::vector<unsigned> vars;
    for (auto factor : split(term, '*')) {
      if (factor.empty()) throw ParseError("empty factor in polynomial term");
      if (factor.front() == 'x') {
        const auto index = parse_u64(factor.substr(1));
        if (index == 0) throw ParseError("variables are numbered from x1");
        vars.push_back(static_cast<unsigned>(index));
      } else {
        if (have_number) throw ParseError("more than one coefficient in a term");
        coefficient = parse_u64(factor);
        have_number = true;
      }
    }
    if (coefficient == 0) throw ParseError("zero coefficient");
    try {
      p.add(Monomial(std::move(vars)), coefficient);
    } catch (const InputError& e) {
      throw ParseError(e.what());
    }
  }
  return p;
}

}  // namespace cliquecode
