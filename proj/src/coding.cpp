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

#include "cliquecode/coding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "assignment_search.hpp"
#include "cliquecode/oracle.hpp"

namespace cliquecode {
namespace {

// Largest k whose primorial fits in 64 bits.
constexpr std::size_t kSmallLabelLimit = 15;

enum class Route { kAuto, kBranchAndBound, kExhaustive };

struct Outcome {
  std::vector<Natural> labels;
  std::vector<std::size_t> ranks;
  std::size_t source = 0;
};

void require_covering(const Graph& g, const TotalCliqueCovering& s) {
  if (!is_total_clique_covering(g, s)) {
    throw InputError("not a total clique covering of the graph");
  }
}

detail::AssignmentProblem make_problem(const Graph& g, const TotalCliqueCovering& s) {
  detail::AssignmentProblem p;
  p.vertex_count = g.vertex_count();
  p.membership.resize(g.vertex_count());
  for (std::size_t pos : prime_bearing_cliques(g, s)) {
    const std::size_t id = p.cliques.size();
    p.cliques.emplace_back(s[pos].begin(), s[pos].end());
    for (Vertex v : s[pos]) p.membership[v].push_back(id);
  }
  return p;
}

template <class Label>
Outcome least_assignment_with(const std::vector<detail::AssignmentProblem>& problems, Route route,
                              SearchBudget budget) {
  NodeCounter nodes(budget);
  detail::Incumbent<Label> best;
  for (std::size_t i = 0; i < problems.size(); ++i) {
    detail::LexMinSearch<Label> search(problems[i], nodes, i);
    const bool exhaustive =
        route == Route::kExhaustive ||
        (route == Route::kAuto && problems[i].clique_count() <= kExhaustiveAssignmentLimit);
    if (exhaustive) {
      search.exhaustive(best);
    } else {
      search.branch_and_bound(best);
    }
  }
  Outcome out;
  out.labels.assign(best.labels.begin(), best.labels.end());
  out.ranks = best.ranks;
  out.source = best.source;
  return out;
}

Outcome least_assignment(const std::vector<detail::AssignmentProblem>& problems, Route route,
                         SearchBudget budget) {
  const std::size_t k = problems.front().clique_count();
  for (const auto& p : problems) {
    if (p.clique_count() != k) throw InputError("coverings disagree on the clique count");
  }
  if (k <= kSmallLabelLimit) return least_assignment_with<std::uint64_t>(problems, route, budget);
  return least_assignment_with<Natural>(problems, route, budget);
}

CodingSequence sigma_via(const Graph& g, const TotalCliqueCovering& s, Route route,
                         SearchBudget budget) {
  require_covering(g, s);
  return CodingSequence(least_assignment({make_problem(g, s)}, route, budget).labels);
}

// The first `count` products of `primes` in graded lexicographic order:
// 1, q1, q2, ..., q1^2, q1*q2, ..., q2^2, ...
std::vector<Natural> multiplier_stream(const std::vector<Natural>& primes, std::size_t count) {
  std::vector<Natural> out;
  std::vector<std::size_t> tuple;
  auto emit = [&](auto&& self, std::size_t degree, std::size_t from) -> void {
    if (out.size() >= count) return;
    if (tuple.size() == degree) {
      Natural product = 1;
      for (std::size_t i : tuple) product *= primes[i];
      out.push_back(std::move(product));
      return;
    }
    for (std::size_t i = from; i < primes.size(); ++i) {
      tuple.push_back(i);
      self(self, degree, i);
      tuple.pop_back();
    }
  };
  for (std::size_t degree = 0; out.size() < count; ++degree) emit(emit, degree, 0);
  return out;
}

}  // namespace

PrimeAssignment::PrimeAssignment(std::vector<std::size_t> ranks) : ranks_(std::move(ranks)) {
  std::vector<bool> seen(ranks_.size(), false);
  for (std::size_t r : ranks_) {
    if (r >= ranks_.size() || seen[r]) {
      throw InputError("prime assignment must use each of the first k primes once");
    }
    seen[r] = true;
  }
}

PrimeAssignment PrimeAssignment::identity(std::size_t k) {
  std::vector<std::size_t> ranks(k);
  std::iota(ranks.begin(), ranks.end(), std::size_t{0});
  return PrimeAssignment(std::move(ranks));
}

PrimeAssignment PrimeAssignment::from_primes(std::span<const std::uint64_t> primes) {
  const auto table = first_primes(primes.size());
  std::vector<std::size_t> ranks;
  for (std::uint64_t p : primes) {
    const auto it = std::find(table.begin(), table.end(), p);
    if (it == table.end()) {
      throw InputError(std::to_string(p) + " is not one of the first " +
                       std::to_string(primes.size()) + " primes");
    }
    ranks.push_back(static_cast<std::size_t>(it - table.begin()));
  }
  return PrimeAssignment(std::move(ranks));
}

std::vector<std::uint64_t> PrimeAssignment::primes() const {
  const auto table = first_primes(ranks_.size());
  std::vector<std::uint64_t> out;
  for (std::size_t r : ranks_) out.push_back(table[r]);
  return out;
}

std::vector<Natural> covering_labels(const Graph& g, const TotalCliqueCovering& s,
                                     const PrimeAssignment& a) {
  require_covering(g, s);
  const auto bearing = prime_bearing_cliques(g, s);
  if (bearing.size() != a.size()) {
    throw InputError("prime assignment covers " + std::to_string(a.size()) + " cliques, covering has " +
                     std::to_string(bearing.size()));
  }
  const auto primes = a.primes();
  std::vector<Natural> labels(g.vertex_count(), 1);
  for (std::size_t i = 0; i < bearing.size(); ++i) {
    for (Vertex v : s[bearing[i]]) labels[v] *= primes[i];
  }
  return labels;
}

CodingSequence coding_sequence_from_covering(const Graph& g, const TotalCliqueCovering& s,
                                             const PrimeAssignment& a) {
  auto labels = covering_labels(g, s, a);
  std::sort(labels.begin(), labels.end());
  return CodingSequence(std::move(labels));
}

CodingSequence sigma_of_covering(const Graph& g, const TotalCliqueCovering& s,
                                 SearchBudget budget) {
  return sigma_via(g, s, Route::kAuto, budget);
}

CodingSequence sigma_of_covering_branch_and_bound(const Graph& g, const TotalCliqueCovering& s,
                                                  SearchBudget budget) {
  return sigma_via(g, s, Route::kBranchAndBound, budget);
}

CodingSequence sigma_of_covering_exhaustive(const Graph& g, const TotalCliqueCovering& s,
                                            SearchBudget budget) {
  return sigma_via(g, s, Route::kExhaustive, budget);
}

CodeResult compute_code(const Graph& g, SearchBudget budget) {
  if (g.vertex_count() == 0) throw InputError("code of the empty graph is undefined");
  auto minimum = minimum_total_coverings(g, budget);
  std::vector<detail::AssignmentProblem> problems;
  for (const auto& s : minimum.coverings) problems.push_back(make_problem(g, s));

  SearchBudget rest{budget.node_limit > minimum.nodes_explored
                        ? budget.node_limit - minimum.nodes_explored
                        : 0};
  auto outcome = least_assignment(problems, Route::kAuto, rest);

  CodeResult out;
  out.code = CodingSequence(std::move(outcome.labels));
  out.theta = minimum.theta;
  out.covering_count = minimum.coverings.size();
  out.covering = minimum.coverings[outcome.source];
  out.assignment = PrimeAssignment(std::move(outcome.ranks));
  return out;
}

CodingSequence code(const Graph& g, SearchBudget budget) { return compute_code(g, budget).code; }

bool is_isomorphic_by_code(const Graph& g1, const Graph& g2, SearchBudget budget) {
  if (g1.vertex_count() != g2.vertex_count()) return false;
  return code(g1, budget) == code(g2, budget);
}

DivisorEmbedding theorem1_labels(const Graph& g) {
  auto cliques = maximal_cliques(g);
  std::sort(cliques.begin(), cliques.end(), [](const Clique& a, const Clique& b) {
    if (a.front() != b.front()) return a.front() < b.front();
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return theorem1_labels(g, cliques);
}

DivisorEmbedding theorem1_labels(const Graph& g, std::span<const Clique> cliques) {
  if (g.vertex_count() == 0) throw InputError("theorem1_labels: empty graph");
  const TotalCliqueCovering covering(std::vector<Clique>(cliques.begin(), cliques.end()));
  require_covering(g, covering);

  const auto primes = first_primes(covering.size());
  std::vector<Natural> base(g.vertex_count(), 1);
  std::vector<std::vector<Natural>> factors(g.vertex_count());
  for (std::size_t i = 0; i < covering.size(); ++i) {
    for (Vertex v : covering[i]) {
      base[v] *= primes[i];
      factors[v].push_back(primes[i]);
    }
  }

  std::map<Natural, std::size_t> group_size;
  for (const auto& b : base) ++group_size[b];
  std::map<Natural, std::size_t> seen;

  DivisorEmbedding out{{g, std::vector<Natural>(g.vertex_count())}, 1};
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::size_t j = seen[base[v]]++;
    // factors[v] is ascending because clique i carries the i-th prime.
    const auto stream = multiplier_stream(factors[v], group_size[base[v]]);
    out.labeled.labels[v] = base[v] * stream[j];
    out.n = lcm(out.n, out.labeled.labels[v]);
  }
  return out;
}

bool is_divisor_embedding(const Graph& g, const DivisorEmbedding& embedding) {
  const auto& labels = embedding.labeled.labels;
  if (labels.size() != g.vertex_count()) return false;
  for (std::size_t u = 0; u < labels.size(); ++u) {
    if (labels[u] < 2 || embedding.n % labels[u] != 0) return false;
    for (std::size_t v = u + 1; v < labels.size(); ++v) {
      if (labels[u] == labels[v]) return false;
      const bool gcd_edge = gcd(labels[u], labels[v]) > 1;
      if (gcd_edge != g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) return false;
    }
  }
  return true;
}

bool validate_coding_sequence(const std::vector<Natural>& entries, const Graph& g,
                              SearchBudget budget) {
  if (!CodingSequence::is_well_formed(entries)) return false;
  if (entries.size() != g.vertex_count()) return false;
  return brute_force_isomorphic(realize_sequence(entries).graph, g, budget).verdict;
}

}  // namespace cliquecode
