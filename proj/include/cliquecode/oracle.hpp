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

// Brute-force ground truth for small graphs.
//
// Nothing here reuses the clique, covering or coding search code; only the
// Graph type is shared. Intended for graphs of at most ~9 vertices.

#ifndef CLIQUECODE_ORACLE_HPP_
#define CLIQUECODE_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cliquecode/errors.hpp"
#include "cliquecode/graph.hpp"
#include "cliquecode/natural.hpp"

namespace cliquecode {

struct OracleReport {
  bool verdict = false;
  /// For isomorphism: p with apply_permutation(g1, p) == g2.
  std::optional<Permutation> permutation;
  std::uint64_t nodes_explored = 0;
};

/// Tries vertex bijections degree class by degree class.
OracleReport brute_force_isomorphic(const Graph& g1, const Graph& g2, SearchBudget budget = {});

/// Minimum total clique coverings by plain subset search over every clique
/// (singletons included). Each covering is a sorted list of sorted cliques.
std::vector<std::vector<std::vector<Vertex>>> brute_force_minimum_coverings(
    const Graph& g, SearchBudget budget = {});

/// The code recomputed naively: every minimum covering, every assignment of
/// the first k primes by full factorial. Limited to 9 vertices.
std::vector<Natural> brute_force_code(const Graph& g, SearchBudget budget = {});

/// All 2^(n choose 2) graphs on vertices 0..n-1; edge bit b of the index
/// selects the b-th pair in lexicographic order.
void for_each_labeled_graph(std::size_t n, const std::function<void(const Graph&)>& visit);
std::vector<Graph> all_labeled_graphs(std::size_t n);

}  // namespace cliquecode

#endif  // CLIQUECODE_ORACLE_HPP_
