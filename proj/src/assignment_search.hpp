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

// Lexicographically least sorted labelling over prime assignments.
//
// Templated on the label scalar: std::uint64_t while the primorial of k fits,
// Natural beyond that. Every label, and every bound below, divides the
// product of the first k primes.

#ifndef CLIQUECODE_SRC_ASSIGNMENT_SEARCH_HPP_
#define CLIQUECODE_SRC_ASSIGNMENT_SEARCH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "cliquecode/errors.hpp"
#include "cliquecode/natural.hpp"

namespace cliquecode::detail {

struct AssignmentProblem {
  std::size_t vertex_count = 0;
  /// Vertices of each prime-bearing clique.
  std::vector<std::vector<std::size_t>> cliques;
  /// Prime-bearing cliques containing each vertex (empty for label 1).
  std::vector<std::vector<std::size_t>> membership;

  std::size_t clique_count() const { return cliques.size(); }
};

template <class Label>
struct Incumbent {
  bool valid = false;
  std::vector<Label> labels;        // sorted
  std::vector<std::size_t> ranks;   // prime rank per clique
  std::size_t source = 0;           // caller's tag for the covering
};

template <class Label>
int compare_labels(const std::vector<Label>& a, const std::vector<Label>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  return 0;
}

template <class Label>
class LexMinSearch {
 public:
  LexMinSearch(const AssignmentProblem& problem, NodeCounter& nodes, std::size_t source)
      : problem_(problem), nodes_(nodes), source_(source) {
    const std::size_t k = problem.clique_count();
    const auto raw = first_primes(k);
    primes_.assign(raw.begin(), raw.end());
    // span_[j][r] = p_j * p_{j+1} * ... * p_{j+r-1}
    span_.assign(k + 1, std::vector<Label>(k + 1, Label(1)));
    for (std::size_t j = 0; j <= k; ++j) {
      for (std::size_t r = 1; j + r <= k; ++r) span_[j][r] = span_[j][r - 1] * primes_[j + r - 1];
    }
  }

  /// Full k! enumeration. Returns true if `best` improved.
  bool exhaustive(Incumbent<Label>& best) {
    const std::size_t k = problem_.clique_count();
    std::vector<std::size_t> ranks(k);
    std::iota(ranks.begin(), ranks.end(), std::size_t{0});
    bool improved = false;
    do {
      nodes_.tick();
      std::vector<Label> labels(problem_.vertex_count, Label(1));
      for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t v : problem_.cliques[c]) labels[v] *= primes_[ranks[c]];
      }
      std::sort(labels.begin(), labels.end());
      improved |= offer(best, std::move(labels), ranks);
    } while (std::next_permutation(ranks.begin(), ranks.end()));
    return improved;
  }

  /// Assigns primes in ascending order, pruning any partial assignment whose
  /// sorted per-vertex lower bounds are not lexicographically below `best`.
  /// Returns true if `best` improved.
  bool branch_and_bound(Incumbent<Label>& best) {
    const std::size_t m = problem_.vertex_count;
    partial_.assign(m, Label(1));
    remaining_.assign(m, 0);
    for (std::size_t v = 0; v < m; ++v) remaining_[v] = problem_.membership[v].size();
    ranks_.assign(problem_.clique_count(), kUnassigned);
    improved_ = false;
    descend(0, best);
    return improved_;
  }

 private:
  static constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

  bool offer(Incumbent<Label>& best, std::vector<Label> labels,
             const std::vector<std::size_t>& ranks) {
    if (best.valid && compare_labels(labels, best.labels) >= 0) return false;
    best.valid = true;
    best.labels = std::move(labels);
    best.ranks = ranks;
    best.source = source_;
    return true;
  }

  void apply(std::size_t clique, std::size_t rank) {
    ranks_[clique] = rank;
    for (std::size_t v : problem_.cliques[clique]) {
      partial_[v] *= primes_[rank];
      --remaining_[v];
    }
  }

  void undo(std::size_t clique, std::size_t rank) {
    ranks_[clique] = kUnassigned;
    for (std::size_t v : problem_.cliques[clique]) {
      partial_[v] /= primes_[rank];
      ++remaining_[v];
    }
  }

  // Sorted lower bounds once primes 0..assigned-1 are placed: an unfinished
  // vertex still needs `remaining` distinct primes from p_assigned upwards.
  std::vector<Label> bound(std::size_t assigned) const {
    std::vector<Label> out(partial_.size());
    for (std::size_t v = 0; v < partial_.size(); ++v) {
      out[v] = remaining_[v] == 0 ? partial_[v] : partial_[v] * span_[assigned][remaining_[v]];
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Unassigned cliques a and b are twins when swapping them, together with
  // a label-preserving bijection between their private vertices, maps the
  // residual problem onto itself. Giving the next prime to either one then
  // leads to the same sorted labellings, so only one needs exploring.
  bool twins(std::size_t a, std::size_t b) const {
    const auto& ca = problem_.cliques[a];
    const auto& cb = problem_.cliques[b];
    if (ca.size() != cb.size()) return false;
    std::vector<Label> only_a, only_b;
    std::size_t i = 0, j = 0;
    while (i < ca.size() || j < cb.size()) {
      if (j == cb.size() || (i < ca.size() && ca[i] < cb[j])) {
        if (remaining_[ca[i]] != 1) return false;
        only_a.push_back(partial_[ca[i++]]);
      } else if (i == ca.size() || cb[j] < ca[i]) {
        if (remaining_[cb[j]] != 1) return false;
        only_b.push_back(partial_[cb[j++]]);
      } else {
        ++i;
        ++j;
      }
    }
    std::sort(only_a.begin(), only_a.end());
    std::sort(only_b.begin(), only_b.end());
    return only_a == only_b;
  }

  void descend(std::size_t assigned, Incumbent<Label>& best) {
    nodes_.tick();
    const std::size_t k = problem_.clique_count();
    if (assigned == k) {
      auto labels = partial_;
      std::sort(labels.begin(), labels.end());
      improved_ |= offer(best, std::move(labels), ranks_);
      return;
    }
    std::vector<std::pair<std::vector<Label>, std::size_t>> children;
    for (std::size_t c = 0; c < k; ++c) {
      if (ranks_[c] != kUnassigned) continue;
      bool twin = false;
      for (std::size_t d = 0; d < c && !twin; ++d) twin = ranks_[d] == kUnassigned && twins(d, c);
      if (twin) continue;
      apply(c, assigned);
      children.emplace_back(bound(assigned + 1), c);
      undo(c, assigned);
    }
    std::stable_sort(children.begin(), children.end(), [](const auto& a, const auto& b) {
      return compare_labels(a.first, b.first) < 0;
    });
    for (const auto& [child_bound, c] : children) {
      if (best.valid && compare_labels(child_bound, best.labels) >= 0) break;
      apply(c, assigned);
      descend(assigned + 1, best);
      undo(c, assigned);
    }
  }

  const AssignmentProblem& problem_;
  NodeCounter& nodes_;
  std::size_t source_;
  std::vector<Label> primes_;
  std::vector<std::vector<Label>> span_;
  std::vector<Label> partial_;
  std::vector<std::size_t> remaining_;
  std::vector<std::size_t> ranks_;
  bool improved_ = false;
};

}  // namespace cliquecode::detail

#endif  // CLIQUECODE_SRC_ASSIGNMENT_SEARCH_HPP_
