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

#ifndef CLIQUECODE_CODING_SEQUENCE_HPP_
#define CLIQUECODE_CODING_SEQUENCE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cliquecode/natural.hpp"

namespace cliquecode {

/// Non-decreasing sequence of positive naturals that encodes a graph by gcd
/// adjacency.
///
/// Construction enforces the structural rules: the sequence is non-empty and
/// sorted, every entry above 1 is square-free, and every entry above 1
/// shares a prime with some other entry (isolated vertices are written as
/// leading 1's, never as a lone prime).
class CodingSequence {
 public:
  CodingSequence() = default;

  /// Throws InputError if `entries` breaks one of the structural rules.
  explicit CodingSequence(std::vector<Natural> entries);

  /// Parses `(a1,a2,...)`; surrounding whitespace and whitespace around
  /// entries are accepted. Throws ParseError / InputError.
  static CodingSequence parse(std::string_view text);

  /// Checks the structural rules without throwing.
  static bool is_well_formed(const std::vector<Natural>& entries);

  const std::vector<Natural>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const Natural& operator[](std::size_t i) const { return entries_[i]; }

  /// Number of leading 1's, i.e. isolated vertices.
  std::size_t trivial_count() const;

  /// Componentwise lexicographic order on equal-length sequences; shorter
  /// sequences order first.
  friend bool operator<(const CodingSequence& a, const CodingSequence& b);
  friend bool operator==(const CodingSequence& a, const CodingSequence& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Natural> entries_;
};

/// `(2,2,3)` form.
std::string to_string(const CodingSequence& sequence);

/// lcm of the entries above 1; 1 when there are none.
Natural lambda_of(const CodingSequence& sequence);

}  // namespace cliquecode

#endif  // CLIQUECODE_CODING_SEQUENCE_HPP_
