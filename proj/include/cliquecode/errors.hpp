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

#ifndef CLIQUECODE_ERRORS_HPP_
#define CLIQUECODE_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cliquecode {

// Malformed or out-of-contract input (bad ids, invalid sequences, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text that could not be parsed (graph files, polynomials, sequences).
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

// An exact search ran past its node limit. Never a partial answer.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t limit)
      : std::runtime_error("search budget of " + std::to_string(limit) +
                           " nodes exceeded"),
        limit_(limit) {}

  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
};

inline constexpr std::uint64_t kDefaultNodeLimit = 10'000'000;

// Caller-supplied limit on search nodes for a single operation.
struct SearchBudget {
  std::uint64_t node_limit = kDefaultNodeLimit;
};

// Counts search nodes against a budget and throws once it is exhausted.
class NodeCounter {
 public:
  explicit NodeCounter(SearchBudget budget) : limit_(budget.node_limit) {}

  void tick() {
    if (++count_ > limit_) throw BudgetExceeded(limit_);
  }

  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t limit_;
  std::uint64_t count_ = 0;
};

}  // namespace cliquecode

#endif  // CLIQUECODE_ERRORS_HPP_
