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

#include "cliquecode/coding_sequence.hpp"

#include <algorithm>

#include "cliquecode/errors.hpp"

namespace cliquecode {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Empty string when well formed, otherwise the reason.
std::string check(const std::vector<Natural>& entries) {
  if (entries.empty()) return "coding sequence is empty";
  for (const auto& a : entries) {
    if (a < 1) return "coding sequence entries must be positive";
  }
  if (!std::is_sorted(entries.begin(), entries.end())) {
    return "coding sequence is not non-decreasing";
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Natural& a = entries[i];
    if (a == 1) continue;
    if (!is_square_free(a)) return "entry " + a.str() + " is not square-free";
    bool shares = false;
    for (std::size_t j = 0; j < entries.size() && !shares; ++j) {
      shares = j != i && gcd(a, entries[j]) > 1;
    }
    if (!shares) return "entry " + a.str() + " realizes an isolated vertex; use 1";
  }
  return {};
}

}  // namespace

CodingSequence::CodingSequence(std::vector<Natural> entries)
    : entries_(std::move(entries)) {
  if (auto reason = check(entries_); !reason.empty()) throw InputError(reason);
}

bool CodingSequence::is_well_formed(const std::vector<Natural>& entries) {
  return check(entries).empty();
}

CodingSequence CodingSequence::parse(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw ParseError("coding sequence must look like (a1,a2,...)");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<Natural> entries;
  while (true) {
    const auto comma = text.find(',');
    entries.push_back(parse_natural(trim(text.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return CodingSequence(std::move(entries));
}

std::size_t CodingSequence::trivial_count() const {
  return static_cast<std::size_t>(
      std::count(entries_.begin(), entries_.end(), Natural(1)));
}

bool operator<(const CodingSequence& a, const CodingSequence& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(),
                                      b.entries_.begin(), b.entries_.end());
}

std::string to_string(const CodingSequence& sequence) {
  std::string out = "(";
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (i > 0) out += ',';
    out += sequence[i].str();
  }
  return out + ")";
}

Natural lambda_of(const CodingSequence& sequence) {
  Natural out = 1;
  for (const auto& a : sequence.entries()) {
    if (a > 1) out = lcm(out, a);
  }
  return out;
}

}  // namespace cliquecode
