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

// Unbounded naturals and the small amount of number theory the labels need.

#ifndef CLIQUECODE_NATURAL_HPP_
#define CLIQUECODE_NATURAL_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cliquecode {

using Natural = boost::multiprecision::cpp_int;

// The first `count` primes, ascending: 2, 3, 5, ...
std::vector<std::uint64_t> first_primes(std::size_t count);

// 1-based: nth_prime(1) == 2.
std::uint64_t nth_prime(std::size_t n);

struct PrimePower {
  Natural prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Trial-division factorization, primes ascending. factorize(1) is empty.
std::vector<PrimePower> factorize(const Natural& n);

// Distinct prime factors, ascending.
std::vector<Natural> prime_factors(const Natural& n);

bool is_square_free(const Natural& n);

Natural gcd(const Natural& a, const Natural& b);
Natural lcm(const Natural& a, const Natural& b);

// Decimal parse; rejects signs, empty input and non-digits.
Natural parse_natural(std::string_view text);

std::string to_string(const Natural& n);

}  // namespace cliquecode

#endif  // CLIQUECODE_NATURAL_HPP_
