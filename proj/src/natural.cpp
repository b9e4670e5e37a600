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

#include "cliquecode/natural.hpp"

#include <cctype>

#include "cliquecode/errors.hpp"

namespace cliquecode {

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> primes;
  primes.reserve(count);
  for (std::uint64_t candidate = 2; primes.size() < count; ++candidate) {
    bool prime = true;
    for (std::uint64_t p : primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(candidate);
  }
  return primes;
}

std::uint64_t nth_prime(std::size_t n) {
  if (n == 0) throw InputError("nth_prime: index is 1-based");
  return first_primes(n).back();
}

std::vector<PrimePower> factorize(const Natural& n) {
  if (n < 1) throw InputError("factorize: argument must be positive");
  std::vector<PrimePower> out;
  Natural rest = n;
  auto divide_out = [&](const Natural& p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  divide_out(2);
  for (Natural p = 3; p * p <= rest; p += 2) divide_out(p);
  if (rest > 1) out.push_back({rest, 1});
  return out;
}

std::vector<Natural> prime_factors(const Natural& n) {
  std::vector<Natural> out;
  for (auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

bool is_square_free(const Natural& n) {
  for (const auto& pp : factorize(n)) {
    if (pp.exponent > 1) return false;
  }
  return true;
}

Natural gcd(const Natural& a, const Natural& b) {
  return boost::multiprecision::gcd(a, b);
}

Natural lcm(const Natural& a, const Natural& b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

Natural parse_natural(std::string_view text) {
  if (text.empty()) throw ParseError("expected a natural number, got ''");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("expected a natural number, got '" + std::string(text) +
                       "'");
    }
  }
  return Natural(std::string(text));
}

std::string to_string(const Natural& n) { return n.str(); }

}  // namespace cliquecode
