/*
   Copyright 2026 The lad authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>

#include "lad/errors.hpp"

namespace lad {

namespace detail {

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b,
                              std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod64(std::uint64_t a, std::uint64_t e,
                              std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

// Deterministic Miller-Rabin. The bases 2, 3, 5, 7 decide primality for all
// n below 3'215'031'751, which covers the full uint32 range we accept.
inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
    std::uint64_t x = detail::powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mulmod64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Arithmetic in F_p for a prime p < 2^31. Elements are residues in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 31) || !is_prime(p))
      throw SemanticError("field characteristic must be a prime below 2^31, got " +
                          std::to_string(p));
  }

  std::uint32_t modulus() const { return p_; }

  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    if (s >= p_) s -= p_;
    return static_cast<std::uint32_t>(s);
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : static_cast<std::uint32_t>(a + p_ - b);
  }

  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }

  // Extended Euclid; inverting zero is a hard error.
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p_));
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a % p_;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<std::uint32_t>(t);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    return static_cast<std::uint32_t>(detail::powmod64(a, e, p_));
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace lad
