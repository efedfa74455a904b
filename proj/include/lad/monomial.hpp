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
#include <vector>

#include "lad/errors.hpp"

namespace lad {

// A monomial in a fixed number of variables: dense exponent vector with the
// total degree cached. Exponents are 32-bit; products check for overflow.
class Monomial {
 public:
  explicit Monomial(std::vector<std::uint32_t> exps)
      : e_(std::move(exps)), deg_(0) {
    for (std::uint32_t x : e_) deg_ += x;
  }

  static Monomial one(std::size_t nvars) {
    return Monomial(std::vector<std::uint32_t>(nvars, 0));
  }

  static Monomial var(std::size_t nvars, std::size_t i,
                      std::uint32_t e = 1) {
    std::vector<std::uint32_t> v(nvars, 0);
    v[i] = e;
    return Monomial(std::move(v));
  }

  std::size_t nvars() const { return e_.size(); }
  std::uint64_t degree() const { return deg_; }
  std::uint32_t exp(std::size_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }
  bool is_one() const { return deg_ == 0; }

  Monomial mul(const Monomial& o) const {
    std::vector<std::uint32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      std::uint64_t s = static_cast<std::uint64_t>(e_[i]) + o.e_[i];
      if (s > 0xffffffffull)
        throw ResourceExceeded("monomial exponent overflows 32 bits");
      r[i] = static_cast<std::uint32_t>(s);
    }
    return Monomial(std::move(r));
  }

  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  // Pre: this divides o.
  Monomial divide_into(const Monomial& o) const {
    std::vector<std::uint32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = o.e_[i] - e_[i];
    return Monomial(std::move(r));
  }

  Monomial lcm(const Monomial& o) const {
    std::vector<std::uint32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
      r[i] = e_[i] > o.e_[i] ? e_[i] : o.e_[i];
    return Monomial(std::move(r));
  }

  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
  }

  Monomial pow(std::uint32_t k) const {
    std::vector<std::uint32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      std::uint64_t s = static_cast<std::uint64_t>(e_[i]) * k;
      if (s > 0xffffffffull)
        throw ResourceExceeded("monomial exponent overflows 32 bits");
      r[i] = static_cast<std::uint32_t>(s);
    }
    return Monomial(std::move(r));
  }

  // Index of the unique variable with positive exponent, or -1.
  int pure_power_var() const {
    int found = -1;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] > 0) {
        if (found >= 0) return -1;
        found = static_cast<int>(i);
      }
    }
    return found;
  }

  std::uint64_t support_mask() const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > 0) m |= 1ull << i;
    return m;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  std::vector<std::uint32_t> e_;
  std::uint64_t deg_;
};

enum class OrderKind { degrevlex, lex };

// Three-way comparison in the given global order: positive when a > b.
// Variables are ordered by index (index 0 is the biggest variable).
inline int mono_compare(const Monomial& a, const Monomial& b, OrderKind k) {
  switch (k) {
    case OrderKind::degrevlex: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
      }
      return 0;
    }
    case OrderKind::lex: {
      for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
      }
      return 0;
    }
  }
  return 0;
}

inline bool mono_less(const Monomial& a, const Monomial& b, OrderKind k) {
  return mono_compare(a, b, k) < 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t e : m.exponents()) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Binomial coefficient with overflow check (counts of monomials).
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > 0xffffffffffffffffull)
      throw ResourceExceeded("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

namespace detail {
inline void enumerate_rec(std::size_t nvars, std::size_t i, std::uint32_t left,
                          std::vector<std::uint32_t>& cur,
                          std::vector<Monomial>& out) {
  if (i + 1 == nvars) {
    cur[i] = left;
    out.push_back(Monomial(cur));
    return;
  }
  for (std::uint32_t e = 0; e <= left; ++e) {
    cur[i] = e;
    enumerate_rec(nvars, i + 1, left - e, cur, out);
  }
}
}  // namespace detail

// All monomials of exact total degree d, in a fixed deterministic order.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars,
                                                 std::uint32_t d) {
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(binomial(d + nvars - 1, nvars - 1)));
  std::vector<std::uint32_t> cur(nvars, 0);
  detail::enumerate_rec(nvars, 0, d, cur, out);
  return out;
}

}  // namespace lad
