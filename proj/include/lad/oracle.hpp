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

// Brute-force colength by degree-truncated linear algebra. This module is an
// independent cross-check of the Groebner pipeline and deliberately shares no
// reduction code with it: everything here is plain Gaussian elimination over
// the monomial basis of k[x]/m^D.

#include <cstdint>
#include <deque>
#include <unordered_map>
#include <vector>

#include "lad/ideals.hpp"
#include "lad/limits.hpp"
#include "lad/polynomial.hpp"

namespace lad {

namespace oracle_detail {

// The monomials of degree < D, listed degree by degree, with multiply-by-x_j
// column shift tables (target column, or -1 when the product is truncated).
struct TruncatedBasis {
  std::vector<Monomial> cols;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  std::vector<std::vector<std::ptrdiff_t>> shift;  // [var][col]

  TruncatedBasis(std::size_t nvars, std::uint32_t D) {
    for (std::uint32_t d = 0; d < D; ++d)
      for (Monomial& m : monomials_of_degree(nvars, d))
        cols.push_back(std::move(m));
    index.reserve(cols.size() * 2);
    for (std::size_t c = 0; c < cols.size(); ++c) index.emplace(cols[c], c);
    shift.assign(nvars, std::vector<std::ptrdiff_t>(cols.size(), -1));
    for (std::size_t j = 0; j < nvars; ++j)
      for (std::size_t c = 0; c < cols.size(); ++c) {
        auto e = cols[c].exponents();
        e[j] += 1;
        auto hit = index.find(Monomial(std::move(e)));
        if (hit != index.end()) shift[j][c] = static_cast<std::ptrdiff_t>(hit->second);
      }
  }
};

// Row space over F_2, rows bitpacked into 64-bit words.
class RowSpaceGF2 {
 public:
  explicit RowSpaceGF2(std::size_t ncols)
      : ncols_(ncols), words_((ncols + 63) / 64) {}

  // Reduces the row in place; if nonzero, stores it and returns its index.
  std::ptrdiff_t insert(std::vector<std::uint64_t>& row) {
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (bit(row, pivot_[r]))
        for (std::size_t w = 0; w < words_; ++w) row[w] ^= rows_[r][w];
    std::ptrdiff_t p = first_set(row);
    if (p < 0) return -1;
    pivot_.push_back(static_cast<std::size_t>(p));
    rows_.push_back(row);
    return static_cast<std::ptrdiff_t>(rows_.size()) - 1;
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::uint64_t>& row(std::size_t r) const { return rows_[r]; }

  static bool bit(const std::vector<std::uint64_t>& row, std::size_t c) {
    return (row[c >> 6] >> (c & 63)) & 1u;
  }
  static void flip(std::vector<std::uint64_t>& row, std::size_t c) {
    row[c >> 6] ^= 1ull << (c & 63);
  }

 private:
  std::ptrdiff_t first_set(const std::vector<std::uint64_t>& row) const {
    for (std::size_t w = 0; w < words_; ++w)
      if (row[w] != 0)
        return static_cast<std::ptrdiff_t>(w * 64 +
                                           __builtin_ctzll(row[w]));
    return -1;
  }

  std::size_t ncols_, words_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivot_;
};

// Row space over F_p for general p, dense rows, pivot entries normalized to 1.
class RowSpaceDense {
 public:
  RowSpaceDense(std::size_t ncols, const PrimeField& field)
      : ncols_(ncols), field_(field) {}

  std::ptrdiff_t insert(std::vector<std::uint32_t>& row) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::uint32_t c = row[pivot_[r]];
      if (c == 0) continue;
      for (std::size_t k = 0; k < ncols_; ++k)
        row[k] = field_.sub(row[k], field_.mul(c, rows_[r][k]));
    }
    std::ptrdiff_t p = -1;
    for (std::size_t k = 0; k < ncols_; ++k)
      if (row[k] != 0) {
        p = static_cast<std::ptrdiff_t>(k);
        break;
      }
    if (p < 0) return -1;
    std::uint32_t inv = field_.inv(row[static_cast<std::size_t>(p)]);
    for (std::size_t k = 0; k < ncols_; ++k) row[k] = field_.mul(inv, row[k]);
    pivot_.push_back(static_cast<std::size_t>(p));
    rows_.push_back(row);
    return static_cast<std::ptrdiff_t>(rows_.size()) - 1;
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::uint32_t>& row(std::size_t r) const { return rows_[r]; }

 private:
  std::size_t ncols_;
  PrimeField field_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivot_;
};

// dim of k[x]/(ideal + m^D): columns minus the rank of the closure of the
// truncated generators under multiply-by-variable-then-truncate.
inline std::uint64_t truncated_dimension(const RingPtr& ring,
                                         const std::vector<Polynomial>& gens,
                                         std::uint32_t D,
                                         const Limits& limits) {
  const std::size_t nvars = ring->nvars();
  std::uint64_t ncols64 = binomial(static_cast<std::uint64_t>(D) - 1 + nvars,
                                   nvars);  // all degrees < D
  const bool packed = ring->field.modulus() == 2;
  const std::uint64_t cap =
      packed ? limits.oracle_column_cap : limits.oracle_dense_column_cap;
  if (ncols64 > cap)
    throw ResourceExceeded("oracle: " + std::to_string(ncols64) +
                           " columns at truncation degree " +
                           std::to_string(D) + " (cap " + std::to_string(cap) +
                           ")");
  TruncatedBasis basis(nvars, D);
  const std::size_t ncols = basis.cols.size();

  auto truncate = [&](const Polynomial& f, auto&& emit_entry) {
    for (const Term& t : f.terms())
      if (t.mono.degree() < D) {
        auto hit = basis.index.find(t.mono);
        emit_entry(hit->second, t.coeff);
      }
  };

  if (packed) {
    RowSpaceGF2 space(ncols);
    std::deque<std::size_t> work;
    for (const Polynomial& g : gens) {
      std::vector<std::uint64_t> row((ncols + 63) / 64, 0);
      truncate(g, [&](std::size_t c, std::uint32_t) {
        RowSpaceGF2::flip(row, c);
      });
      std::ptrdiff_t id = space.insert(row);
      if (id >= 0) work.push_back(static_cast<std::size_t>(id));
    }
    while (!work.empty()) {
      std::size_t r = work.front();
      work.pop_front();
      for (std::size_t j = 0; j < nvars; ++j) {
        std::vector<std::uint64_t> prod((ncols + 63) / 64, 0);
        std::vector<std::uint64_t> src = space.row(r);
        for (std::size_t c = 0; c < ncols; ++c) {
          if (!RowSpaceGF2::bit(src, c)) continue;
          std::ptrdiff_t to = basis.shift[j][c];
          if (to >= 0) RowSpaceGF2::flip(prod, static_cast<std::size_t>(to));
        }
        std::ptrdiff_t id = space.insert(prod);
        if (id >= 0) work.push_back(static_cast<std::size_t>(id));
      }
    }
    return ncols - space.rank();
  }

  RowSpaceDense space(ncols, ring->field);
  std::deque<std::size_t> work;
  for (const Polynomial& g : gens) {
    std::vector<std::uint32_t> row(ncols, 0);
    truncate(g, [&](std::size_t c, std::uint32_t coeff) {
      row[c] = ring->field.add(row[c], coeff);
    });
    std::ptrdiff_t id = space.insert(row);
    if (id >= 0) work.push_back(static_cast<std::size_t>(id));
  }
  while (!work.empty()) {
    std::size_t r = work.front();
    work.pop_front();
    for (std::size_t j = 0; j < nvars; ++j) {
      std::vector<std::uint32_t> prod(ncols, 0);
      std::vector<std::uint32_t> src = space.row(r);
      for (std::size_t c = 0; c < ncols; ++c) {
        if (src[c] == 0) continue;
        std::ptrdiff_t to = basis.shift[j][c];
        if (to >= 0)
          prod[static_cast<std::size_t>(to)] =
              ring->field.add(prod[static_cast<std::size_t>(to)], src[c]);
      }
      std::ptrdiff_t id = space.insert(prod);
      if (id >= 0) work.push_back(static_cast<std::size_t>(id));
    }
  }
  return ncols - space.rank();
}

}  // namespace oracle_detail

// Independent local colength: dim k[x]/(I + J + m^D) for D = 1, 2, ... until
// two consecutive values agree, which certifies the stable value exactly (the
// same Nakayama argument as the main pipeline, on independently computed
// numbers).
inline std::uint64_t oracle_colength(const LocalIdeal& J,
                                     std::uint32_t degree_cap = 64,
                                     const Limits& limits = {}) {
  const LocalRingPtr& R = J.ring;
  std::vector<Polynomial> combined = R->defining;
  combined.insert(combined.end(), J.gens.begin(), J.gens.end());

  std::uint64_t prev =
      oracle_detail::truncated_dimension(R->ambient, combined, 1, limits);
  for (std::uint32_t D = 2; D <= degree_cap; ++D) {
    std::uint64_t next =
        oracle_detail::truncated_dimension(R->ambient, combined, D, limits);
    limits.emit("oracle: truncation D=" + std::to_string(D) +
                " dim=" + std::to_string(next));
    if (next == prev) return prev;
    prev = next;
  }
  throw NotFiniteColength(
      "oracle colength did not stabilize by the degree cap D=" +
      std::to_string(degree_cap));
}

}  // namespace lad
