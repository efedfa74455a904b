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

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

#include "lad/limits.hpp"
#include "lad/polynomial.hpp"

namespace lad {

// A reduced Groebner basis: monic generators, fully inter-reduced, sorted by
// ascending leading monomial. This form is unique for the ideal and order,
// so equal ideals compare equal as bases.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> gens;

  bool is_zero_ideal() const { return gens.empty(); }
  bool is_unit_ideal() const {
    return gens.size() == 1 && gens[0].is_constant() && !gens[0].is_zero();
  }
};

// Full reduction: every term of the result is outside the leading-term
// ideal of G. G's generators must be monic.
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  Polynomial rem(f.ring());
  Polynomial work = f;
  while (!work.is_zero()) {
    const Monomial& u = work.leading_monomial();
    const Polynomial* divisor = nullptr;
    for (const Polynomial& g : G.gens) {
      if (g.leading_monomial().divides(u)) {
        divisor = &g;
        break;
      }
    }
    if (divisor != nullptr) {
      Monomial q = divisor->leading_monomial().divide_into(u);
      work = work - divisor->term_multiplied(work.leading_coeff(), q);
    } else {
      Polynomial lead =
          Polynomial::term(f.ring(), work.leading_coeff(), u);
      rem = rem + lead;
      work = work - lead;
    }
  }
  return rem;
}

inline bool in_ideal(const Polynomial& f, const GroebnerBasis& G) {
  return normal_form(f, G).is_zero();
}

namespace detail {

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  // Both inputs monic.
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial a = f.term_multiplied(1, f.leading_monomial().divide_into(l));
  Polynomial b = g.term_multiplied(1, g.leading_monomial().divide_into(l));
  return a - b;
}

}  // namespace detail

// Buchberger's algorithm with the normal selection strategy (smallest lcm in
// the active order), the coprime-leading-monomial criterion and the chain
// criterion, followed by inter-reduction to the canonical reduced basis.
inline GroebnerBasis buchberger(const RingPtr& ring,
                                const std::vector<Polynomial>& generators,
                                const Limits& limits = {}) {
  std::vector<Polynomial> basis;
  auto unit_basis = [&]() {
    return GroebnerBasis{ring, {Polynomial::constant(ring, 1)}};
  };

  for (const Polynomial& g : generators) {
    if (!same_ring(g.ring(), ring))
      throw SemanticError("buchberger: generator from a different ring");
    if (g.is_zero()) continue;
    if (g.is_constant()) return unit_basis();
    basis.push_back(g.monic());
  }

  struct Pair {
    Monomial lcm;
    std::size_t i, j;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    int c = mono_compare(a.lcm, b.lcm, ring->order);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<Pair, decltype(pair_less)> pending(pair_less);
  std::unordered_set<std::uint64_t> pending_keys;
  auto key = [](std::size_t i, std::size_t j) {
    return (static_cast<std::uint64_t>(i) << 32) | j;
  };

  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial& a = basis[i].leading_monomial();
      const Monomial& b = basis[j].leading_monomial();
      if (a.coprime(b)) continue;  // S-polynomial reduces to zero
      if (basis[i].terms().size() == 1 && basis[j].terms().size() == 1)
        continue;  // two monomials: S-polynomial is identically zero
      pending.insert(Pair{a.lcm(b), i, j});
      pending_keys.insert(key(i, j));
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  GroebnerBasis working{ring, basis};
  while (!pending.empty()) {
    Pair pr = *pending.begin();
    pending.erase(pending.begin());
    pending_keys.erase(key(pr.i, pr.j));

    // Chain criterion: skip when some other basis element divides the lcm
    // and both companion pairs are already treated.
    bool chained = false;
    for (std::size_t k = 0; k < working.gens.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!working.gens[k].leading_monomial().divides(pr.lcm)) continue;
      std::uint64_t k1 = key(std::min(pr.i, k), std::max(pr.i, k));
      std::uint64_t k2 = key(std::min(pr.j, k), std::max(pr.j, k));
      if (pending_keys.count(k1) == 0 && pending_keys.count(k2) == 0)
        chained = true;
    }
    if (chained) continue;

    Polynomial s = detail::s_polynomial(working.gens[pr.i], working.gens[pr.j]);
    Polynomial r = normal_form(s, working);
    if (r.is_zero()) continue;
    if (r.is_constant()) return unit_basis();
    if (r.leading_monomial().degree() > limits.gb_degree_cap)
      throw ResourceExceeded(
          "groebner basis element exceeds the leading-degree cap (" +
          std::to_string(limits.gb_degree_cap) + ")");
    working.gens.push_back(r.monic());
    if (working.gens.size() > limits.gb_basis_cap)
      throw ResourceExceeded("groebner basis exceeds the size cap (" +
                             std::to_string(limits.gb_basis_cap) + ")");
    std::size_t j = working.gens.size() - 1;
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial& a = working.gens[i].leading_monomial();
      const Monomial& b = working.gens[j].leading_monomial();
      if (a.coprime(b)) continue;
      if (working.gens[i].terms().size() == 1 &&
          working.gens[j].terms().size() == 1)
        continue;
      pending.insert(Pair{a.lcm(b), i, j});
      pending_keys.insert(key(i, j));
    }
  }

  // Minimalize: drop generators whose leading monomial is divisible by
  // another kept one.
  std::vector<Polynomial> minimal;
  std::sort(working.gens.begin(), working.gens.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return mono_compare(a.leading_monomial(), b.leading_monomial(),
                                  ring->order) < 0;
            });
  for (const Polynomial& g : working.gens) {
    bool redundant = false;
    for (const Polynomial& h : minimal) {
      if (h.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g);
  }

  // Tail-reduce each generator against the others; leading terms are
  // untouched because the minimal leading monomials are incomparable.
  GroebnerBasis result{ring, {}};
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    GroebnerBasis others{ring, {}};
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.gens.push_back(minimal[j]);
    result.gens.push_back(normal_form(minimal[i], others).monic());
  }
  std::sort(result.gens.begin(), result.gens.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return mono_compare(a.leading_monomial(), b.leading_monomial(),
                                  ring->order) < 0;
            });
  return result;
}

inline bool same_basis(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (!same_ring(a.ring, b.ring) || a.gens.size() != b.gens.size())
    return false;
  for (std::size_t i = 0; i < a.gens.size(); ++i)
    if (a.gens[i] != b.gens[i]) return false;
  return true;
}

namespace detail {

// Histogram of the standard monomials of a monomial ideal given by minimal
// generators: hist[d] = number of standard monomials of total degree d.
// Recursion over variables, grouping equal restricted generator lists.
class StaircaseCounter {
 public:
  explicit StaircaseCounter(std::size_t nvars) : nvars_(nvars) {}

  std::vector<std::uint64_t> histogram(
      std::vector<std::vector<std::uint32_t>> gens) {
    minimalize(gens);
    return rec(std::move(gens), 0);
  }

 private:
  std::size_t nvars_;
  std::map<std::pair<std::size_t, std::vector<std::uint32_t>>,
           std::vector<std::uint64_t>>
      memo_;

  static void checked_add(std::uint64_t& a, std::uint64_t b) {
    if (a > 0xffffffffffffffffull - b)
      throw ResourceExceeded("staircase count overflows 64 bits");
    a += b;
  }

  static void minimalize(std::vector<std::vector<std::uint32_t>>& L) {
    std::vector<std::vector<std::uint32_t>> kept;
    std::sort(L.begin(), L.end());
    L.erase(std::unique(L.begin(), L.end()), L.end());
    for (const auto& g : L) {
      bool dominated = false;
      for (const auto& h : L) {
        if (&h == &g) continue;
        bool divides = true;
        for (std::size_t i = 0; i < g.size(); ++i)
          if (h[i] > g[i]) {
            divides = false;
            break;
          }
        if (divides) {  // h strictly divides g: duplicates were removed
          dominated = true;
          break;
        }
      }
      if (!dominated) kept.push_back(g);
    }
    L.swap(kept);
  }

  // Generators restricted to variables level.. ; exponent vectors are kept
  // full-length with the consumed prefix zeroed for simple memo keys.
  std::vector<std::uint64_t> rec(std::vector<std::vector<std::uint32_t>> L,
                                 std::size_t level) {
    for (const auto& g : L) {
      bool all_zero = true;
      for (std::size_t i = level; i < nvars_; ++i)
        if (g[i] != 0) {
          all_zero = false;
          break;
        }
      if (all_zero) return {};  // unit ideal: no standard monomials
    }
    if (level == nvars_) return {1};

    std::vector<std::uint32_t> flat;
    flat.reserve(L.size() * (nvars_ - level));
    for (const auto& g : L)
      for (std::size_t i = level; i < nvars_; ++i) flat.push_back(g[i]);
    auto memo_key = std::make_pair(level, std::move(flat));
    auto hit = memo_.find(memo_key);
    if (hit != memo_.end()) return hit->second;

    // Upper bound on the exponent of the level variable: the least pure
    // power of it among the generators (infinite when none exists).
    std::uint64_t bound = 0;
    bool has_bound = false;
    for (const auto& g : L) {
      bool pure = g[level] > 0;
      for (std::size_t i = level + 1; i < nvars_ && pure; ++i)
        if (g[i] != 0) pure = false;
      if (pure && (!has_bound || g[level] < bound)) {
        bound = g[level];
        has_bound = true;
      }
    }
    if (!has_bound)
      throw ResourceExceeded(
          "staircase histogram on a positive-dimensional ideal");

    std::vector<std::uint32_t> thresholds{0};
    for (const auto& g : L)
      if (g[level] > 0 && g[level] < bound) thresholds.push_back(g[level]);
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                     thresholds.end());

    std::vector<std::uint64_t> hist;
    for (std::size_t k = 0; k < thresholds.size(); ++k) {
      std::uint32_t lo = thresholds[k];
      std::uint64_t hi =
          (k + 1 < thresholds.size()) ? thresholds[k + 1] : bound;
      std::vector<std::vector<std::uint32_t>> restricted;
      for (const auto& g : L) {
        if (g[level] <= lo) {
          auto h = g;
          h[level] = 0;
          restricted.push_back(std::move(h));
        }
      }
      minimalize(restricted);
      std::vector<std::uint64_t> inner = rec(std::move(restricted), level + 1);
      if (inner.empty()) continue;
      std::size_t need = static_cast<std::size_t>(hi - 1) + inner.size();
      if (need > (1u << 22))
        throw ResourceExceeded("staircase histogram exceeds the degree cap");
      if (hist.size() < need) hist.resize(need, 0);
      for (std::uint64_t e = lo; e < hi; ++e)
        for (std::size_t d = 0; d < inner.size(); ++d)
          checked_add(hist[static_cast<std::size_t>(e) + d], inner[d]);
    }
    memo_.emplace(std::move(memo_key), hist);
    return hist;
  }
};

inline std::vector<std::vector<std::uint32_t>> leading_exponents(
    const GroebnerBasis& G) {
  std::vector<std::vector<std::uint32_t>> L;
  L.reserve(G.gens.size());
  for (const Polynomial& g : G.gens)
    L.push_back(g.leading_monomial().exponents());
  return L;
}

}  // namespace detail

// True when the quotient is finite-dimensional: every variable shows up as a
// pure power among the leading monomials.
inline bool staircase_is_finite(const GroebnerBasis& G) {
  if (G.is_unit_ideal()) return true;
  const std::size_t n = G.ring->nvars();
  std::vector<bool> seen(n, false);
  for (const Polynomial& g : G.gens) {
    int v = g.leading_monomial().pure_power_var();
    if (v >= 0) seen[static_cast<std::size_t>(v)] = true;
  }
  for (bool b : seen)
    if (!b) return false;
  return true;
}

// Degree histogram of the standard monomials (finite case only).
inline std::vector<std::uint64_t> staircase_histogram(const GroebnerBasis& G) {
  if (G.is_unit_ideal()) return {};
  return detail::StaircaseCounter(G.ring->nvars())
      .histogram(detail::leading_exponents(G));
}

// Number of standard monomials, or nullopt when the quotient is infinite
// dimensional. Counts are computed recursively, never by materializing.
inline std::optional<std::uint64_t> staircase_count(const GroebnerBasis& G) {
  if (G.is_unit_ideal()) return 0;
  if (!staircase_is_finite(G)) return std::nullopt;
  std::uint64_t total = 0;
  for (std::uint64_t h : staircase_histogram(G)) {
    if (total > 0xffffffffffffffffull - h)
      throw ResourceExceeded("staircase count overflows 64 bits");
    total += h;
  }
  return total;
}

// Krull dimension of the quotient by the leading-term ideal: the largest set
// of variables that meets no leading-monomial support. Throws on the unit
// ideal (the zero ring has no dimension).
inline std::size_t krull_dim_leading(const GroebnerBasis& G) {
  if (G.is_unit_ideal())
    throw UndefinedDimension("krull dimension of the zero ring");
  const std::size_t n = G.ring->nvars();
  if (n > 24) throw ResourceExceeded("krull_dim_leading: too many variables");
  std::vector<std::uint64_t> supports;
  supports.reserve(G.gens.size());
  for (const Polynomial& g : G.gens)
    supports.push_back(g.leading_monomial().support_mask());
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    bool independent = true;
    for (std::uint64_t s : supports) {
      if ((s & ~mask) == 0) {  // support contained in the candidate set
        independent = false;
        break;
      }
    }
    if (independent) {
      std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
      if (size > best) best = size;
    }
  }
  return best;
}

namespace detail {

// Exact division h / g for h in the principal ideal (g); any global order.
inline Polynomial exact_divide(const Polynomial& h, const Polynomial& g) {
  Polynomial q(h.ring());
  Polynomial r = h;
  const PrimeField& F = h.ring()->field;
  std::uint32_t glc_inv = F.inv(g.leading_coeff());
  while (!r.is_zero()) {
    if (!g.leading_monomial().divides(r.leading_monomial()))
      throw ValidationFailed("exact_divide: remainder is not divisible");
    Monomial m = g.leading_monomial().divide_into(r.leading_monomial());
    std::uint32_t c = F.mul(r.leading_coeff(), glc_inv);
    q = q + Polynomial::term(h.ring(), c, m);
    r = r - g.term_multiplied(c, m);
  }
  return q;
}

}  // namespace detail

// Ideal quotient (I : g) via intersection with the principal ideal (g),
// computed by eliminating an auxiliary variable under lex. Returns a reduced
// basis in the original ring and order.
inline GroebnerBasis ideal_quotient(const GroebnerBasis& I,
                                    const Polynomial& g,
                                    const Limits& limits = {}) {
  if (g.is_zero())
    throw ValidationFailed("ideal_quotient: divisor polynomial is zero");
  if (g.is_constant()) return I;
  const RingPtr& ring = I.ring;
  std::vector<std::string> ext_vars;
  ext_vars.reserve(ring->nvars() + 1);
  ext_vars.push_back("@t");
  for (const std::string& v : ring->vars) ext_vars.push_back(v);
  RingPtr ext = std::make_shared<const PolyRing>(
      PolyRing{ring->field, std::move(ext_vars), OrderKind::lex});

  auto lift = [&](const Polynomial& f, bool with_t) {
    std::vector<Term> terms;
    for (const Term& t : f.terms()) {
      std::vector<std::uint32_t> e;
      e.reserve(ext->nvars());
      e.push_back(with_t ? 1u : 0u);
      for (std::size_t i = 0; i < ring->nvars(); ++i)
        e.push_back(t.mono.exp(i));
      terms.push_back(Term{t.coeff, Monomial(std::move(e))});
    }
    return Polynomial::from_terms(ext, std::move(terms));
  };

  std::vector<Polynomial> ext_gens;
  for (const Polynomial& f : I.gens) ext_gens.push_back(lift(f, true));
  ext_gens.push_back(lift(g, false) - lift(g, true));  // (1 - t) g

  GroebnerBasis ext_gb = buchberger(ext, ext_gens, limits);

  std::vector<Polynomial> quotient_gens;
  for (const Polynomial& f : ext_gb.gens) {
    if (f.leading_monomial().exp(0) != 0) continue;  // involves @t
    std::vector<Term> terms;
    for (const Term& t : f.terms()) {
      std::vector<std::uint32_t> e(t.mono.exponents().begin() + 1,
                                   t.mono.exponents().end());
      terms.push_back(Term{t.coeff, Monomial(std::move(e))});
    }
    Polynomial member = Polynomial::from_terms(ring, std::move(terms));
    quotient_gens.push_back(detail::exact_divide(member, g));
  }
  return buchberger(ring, quotient_gens, limits);
}

}  // namespace lad
