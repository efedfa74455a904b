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
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lad/groebner.hpp"
#include "lad/limits.hpp"
#include "lad/polynomial.hpp"

namespace lad {

// A Noetherian local ring presented as F_p[x_1..x_s] localized at the origin
// modulo the ideal generated by `defining`. Every defining generator must lie
// in the maximal ideal (zero constant term), so the quotient is local with
// maximal ideal generated by the variable images.
struct LocalRing {
  RingPtr ambient;
  std::vector<Polynomial> defining;
  GroebnerBasis defining_gb;
};

using LocalRingPtr = std::shared_ptr<const LocalRing>;

inline LocalRingPtr make_local_ring(const RingPtr& ambient,
                                    std::vector<Polynomial> defining,
                                    const Limits& limits = {}) {
  for (const Polynomial& g : defining) {
    if (!same_ring(g.ring(), ambient))
      throw SemanticError("defining generator from a different ring");
    if (g.constant_term() != 0)
      throw ValidationFailed(
          "defining generator has a nonzero constant term (ideal not "
          "contained in the maximal ideal): " +
          g.to_string());
  }
  GroebnerBasis gb = buchberger(ambient, defining, limits);
  return std::make_shared<const LocalRing>(
      LocalRing{ambient, std::move(defining), std::move(gb)});
}

// An ideal of a presented local ring, inside the maximal ideal.
struct LocalIdeal {
  LocalRingPtr ring;
  std::vector<Polynomial> gens;
};

inline LocalIdeal make_local_ideal(const LocalRingPtr& ring,
                                   std::vector<Polynomial> gens) {
  for (const Polynomial& g : gens) {
    if (!same_ring(g.ring(), ring->ambient))
      throw SemanticError("ideal generator from a different ring");
    if (g.constant_term() != 0)
      throw ValidationFailed(
          "ideal generator has a nonzero constant term (not inside the "
          "maximal ideal): " +
          g.to_string());
  }
  return LocalIdeal{ring, std::move(gens)};
}

// The N-th power of the maximal ideal: all degree-N monomials.
inline LocalIdeal maximal_power(const LocalRingPtr& ring, std::uint32_t N) {
  if (N == 0) throw ValidationFailed("maximal_power: N must be positive");
  std::vector<Polynomial> gens;
  for (const Monomial& m : monomials_of_degree(ring->ambient->nvars(), N))
    gens.push_back(Polynomial::term(ring->ambient, 1, m));
  return LocalIdeal{ring, std::move(gens)};
}

namespace detail {

// Certificate that every variable is nilpotent modulo the ideal of G, given
// that the global quotient has finite vector-space dimension D. Nilpotency
// index is then at most D, so x is nilpotent iff x^(p^k) reduces to zero for
// the least k with p^k >= D; the chain r -> normal_form(r^p) computes those
// reductions with cheap Frobenius powers.
inline bool all_variables_nilpotent(const GroebnerBasis& G, std::uint64_t D) {
  const RingPtr& ring = G.ring;
  const std::uint64_t p = ring->field.modulus();
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    Polynomial r = normal_form(Polynomial::variable(ring, i), G);
    std::uint64_t reached = 1;  // r == normal form of x_i^reached
    while (!r.is_zero() && reached < D) {
      r = normal_form(r.pth_power(), G);
      reached = (reached > ~0ull / p) ? ~0ull : reached * p;
    }
    if (!r.is_zero()) return false;
  }
  return true;
}

inline std::uint64_t truncated_count(const LocalRingPtr& R,
                                     const std::vector<Polynomial>& gens,
                                     std::uint32_t N, const Limits& limits) {
  std::uint64_t breadth =
      binomial(static_cast<std::uint64_t>(N) + R->ambient->nvars() - 1,
               R->ambient->nvars() - 1);
  if (breadth > limits.breadth_cap)
    throw ResourceExceeded(
        "truncation at degree " + std::to_string(N) + " needs " +
        std::to_string(breadth) + " monomial generators (cap " +
        std::to_string(limits.breadth_cap) + ")");
  std::vector<Polynomial> all = gens;
  for (const Monomial& m : monomials_of_degree(R->ambient->nvars(), N))
    all.push_back(Polynomial::term(R->ambient, 1, m));
  GroebnerBasis G = buchberger(R->ambient, all, limits);
  auto count = staircase_count(G);
  return *count;  // finite by construction: m^N is included
}

}  // namespace detail

// Length of the quotient of the presented local ring by the ideal, i.e. the
// colength at the origin. Computed as the stable value of
// D_N = staircase_count(GB(I + J + m^N)): once two consecutive truncations
// agree, the maximal ideal of the local quotient has a stationary power,
// which by Nakayama is zero, so the stable D_N is the exact length. When the
// global quotient is finite-dimensional and every variable is nilpotent, the
// quotient is already concentrated at the origin and the global staircase
// count is that stable value, with no truncation required.
inline std::uint64_t local_colength(const LocalIdeal& J,
                                    const Limits& limits = {}) {
  const LocalRingPtr& R = J.ring;
  std::vector<Polynomial> combined = R->defining;
  combined.insert(combined.end(), J.gens.begin(), J.gens.end());

  GroebnerBasis G = buchberger(R->ambient, combined, limits);
  if (G.is_unit_ideal()) return 0;  // locally (even globally) the unit ideal

  if (auto global = staircase_count(G)) {
    if (*global == 0) return 0;
    try {
      if (detail::all_variables_nilpotent(G, *global)) {
        limits.emit(
            "colength: all variables nilpotent, exact at staircase D=" +
            std::to_string(*global) + " (no truncation)");
        return *global;
      }
    } catch (const ResourceExceeded&) {
      // Undecided certificate; the truncation loop below settles it.
    }
  }

  std::uint64_t max_deg = 0;
  for (const Polynomial& g : combined)
    if (!g.is_zero()) max_deg = std::max(max_deg, g.degree());
  std::uint32_t N = static_cast<std::uint32_t>(max_deg + 1);

  if (static_cast<int>(N) > limits.truncation_cap)
    throw NotFiniteColength(
        "local colength: initial truncation degree " + std::to_string(N) +
        " already exceeds the cap " + std::to_string(limits.truncation_cap));

  std::uint64_t prev = detail::truncated_count(R, combined, N, limits);
  limits.emit("colength: truncation N=" + std::to_string(N) +
              " D=" + std::to_string(prev));
  while (static_cast<int>(N) + 1 <= limits.truncation_cap) {
    std::uint64_t next = detail::truncated_count(R, combined, N + 1, limits);
    limits.emit("colength: truncation N=" + std::to_string(N + 1) +
                " D=" + std::to_string(next));
    if (next == prev) {
      limits.emit("colength: stabilized at N=" + std::to_string(N) +
                  " (length " + std::to_string(prev) + ")");
      return prev;
    }
    prev = next;
    ++N;
  }
  throw NotFiniteColength(
      "local colength did not stabilize by the truncation cap N=" +
      std::to_string(limits.truncation_cap) +
      " (counts strictly growing past cap: the quotient is not finite "
      "length at the origin, or the cap is too low)");
}

enum class TriState { yes, no, inconclusive };

inline const char* to_string(TriState t) {
  switch (t) {
    case TriState::yes:
      return "yes";
    case TriState::no:
      return "no";
    default:
      return "inconclusive";
  }
}

// Is I + J primary to the maximal ideal? Tri-state: "yes" is backed by a
// finite local colength; "no" by a positive Krull dimension certificate in
// the homogeneous case (a homogeneous positive-dimensional component always
// passes through the origin); otherwise "inconclusive".
inline TriState is_m_primary(const LocalIdeal& J, const Limits& limits = {}) {
  const LocalRingPtr& R = J.ring;
  std::vector<Polynomial> combined = R->defining;
  combined.insert(combined.end(), J.gens.begin(), J.gens.end());

  bool homogeneous = true;
  for (const Polynomial& g : combined)
    if (!g.is_homogeneous()) {
      homogeneous = false;
      break;
    }

  try {
    if (homogeneous) {
      GroebnerBasis G = buchberger(R->ambient, combined, limits);
      if (G.is_unit_ideal()) return TriState::yes;  // zero ring, length 0
      return krull_dim_leading(G) == 0 ? TriState::yes : TriState::no;
    }
    local_colength(J, limits);
    return TriState::yes;
  } catch (const NotFiniteColength&) {
    return TriState::inconclusive;
  } catch (const ResourceExceeded&) {
    return TriState::inconclusive;
  }
}

}  // namespace lad
