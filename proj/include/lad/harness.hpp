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

#include "lad/entropy.hpp"

namespace lad {

// Additivity of lengths along a morphism of dynamical systems, checked one
// iterate at a time as an exact integer identity:
//   length(S / psi^n(Q) S) = length(R / phi^n(q) R) * length(S / [f(m)S +
//   psi^n(q') S]),
// where Q is generated by q' together with the f-images of q.
struct AdditivityRow {
  std::uint32_t n = 0;
  std::uint64_t lhs = 0;        // length of S / psi^n(Q) S
  std::uint64_t rhs_r = 0;      // length of R / phi^n(q) R
  std::uint64_t rhs_fiber = 0;  // length of S / [f(m)S + psi^n(q')S]
  bool pass = false;
};

struct AdditivityCheck {
  std::vector<AdditivityRow> rows;  // n = 0..n_max
  bool all_pass = false;
  FlatnessReport advisory;
  // Entropy estimates from the n >= 1 slices of the three sequences; the
  // additivity of the headline estimates is implied by the row identities.
  EntropyReport lhs_entropy, source_entropy, fiber_entropy;
};

inline AdditivityCheck verify_additivity(const Morphism& m,
                                         const LocalIdeal& q,
                                         const LocalIdeal& q_prime,
                                         std::uint32_t n_max,
                                         const Limits& limits = {}) {
  if (!check_morphism(m))
    throw ValidationFailed(
        "additivity: the map does not commute with the endomorphisms");
  if (!same_ring(q.ring->ambient, m.source.ring()->ambient))
    throw ValidationFailed("additivity: q must be an ideal of the source");
  if (!same_ring(q_prime.ring->ambient, m.target.ring()->ambient))
    throw ValidationFailed(
        "additivity: q' must be given in the target's variables");
  if (is_m_primary(LocalIdeal{m.source.ring(), q.gens}, limits) !=
      TriState::yes)
    throw ValidationFailed(
        "additivity: q is not (certifiably) primary to the source maximal "
        "ideal");
  if (is_m_primary(LocalIdeal{m.fiber, q_prime.gens}, limits) !=
      TriState::yes)
    throw ValidationFailed(
        "additivity: q' is not (certifiably) primary in the closed fiber");

  AdditivityCheck check;
  check.advisory = flatness_advisory(m, limits);

  // Q = q' together with the f-images of q, as an ideal of S.
  std::vector<Polynomial> Q = q_prime.gens;
  for (const Polynomial& g : q.gens) Q.push_back(apply_map(m, g));

  const LocalRingPtr& R = m.source.ring();
  const LocalRingPtr& S = m.target.ring();
  Endomorphism phi_n = identity_endo(R);
  Endomorphism psi_n = identity_endo(S);

  check.all_pass = true;
  for (std::uint32_t n = 0; n <= n_max; ++n) {
    AdditivityRow row;
    row.n = n;

    std::vector<Polynomial> lhs_gens;
    for (const Polynomial& g : Q) lhs_gens.push_back(apply_endo(psi_n, g));
    row.lhs = local_colength(LocalIdeal{S, lhs_gens}, limits);

    std::vector<Polynomial> r_gens;
    for (const Polynomial& g : q.gens) r_gens.push_back(apply_endo(phi_n, g));
    row.rhs_r = local_colength(LocalIdeal{R, r_gens}, limits);

    std::vector<Polynomial> fiber_gens;
    for (const Polynomial& g : q_prime.gens)
      fiber_gens.push_back(apply_endo(psi_n, g));
    row.rhs_fiber = local_colength(LocalIdeal{m.fiber, fiber_gens}, limits);

    unsigned __int128 product =
        static_cast<unsigned __int128>(row.rhs_r) * row.rhs_fiber;
    row.pass = (product == row.lhs);
    check.all_pass = check.all_pass && row.pass;
    check.rows.push_back(row);

    if (n < n_max) {
      phi_n = compose(phi_n, m.source.endo);
      psi_n = compose(psi_n, m.target.endo);
    }
  }

  if (n_max >= 1) {
    std::vector<std::uint64_t> lhs_seq, r_seq, fiber_seq;
    for (const AdditivityRow& row : check.rows)
      if (row.n >= 1) {
        lhs_seq.push_back(row.lhs);
        r_seq.push_back(row.rhs_r);
        fiber_seq.push_back(row.rhs_fiber);
      }
    check.lhs_entropy = estimate_entropy(lhs_seq);
    check.source_entropy = estimate_entropy(r_seq);
    check.fiber_entropy = estimate_entropy(fiber_seq);
  }
  return check;
}

// The unconditional inequality along any morphism of dynamical systems (no
// flatness hypothesis), per iterate:
//   length(S / psi^n(m_S) S) <= length(R / phi^n(m_R) R) * length(S /
//   [f(m_R)S + psi^n(m_S) S]).
struct InequalityRow {
  std::uint32_t n = 0;
  std::uint64_t lhs = 0;
  std::uint64_t rhs_r = 0;
  std::uint64_t rhs_fiber = 0;
  bool pass = false;
};

struct InequalityCheck {
  std::vector<InequalityRow> rows;  // n = 0..n_max
  bool all_pass = false;
  EntropyReport lhs_entropy, rhs_entropy;  // rhs = per-n products
};

inline InequalityCheck verify_inequality(const Morphism& m,
                                         std::uint32_t n_max,
                                         const Limits& limits = {}) {
  if (!check_morphism(m))
    throw ValidationFailed(
        "inequality: the map does not commute with the endomorphisms");

  const LocalRingPtr& R = m.source.ring();
  const LocalRingPtr& S = m.target.ring();
  auto variables_of = [](const LocalRingPtr& ring) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < ring->ambient->nvars(); ++i)
      vars.push_back(Polynomial::variable(ring->ambient, i));
    return vars;
  };
  const std::vector<Polynomial> mR = variables_of(R);
  const std::vector<Polynomial> mS = variables_of(S);

  InequalityCheck check;
  Endomorphism phi_n = identity_endo(R);
  Endomorphism psi_n = identity_endo(S);
  check.all_pass = true;
  for (std::uint32_t n = 0; n <= n_max; ++n) {
    InequalityRow row;
    row.n = n;

    std::vector<Polynomial> lhs_gens;
    for (const Polynomial& g : mS) lhs_gens.push_back(apply_endo(psi_n, g));
    row.lhs = local_colength(LocalIdeal{S, lhs_gens}, limits);

    std::vector<Polynomial> r_gens;
    for (const Polynomial& g : mR) r_gens.push_back(apply_endo(phi_n, g));
    row.rhs_r = local_colength(LocalIdeal{R, r_gens}, limits);

    row.rhs_fiber = local_colength(LocalIdeal{m.fiber, lhs_gens}, limits);

    unsigned __int128 product =
        static_cast<unsigned __int128>(row.rhs_r) * row.rhs_fiber;
    row.pass = (static_cast<unsigned __int128>(row.lhs) <= product);
    check.all_pass = check.all_pass && row.pass;
    check.rows.push_back(row);

    if (n < n_max) {
      phi_n = compose(phi_n, m.source.endo);
      psi_n = compose(psi_n, m.target.endo);
    }
  }

  if (n_max >= 1) {
    std::vector<std::uint64_t> lhs_seq, rhs_seq;
    for (const InequalityRow& row : check.rows)
      if (row.n >= 1) {
        lhs_seq.push_back(row.lhs);
        unsigned __int128 product =
            static_cast<unsigned __int128>(row.rhs_r) * row.rhs_fiber;
        if (product > ~0ull)
          throw ResourceExceeded("inequality: product overflows 64 bits");
        rhs_seq.push_back(static_cast<std::uint64_t>(product));
      }
    check.lhs_entropy = estimate_entropy(lhs_seq);
    check.rhs_entropy = estimate_entropy(rhs_seq);
  }
  return check;
}

// System-of-parameters test: adjoining the elements one at a time must drop
// the dimension proxy by exactly one per step and end at dimension zero.
inline bool sop_check(const LocalRingPtr& ring,
                      const std::vector<Polynomial>& elements,
                      const Limits& limits = {}) {
  std::vector<Polynomial> chain = ring->defining;
  std::size_t dim;
  try {
    dim = krull_dim_leading(buchberger(ring->ambient, chain, limits));
  } catch (const UndefinedDimension&) {
    return false;  // zero ring: no parameters to speak of
  }
  for (const Polynomial& e : elements) {
    chain.push_back(e);
    std::size_t next;
    try {
      next = krull_dim_leading(buchberger(ring->ambient, chain, limits));
    } catch (const UndefinedDimension&) {
      return false;
    }
    if (next + 1 != dim) return false;
    dim = next;
  }
  return dim == 0;
}

}  // namespace lad
