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
#include <string>
#include <vector>

#include "lad/ideals.hpp"
#include "lad/limits.hpp"

namespace lad {

// A local endomorphism of a presented local ring, given by one image per
// ambient variable. Images are kept reduced modulo the defining ideal, which
// does not change the induced map on the quotient but keeps iteration degrees
// and comparisons canonical.
struct Endomorphism {
  LocalRingPtr ring;
  std::vector<Polynomial> images;
};

inline Endomorphism make_endomorphism(const LocalRingPtr& ring,
                                      std::vector<Polynomial> images,
                                      const Limits& limits = {}) {
  (void)limits;
  if (images.size() != ring->ambient->nvars())
    throw SemanticError("endomorphism needs one image per variable");
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!same_ring(images[i].ring(), ring->ambient))
      throw SemanticError("endomorphism image from a different ring");
    if (images[i].constant_term() != 0)
      throw ValidationFailed("image of '" + ring->ambient->vars[i] +
                             "' has a nonzero constant term (map not local)");
    images[i] = normal_form(images[i], ring->defining_gb);
  }
  for (const Polynomial& g : ring->defining) {
    Polynomial image = g.substitute(images, ring->ambient);
    if (!in_ideal(image, ring->defining_gb))
      throw ValidationFailed(
          "endomorphism does not preserve the defining ideal: image of "
          "generator " +
          g.to_string() + " is not a member");
  }
  return Endomorphism{ring, std::move(images)};
}

inline Endomorphism identity_endo(const LocalRingPtr& ring) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring->ambient->nvars(); ++i)
    images.push_back(normal_form(Polynomial::variable(ring->ambient, i),
                                 ring->defining_gb));
  return Endomorphism{ring, std::move(images)};
}

// Image of a polynomial under the ring map, reduced modulo the defining
// ideal.
inline Polynomial apply_endo(const Endomorphism& e, const Polynomial& f) {
  return normal_form(f.substitute(e.images, e.ring->ambient),
                     e.ring->defining_gb);
}

// Composition outer ∘ inner on the same presented ring.
inline Endomorphism compose(const Endomorphism& outer,
                            const Endomorphism& inner) {
  if (!same_ring(outer.ring->ambient, inner.ring->ambient))
    throw SemanticError("compose: endomorphisms live on different rings");
  std::vector<Polynomial> images;
  images.reserve(inner.images.size());
  for (const Polynomial& im : inner.images)
    images.push_back(apply_endo(outer, im));
  return Endomorphism{outer.ring, std::move(images)};
}

// n-fold composition, with images reduced at every step (degree control).
inline Endomorphism iterate(const Endomorphism& e, std::uint32_t n) {
  if (n == 0) return identity_endo(e.ring);
  Endomorphism r = e;
  for (std::uint32_t k = 1; k < n; ++k) r = compose(r, e);
  return r;
}

// Finite-length test for the endomorphism: is the ideal generated by all
// variable images primary to the maximal ideal?
inline TriState check_finite_length(const Endomorphism& e,
                                    const Limits& limits = {}) {
  return is_m_primary(LocalIdeal{e.ring, e.images}, limits);
}

// Is the ideal J carried into I + J by the endomorphism? (Global membership,
// a sufficient proxy for the local statement.)
inline bool check_stable_ideal(const Endomorphism& e, const LocalIdeal& J,
                               const Limits& limits = {}) {
  std::vector<Polynomial> combined = e.ring->defining;
  combined.insert(combined.end(), J.gens.begin(), J.gens.end());
  GroebnerBasis G = buchberger(e.ring->ambient, combined, limits);
  for (const Polynomial& g : J.gens)
    if (!in_ideal(g.substitute(e.images, e.ring->ambient), G)) return false;
  return true;
}

// The endomorphism induced on the quotient by a stable ideal: same images,
// defining ideal enlarged by J's generators.
inline Endomorphism induced_endo(const Endomorphism& e, const LocalIdeal& J,
                                 const Limits& limits = {}) {
  if (!check_stable_ideal(e, J, limits))
    throw UnstableIdeal(
        "cannot induce an endomorphism on the quotient: the ideal is not "
        "stable under the map");
  std::vector<Polynomial> defining = e.ring->defining;
  defining.insert(defining.end(), J.gens.begin(), J.gens.end());
  LocalRingPtr quotient =
      make_local_ring(e.ring->ambient, std::move(defining), limits);
  return make_endomorphism(quotient, e.images, limits);
}

// A validated dynamical system: a presented local ring with a finite-length
// endomorphism.
struct DynamicalSystem {
  Endomorphism endo;
  bool validated_finite_length = false;

  const LocalRingPtr& ring() const { return endo.ring; }
};

inline DynamicalSystem make_system(const Endomorphism& e,
                                   const Limits& limits = {}) {
  return DynamicalSystem{e, check_finite_length(e, limits) == TriState::yes};
}

// A morphism of dynamical systems: a local map f from (R, phi) to (S, psi)
// given by images of R's variables in S, with the closed fiber S/f(m)S as a
// derived presentation and the two dimension proxies d = dim R,
// d' = dim S/f(m)S.
struct Morphism {
  DynamicalSystem source;  // (R, phi)
  DynamicalSystem target;  // (S, psi)
  std::vector<Polynomial> f_images;
  LocalRingPtr fiber;  // S-ambient modulo I_S + f(m)
  std::size_t d;
  std::size_t d_prime;
};

inline Morphism make_morphism(const DynamicalSystem& source,
                              const DynamicalSystem& target,
                              std::vector<Polynomial> f_images,
                              const Limits& limits = {}) {
  const LocalRingPtr& R = source.ring();
  const LocalRingPtr& S = target.ring();
  if (f_images.size() != R->ambient->nvars())
    throw SemanticError("morphism needs one image per source variable");
  for (std::size_t i = 0; i < f_images.size(); ++i) {
    if (!same_ring(f_images[i].ring(), S->ambient))
      throw SemanticError("morphism image must live in the target ring");
    if (f_images[i].constant_term() != 0)
      throw ValidationFailed("image of '" + R->ambient->vars[i] +
                             "' has a nonzero constant term (map not local)");
    f_images[i] = normal_form(f_images[i], S->defining_gb);
  }
  std::vector<Polynomial> fiber_defining = S->defining;
  fiber_defining.insert(fiber_defining.end(), f_images.begin(),
                        f_images.end());
  LocalRingPtr fiber =
      make_local_ring(S->ambient, std::move(fiber_defining), limits);
  std::size_t d = krull_dim_leading(R->defining_gb);
  std::size_t d_prime = krull_dim_leading(fiber->defining_gb);
  return Morphism{source, target, std::move(f_images), std::move(fiber), d,
                  d_prime};
}

// Image of a source-ring polynomial under f, reduced in the target.
inline Polynomial apply_map(const Morphism& m, const Polynomial& f) {
  return normal_form(f.substitute(m.f_images, m.target.ring()->ambient),
                     m.target.ring()->defining_gb);
}

// Does psi ∘ f = f ∘ phi hold? Checked on every source variable by reduction
// in the target presentation.
inline bool check_morphism(const Morphism& m) {
  const Endomorphism& phi = m.source.endo;
  const Endomorphism& psi = m.target.endo;
  for (std::size_t i = 0; i < m.f_images.size(); ++i) {
    Polynomial lhs = apply_endo(psi, m.f_images[i]);
    Polynomial rhs = apply_map(m, phi.images[i]);
    if (lhs != rhs) return false;
  }
  return true;
}

// Advisory flatness checks. Neither check proves flatness; a failed
// dimension check refutes it, and a passing pattern check verifies the
// regular-sequence hypothesis of the standard flatness criterion when f maps
// source variables bijectively onto distinct target variables.
struct FlatnessReport {
  bool dimension_pass = false;
  std::size_t dim_source = 0, dim_fiber = 0, dim_target = 0;
  enum class Pattern { pass, fail, not_applicable };
  Pattern pattern = Pattern::not_applicable;
};

inline FlatnessReport flatness_advisory(const Morphism& m,
                                        const Limits& limits = {}) {
  FlatnessReport rep;
  rep.dim_source = m.d;
  rep.dim_fiber = m.d_prime;
  rep.dim_target = krull_dim_leading(m.target.ring()->defining_gb);
  rep.dimension_pass = (rep.dim_target == rep.dim_source + rep.dim_fiber);

  // Pattern test: every image is a distinct single target variable, and the
  // source presentation is the full polynomial ring.
  if (!m.source.ring()->defining.empty()) return rep;
  std::vector<std::size_t> target_vars;
  for (const Polynomial& im : m.f_images) {
    if (im.terms().size() != 1 || im.leading_coeff() != 1 ||
        im.leading_monomial().degree() != 1)
      return rep;
    int v = im.leading_monomial().pure_power_var();
    target_vars.push_back(static_cast<std::size_t>(v));
  }
  std::vector<std::size_t> sorted = target_vars;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return rep;

  // Regular-sequence test in the target: adjoining the image variables one
  // at a time, each must be a non-zerodivisor, i.e. (J : y) = J.
  const RingPtr& amb = m.target.ring()->ambient;
  std::vector<Polynomial> chain = m.target.ring()->defining;
  rep.pattern = FlatnessReport::Pattern::pass;
  for (std::size_t v : target_vars) {
    GroebnerBasis J = buchberger(amb, chain, limits);
    Polynomial y = Polynomial::variable(amb, v);
    GroebnerBasis Q = ideal_quotient(J, y, limits);
    if (!same_basis(Q, J)) {
      rep.pattern = FlatnessReport::Pattern::fail;
      break;
    }
    chain.push_back(y);
  }
  return rep;
}

}  // namespace lad
