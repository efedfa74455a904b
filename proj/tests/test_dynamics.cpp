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

#include <catch2/catch_amalgamated.hpp>

#include "lad/dynamics.hpp"
#include "lad/errors.hpp"
#include "test_util.hpp"

using lad::apply_endo;
using lad::compose;
using lad::DynamicalSystem;
using lad::Endomorphism;
using lad::iterate;
using lad::LocalRingPtr;
using lad::make_endomorphism;
using lad::make_local_ideal;
using lad::make_local_ring;
using lad::make_morphism;
using lad::make_system;
using lad::Morphism;
using lad::RingPtr;
using lad::TriState;
using ladtest::P;
using ladtest::PL;

namespace {

struct GoldenPair {
  DynamicalSystem base, total;
  Morphism f;
};

GoldenPair golden() {
  RingPtr ambR = lad::make_ring(2, {"y"});
  LocalRingPtr R = make_local_ring(ambR, {});
  DynamicalSystem base =
      make_system(make_endomorphism(R, PL(ambR, "(y^3)")));

  RingPtr ambS = lad::make_ring(2, {"x", "y", "w", "s"});
  LocalRingPtr S = make_local_ring(ambS, PL(ambS, "(s^6, y^3 + x^2)"));
  DynamicalSystem total = make_system(make_endomorphism(
      S, PL(ambS, "(x^3 + s^3, y^3, w^5 + x^2, x*s^2)")));

  Morphism f = make_morphism(base, total, PL(ambS, "(y)"));
  return GoldenPair{base, total, std::move(f)};
}

}  // namespace

TEST_CASE("endomorphisms must be local and well defined", "[dynamics]") {
  RingPtr amb = lad::make_ring(2, {"x", "y"});
  LocalRingPtr R = make_local_ring(amb, PL(amb, "(y^2)"));
  // Image with a constant term is not a local map.
  CHECK_THROWS_AS(make_endomorphism(R, PL(amb, "(x + 1, y)")),
                  lad::ValidationFailed);
  // Swapping x and y does not preserve (y^2): x^2 is not in it.
  CHECK_THROWS_AS(make_endomorphism(R, PL(amb, "(y, x)")),
                  lad::ValidationFailed);
  // One image per variable.
  CHECK_THROWS_AS(make_endomorphism(R, PL(amb, "(x)")), lad::SemanticError);
  // The identity is always fine, and images are stored reduced.
  Endomorphism ok = make_endomorphism(R, PL(amb, "(x + y^2, y)"));
  CHECK(ok.images[0].to_string() == "x");
}

TEST_CASE("iterates of y -> y^3 are y -> y^(3^n)", "[dynamics]") {
  RingPtr amb = lad::make_ring(2, {"y"});
  LocalRingPtr R = make_local_ring(amb, {});
  Endomorphism phi = make_endomorphism(R, PL(amb, "(y^3)"));
  std::uint64_t pw = 1;
  for (std::uint32_t n = 0; n <= 4; ++n, pw *= 3) {
    Endomorphism it = iterate(phi, n);
    CHECK(it.images[0].to_string() ==
          (pw == 1 ? "y" : "y^" + std::to_string(pw)));
  }
}

TEST_CASE("iterate 0 is the identity and composition is associative",
          "[dynamics]") {
  GoldenPair g = golden();
  const Endomorphism& psi = g.total.endo;
  Endomorphism id = iterate(psi, 0);
  for (std::size_t i = 0; i < id.images.size(); ++i)
    CHECK(id.images[i] ==
          lad::normal_form(
              lad::Polynomial::variable(psi.ring->ambient, i),
              psi.ring->defining_gb));
  // iterate(a + b) == compose(iterate(a), iterate(b)) for a + b <= 4.
  for (std::uint32_t a = 0; a <= 4; ++a) {
    for (std::uint32_t b = 0; a + b <= 4; ++b) {
      Endomorphism lhs = iterate(psi, a + b);
      Endomorphism rhs = compose(iterate(psi, a), iterate(psi, b));
      REQUIRE(lhs.images.size() == rhs.images.size());
      for (std::size_t i = 0; i < lhs.images.size(); ++i)
        CHECK(lhs.images[i] == rhs.images[i]);
    }
  }
}

TEST_CASE("iterated images are reduced against the presentation",
          "[dynamics]") {
  // On the fiber ring, psibar^2 sends w to w^25 and kills x and s.
  RingPtr amb = lad::make_ring(2, {"x", "w", "s"});
  LocalRingPtr F = make_local_ring(amb, PL(amb, "(s^6, x^2)"));
  Endomorphism psibar =
      make_endomorphism(F, PL(amb, "(s^3, w^5 + x^2, x*s^2)"));
  Endomorphism sq = iterate(psibar, 2);
  CHECK(sq.images[0].is_zero());             // (x*s^2)^3 = x^3 s^6 = 0
  CHECK(sq.images[1].to_string() == "w^25");  // (w^5 + x^2)^5 mod x^2
  CHECK(sq.images[2].is_zero());             // s^3 (x s^2)^2 = x^2 s^7 = 0
}

TEST_CASE("finite-length validation of endomorphisms", "[dynamics]") {
  GoldenPair g = golden();
  CHECK(g.base.validated_finite_length);
  CHECK(g.total.validated_finite_length);

  RingPtr amb = lad::make_ring(2, {"x", "y"});
  LocalRingPtr R = make_local_ring(amb, {});
  Endomorphism frob = make_endomorphism(R, PL(amb, "(x^2, y^2)"));
  CHECK(lad::check_finite_length(frob) == TriState::yes);
  Endomorphism proj = make_endomorphism(R, PL(amb, "(x, x)"));
  CHECK(lad::check_finite_length(proj) == TriState::no);
  CHECK_FALSE(make_system(proj).validated_finite_length);
}

TEST_CASE("iterates of a validated system stay finite length", "[dynamics]") {
  GoldenPair g = golden();
  for (std::uint32_t n = 1; n <= 3; ++n) {
    Endomorphism it = iterate(g.total.endo, n);
    CHECK(lad::check_finite_length(it) == TriState::yes);
  }
}

TEST_CASE("stable ideals and induced endomorphisms", "[dynamics]") {
  RingPtr ambS = lad::make_ring(2, {"x", "y", "w", "s"});
  LocalRingPtr S = make_local_ring(ambS, PL(ambS, "(s^6, y^3 + x^2)"));
  Endomorphism psi = make_endomorphism(
      S, PL(ambS, "(x^3 + s^3, y^3, w^5 + x^2, x*s^2)"));

  // The maximal ideal is stable under any local endomorphism.
  CHECK(lad::check_stable_ideal(psi, make_local_ideal(S, PL(ambS, "(x, y, w, s)"))));
  // (y) is stable: psi(y) = y^3.
  lad::LocalIdeal Jy = make_local_ideal(S, PL(ambS, "(y)"));
  CHECK(lad::check_stable_ideal(psi, Jy));

  // Inducing on S/(y) reduces the images: x -> s^3, w -> w^5, s -> x*s^2.
  Endomorphism bar = lad::induced_endo(psi, Jy);
  CHECK(bar.images[0].to_string() == "s^3");
  CHECK(bar.images[1].is_zero());
  CHECK(bar.images[2].to_string() == "w^5");
  CHECK(bar.images[3].to_string() == "x*s^2");

  // Inducing commutes with iterating.
  Endomorphism bar2 = lad::induced_endo(iterate(psi, 2), Jy);
  Endomorphism bar2b = iterate(bar, 2);
  for (std::size_t i = 0; i < bar2.images.size(); ++i)
    CHECK(bar2.images[i] == bar2b.images[i]);

  // An unstable ideal is rejected: under x -> y, y -> x the ideal (x) moves.
  RingPtr amb2 = lad::make_ring(2, {"x", "y"});
  LocalRingPtr R2 = make_local_ring(amb2, {});
  Endomorphism swap = make_endomorphism(R2, PL(amb2, "(y, x)"));
  CHECK_FALSE(lad::check_stable_ideal(swap, make_local_ideal(R2, PL(amb2, "(x)"))));
  CHECK_THROWS_AS(lad::induced_endo(swap, make_local_ideal(R2, PL(amb2, "(x)"))),
                  lad::UnstableIdeal);
}

TEST_CASE("morphism commutation: the golden map and a failing variant",
          "[dynamics]") {
  GoldenPair g = golden();
  CHECK(lad::check_morphism(g.f));

  // Identity morphism always commutes.
  Morphism idm = make_morphism(g.base, g.base, PL(g.base.ring()->ambient, "(y)"));
  CHECK(lad::check_morphism(idm));

  // Replacing phi by y -> y^2 breaks psi(f(y)) = f(phi(y)).
  RingPtr ambR = lad::make_ring(2, {"y"});
  LocalRingPtr R = make_local_ring(ambR, {});
  DynamicalSystem wrong =
      make_system(make_endomorphism(R, PL(ambR, "(y^2)")));
  Morphism bad = make_morphism(wrong, g.total,
                               PL(g.total.ring()->ambient, "(y)"));
  CHECK_FALSE(lad::check_morphism(bad));
}

TEST_CASE("morphism images must be local", "[dynamics]") {
  GoldenPair g = golden();
  CHECK_THROWS_AS(
      make_morphism(g.base, g.total, PL(g.total.ring()->ambient, "(y + 1)")),
      lad::ValidationFailed);
}

TEST_CASE("fiber presentation and dimension bookkeeping", "[dynamics]") {
  GoldenPair g = golden();
  CHECK(g.f.d == 1);        // dim F_2[[y]]
  CHECK(g.f.d_prime == 1);  // dim of the fiber F_2[[x,w,s]]/(s^6, x^2, y)
  lad::FlatnessReport rep = lad::flatness_advisory(g.f);
  CHECK(rep.dim_target == 2);
  CHECK(rep.dimension_pass);
  CHECK(rep.pattern == lad::FlatnessReport::Pattern::pass);
}

TEST_CASE("flatness advisory flags the non-flat surjection", "[dynamics]") {
  RingPtr amb = lad::make_ring(2, {"x", "y"});
  LocalRingPtr R = make_local_ring(amb, {});
  LocalRingPtr S = make_local_ring(amb, PL(amb, "(x*y)"));
  DynamicalSystem src = make_system(make_endomorphism(R, PL(amb, "(x^2, y^2)")));
  DynamicalSystem dst = make_system(make_endomorphism(S, PL(amb, "(x^2, y^2)")));
  Morphism f = make_morphism(src, dst, PL(amb, "(x, y)"));
  CHECK(lad::check_morphism(f));
  lad::FlatnessReport rep = lad::flatness_advisory(f);
  CHECK(rep.dim_source == 2);
  CHECK(rep.dim_fiber == 0);
  CHECK(rep.dim_target == 1);
  CHECK_FALSE(rep.dimension_pass);  // 1 != 2 + 0
  // x, y is not a regular sequence on S: x kills y.
  CHECK(rep.pattern == lad::FlatnessReport::Pattern::fail);
}

TEST_CASE("pattern check is not applicable for presented sources",
          "[dynamics]") {
  RingPtr amb = lad::make_ring(2, {"x", "y"});
  LocalRingPtr Q = make_local_ring(amb, PL(amb, "(x*y)"));
  DynamicalSystem sys = make_system(make_endomorphism(Q, PL(amb, "(x^2, y^2)")));
  Morphism idm = make_morphism(sys, sys, PL(amb, "(x, y)"));
  lad::FlatnessReport rep = lad::flatness_advisory(idm);
  CHECK(rep.dimension_pass);  // 1 == 1 + 0
  CHECK(rep.pattern == lad::FlatnessReport::Pattern::not_applicable);
}
