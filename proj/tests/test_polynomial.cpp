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
#include <random>

#include "lad/errors.hpp"
#include "lad/polynomial.hpp"
#include "test_util.hpp"

using lad::Polynomial;
using lad::RingPtr;
using ladtest::P;

TEST_CASE("make_ring validates its arguments", "[polynomial]") {
  CHECK_NOTHROW(lad::make_ring(2, {"x", "y"}));
  CHECK_THROWS_AS(lad::make_ring(2, {}), lad::SemanticError);
  CHECK_THROWS_AS(lad::make_ring(2, {"x", "x"}), lad::SemanticError);
  CHECK_THROWS_AS(lad::make_ring(6, {"x"}), lad::SemanticError);
}

TEST_CASE("from_terms canonicalizes: merge, drop zeros, reduce mod p",
          "[polynomial]") {
  RingPtr r = lad::make_ring(3, {"x", "y"});
  using lad::Monomial;
  using lad::Term;
  // x + x + x = 3x = 0 in F_3.
  Polynomial p = Polynomial::from_terms(
      r, {Term{1, Monomial({1, 0})}, Term{1, Monomial({1, 0})},
          Term{1, Monomial({1, 0})}});
  CHECK(p.is_zero());
  // 4y = y; terms sorted descending in the ring order.
  Polynomial q = Polynomial::from_terms(
      r, {Term{4, Monomial({0, 1})}, Term{2, Monomial({2, 0})}});
  REQUIRE(q.terms().size() == 2);
  CHECK(q.leading_monomial() == Monomial({2, 0}));
  CHECK(q.leading_coeff() == 2);
  CHECK(q.terms()[1].coeff == 1);
}

TEST_CASE("arithmetic identities over small fields", "[polynomial]") {
  RingPtr r = lad::make_ring(2, {"x", "y"});
  Polynomial a = P(r, "x + y");
  Polynomial b = P(r, "x + 1");
  CHECK((a + a).is_zero());  // char 2
  CHECK((a * b).to_string() == "x^2 + x*y + x + y");
  CHECK(((a + b) * (a + b)).to_string() == "y^2 + 1");  // (y+1)^2 in char 2
  CHECK((a - a).is_zero());
  CHECK((a * Polynomial::constant(r, 0)).is_zero());
  CHECK((a * Polynomial::constant(r, 1)).to_string() == a.to_string());
}

TEST_CASE("pow agrees with repeated multiplication", "[polynomial]") {
  std::mt19937 rng(99);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    RingPtr r = lad::make_ring(p, {"x", "y"});
    for (int t = 0; t < 20; ++t) {
      Polynomial f = ladtest::random_poly(r, rng, 3, 0, 2);
      Polynomial acc = Polynomial::constant(r, 1);
      for (int e = 0; e <= 4; ++e) {
        CHECK(f.pow(e).to_string() == acc.to_string());
        acc = acc * f;
      }
    }
  }
}

TEST_CASE("pth_power is the Frobenius", "[polynomial]") {
  std::mt19937 rng(1234);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    RingPtr r = lad::make_ring(p, {"x", "y", "z"});
    for (int t = 0; t < 25; ++t) {
      Polynomial f = ladtest::random_poly(r, rng, 4, 0, 3);
      CHECK(f.pth_power().to_string() == f.pow(p).to_string());
    }
  }
}

TEST_CASE("substitute: identity, evaluation, composition", "[polynomial]") {
  RingPtr r = lad::make_ring(2, {"x", "y"});
  Polynomial f = P(r, "x^2 + x*y + 1");
  std::vector<Polynomial> id = {P(r, "x"), P(r, "y")};
  CHECK(f.substitute(id, r).to_string() == f.to_string());

  // x -> y^2, y -> x: f becomes y^4 + y^2*x + 1.
  std::vector<Polynomial> swap = {P(r, "y^2"), P(r, "x")};
  CHECK(f.substitute(swap, r).to_string() == P(r, "y^4 + x*y^2 + 1").to_string());

  // Substitution is a ring homomorphism: (f*g) o s = (f o s) * (g o s).
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    Polynomial g = ladtest::random_poly(r, rng, 3, 0, 2);
    Polynomial h = ladtest::random_poly(r, rng, 3, 0, 2);
    std::vector<Polynomial> s = {ladtest::random_poly(r, rng, 2, 0, 2),
                                 ladtest::random_poly(r, rng, 2, 0, 2)};
    CHECK(((g * h).substitute(s, r)).to_string() ==
          (g.substitute(s, r) * h.substitute(s, r)).to_string());
    CHECK(((g + h).substitute(s, r)).to_string() ==
          (g.substitute(s, r) + h.substitute(s, r)).to_string());
  }
}

TEST_CASE("degree, min_degree, homogeneity, constant_term", "[polynomial]") {
  RingPtr r = lad::make_ring(5, {"x", "y"});
  Polynomial f = P(r, "x^3 + 2*x*y + 4");
  CHECK(f.degree() == 3);
  CHECK(f.min_degree() == 0);
  CHECK(f.constant_term() == 4);
  CHECK_FALSE(f.is_homogeneous());
  CHECK(P(r, "x^2 + 3*x*y").is_homogeneous());
  CHECK(P(r, "0").is_zero());
  CHECK(P(r, "0").degree() == 0);
  CHECK(P(r, "x*y + y^2").min_degree() == 2);
}

TEST_CASE("to_string canonical forms", "[polynomial]") {
  RingPtr r = lad::make_ring(7, {"x", "y"});
  CHECK(P(r, "0").to_string() == "0");
  CHECK(P(r, "1").to_string() == "1");
  CHECK(P(r, "9").to_string() == "2");
  CHECK(P(r, "y^3").to_string() == "y^3");
  CHECK(P(r, "3*x*y^2").to_string() == "3*x*y^2");
  CHECK(P(r, "y + x").to_string() == "x + y");
  CHECK(P(r, "x - y").to_string() == "x + 6*y");
}

TEST_CASE("same_ring is structural", "[polynomial]") {
  RingPtr a = lad::make_ring(2, {"x", "y"});
  RingPtr b = lad::make_ring(2, {"x", "y"});
  RingPtr c = lad::make_ring(3, {"x", "y"});
  RingPtr d = lad::make_ring(2, {"x", "z"});
  CHECK(lad::same_ring(a, b));
  CHECK_FALSE(lad::same_ring(a, c));
  CHECK_FALSE(lad::same_ring(a, d));
}
