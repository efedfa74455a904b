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
#include <optional>
#include <random>

#include "lad/errors.hpp"
#include "lad/ideals.hpp"
#include "lad/oracle.hpp"
#include "test_util.hpp"

using lad::LocalIdeal;
using lad::LocalRingPtr;
using lad::local_colength;
using lad::make_local_ideal;
using lad::make_local_ring;
using lad::oracle_colength;
using lad::RingPtr;
using ladtest::PL;

TEST_CASE("oracle on monomial staircases", "[oracle]") {
  RingPtr amb = lad::make_ring(2, {"x", "s"});
  LocalRingPtr R = make_local_ring(amb, {});
  CHECK(oracle_colength(make_local_ideal(R, PL(amb, "(x^2, s^6)"))) == 12);

  RingPtr amb2 = lad::make_ring(2, {"x", "y"});
  LocalRingPtr R2 = make_local_ring(amb2, {});
  CHECK(oracle_colength(make_local_ideal(R2, PL(amb2, "(x*y, x^2, y^2)"))) ==
        3);
}

TEST_CASE("oracle agrees with the engine on the golden collapse",
          "[oracle]") {
  RingPtr amb = lad::make_ring(2, {"x", "y", "w", "s"});
  LocalRingPtr S = make_local_ring(amb, {});
  LocalIdeal J = make_local_ideal(S, PL(amb, "(s^6, y^3 + x^2, w, y)"));
  std::uint64_t o = oracle_colength(J);
  CHECK(o == 12);
  CHECK(o == local_colength(J));
}

TEST_CASE("oracle handles odd characteristic via dense elimination",
          "[oracle]") {
  RingPtr amb = lad::make_ring(5, {"x", "y"});
  LocalRingPtr R = make_local_ring(amb, {});
  CHECK(oracle_colength(make_local_ideal(R, PL(amb, "(x^3, y^4)"))) == 12);
  CHECK(oracle_colength(make_local_ideal(
            R, PL(amb, "(x + y^2, y + x^2)"))) == 1);
}

TEST_CASE("oracle reports non-finite colength at its cap", "[oracle]") {
  RingPtr amb = lad::make_ring(2, {"x", "y"});
  LocalRingPtr R = make_local_ring(amb, {});
  CHECK_THROWS_AS(
      oracle_colength(make_local_ideal(R, PL(amb, "(y + x^2)")), 10),
      lad::NotFiniteColength);
}

TEST_CASE("oracle equivalence on randomized ideals", "[oracle][property]") {
  std::mt19937 rng(987654321);
  const std::uint32_t primes[3] = {2, 3, 5};
  std::vector<std::string> names = {"x", "y", "z"};
  std::uniform_int_distribution<std::size_t> nv(1, 3);
  std::uniform_int_distribution<int> ng(1, 3);
  std::uniform_int_distribution<int> np(0, 2);

  lad::Limits lim;
  lim.truncation_cap = 12;
  const std::uint32_t oracle_cap = 12;

  int finite_cases = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t vars = nv(rng);
    RingPtr amb = lad::make_ring(
        primes[np(rng)],
        std::vector<std::string>(names.begin(), names.begin() + vars));
    LocalRingPtr R = make_local_ring(amb, {});
    std::vector<lad::Polynomial> gens;
    int k = ng(rng);
    for (int i = 0; i < k; ++i) {
      lad::Polynomial f = ladtest::random_poly(amb, rng, 3, 1, 3);
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) gens.push_back(ladtest::random_poly(amb, rng, 1, 1, 2));
    if (gens[0].is_zero()) continue;
    LocalIdeal J = make_local_ideal(R, gens);

    std::optional<std::uint64_t> engine, oracle;
    try {
      engine = local_colength(J, lim);
    } catch (const lad::NotFiniteColength&) {
    }
    try {
      oracle = oracle_colength(J, oracle_cap, lim);
    } catch (const lad::NotFiniteColength&) {
    }
    INFO("trial " << trial << " over F_" << amb->field.modulus() << " with "
                  << vars << " vars");
    CHECK(engine.has_value() == oracle.has_value());
    if (engine && oracle) {
      CHECK(*engine == *oracle);
      ++finite_cases;
    }
  }
  // The generator mix must actually exercise the finite branch.
  CHECK(finite_cases >= 10);
}
