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
#include <cmath>

#include "lad/entropy.hpp"
#include "lad/errors.hpp"
#include "test_util.hpp"

using Catch::Matchers::WithinAbs;
using lad::DynamicalSystem;
using lad::estimate_entropy;
using lad::length_sequence;
using lad::LocalIdeal;
using lad::LocalRingPtr;
using lad::make_endomorphism;
using lad::make_local_ideal;
using lad::make_local_ring;
using lad::make_system;
using lad::RingPtr;
using ladtest::P;
using ladtest::PL;

namespace {
DynamicalSystem base_system() {
  RingPtr amb = lad::make_ring(2, {"y"});
  LocalRingPtr R = make_local_ring(amb, {});
  return make_system(make_endomorphism(R, PL(amb, "(y^3)")));
}

DynamicalSystem fiber_system() {
  RingPtr amb = lad::make_ring(2, {"x", "w", "s"});
  LocalRingPtr F = make_local_ring(amb, PL(amb, "(s^6, x^2)"));
  return make_system(make_endomorphism(F, PL(amb, "(s^3, w^5 + x^2, x*s^2)")));
}
}  // namespace

TEST_CASE("length sequence of y -> y^3 from q = (y)", "[entropy]") {
  DynamicalSystem sys = base_system();
  LocalIdeal q = make_local_ideal(sys.ring(), PL(sys.ring()->ambient, "(y)"));
  std::vector<std::uint64_t> expect = {3, 9, 27, 81};
  CHECK(length_sequence(sys, q, 4) == expect);
}

TEST_CASE("length sequence of Frobenius over F_3 is 9^n", "[entropy]") {
  RingPtr amb = lad::make_ring(3, {"x", "y"});
  LocalRingPtr R = make_local_ring(amb, {});
  DynamicalSystem sys = make_system(make_endomorphism(R, PL(amb, "(x^3, y^3)")));
  LocalIdeal q = make_local_ideal(R, PL(amb, "(x, y)"));
  std::vector<std::uint64_t> expect = {9, 81, 729};
  CHECK(length_sequence(sys, q, 3) == expect);
}

TEST_CASE("length sequence on the fiber is 12 * 5^n", "[entropy]") {
  DynamicalSystem sys = fiber_system();
  LocalIdeal q = make_local_ideal(sys.ring(), PL(sys.ring()->ambient, "(w)"));
  std::vector<std::uint64_t> expect = {60, 300, 1500};
  CHECK(length_sequence(sys, q, 3) == expect);
}

TEST_CASE("estimators: exact geometric growth", "[entropy]") {
  lad::EntropyReport rep = estimate_entropy({3, 9, 27, 81});
  REQUIRE(rep.exact_ratio.has_value());
  CHECK(*rep.exact_ratio == 3);
  CHECK_THAT(rep.headline, WithinAbs(std::log(3.0), 1e-12));
  REQUIRE(rep.naive.size() == 4);
  CHECK_THAT(rep.naive[0], WithinAbs(std::log(3.0), 1e-12));
  CHECK_THAT(rep.naive[3], WithinAbs(std::log(81.0) / 4, 1e-12));
  REQUIRE(rep.ratio.size() == 3);
  for (double r : rep.ratio) CHECK_THAT(r, WithinAbs(std::log(3.0), 1e-12));
  // Fekete bound is a running minimum of the naive estimates.
  for (std::size_t i = 0; i < rep.fekete.size(); ++i) {
    CHECK(rep.fekete[i] <= rep.naive[i] + 1e-15);
    if (i) CHECK(rep.fekete[i] <= rep.fekete[i - 1] + 1e-15);
  }
}

TEST_CASE("estimators: constant and offset-geometric sequences", "[entropy]") {
  lad::EntropyReport flat = estimate_entropy({1, 1, 1});
  CHECK(flat.headline == 0.0);
  REQUIRE(flat.exact_ratio.has_value());
  CHECK(*flat.exact_ratio == 1);

  lad::EntropyReport fib = estimate_entropy({60, 300, 1500});
  REQUIRE(fib.exact_ratio.has_value());
  CHECK(*fib.exact_ratio == 5);
  CHECK_THAT(fib.headline, WithinAbs(std::log(5.0), 1e-12));

  // Single entry: the naive estimate is the headline, no ratio available.
  lad::EntropyReport one = estimate_entropy({3});
  CHECK(one.ratio.empty());
  CHECK_FALSE(one.exact_ratio.has_value());
  CHECK_THAT(one.headline, WithinAbs(std::log(3.0), 1e-12));

  // Non-constant ratios yield no exact ratio.
  lad::EntropyReport mixed = estimate_entropy({2, 4, 8, 8});
  CHECK_FALSE(mixed.exact_ratio.has_value());
  CHECK(mixed.headline == 0.0);  // last ratio log(8/8)

  CHECK_THROWS_AS(estimate_entropy({}), lad::ValidationFailed);
  CHECK_THROWS_AS(estimate_entropy({3, 0}), lad::ValidationFailed);
}

TEST_CASE("submultiplicativity of the golden length sequences", "[entropy]") {
  // lambda_{a+b} <= lambda_a * lambda_b for the computed fixtures.
  auto check_submult = [](const std::vector<std::uint64_t>& l) {
    for (std::size_t a = 1; a < l.size(); ++a)
      for (std::size_t b = 1; a + b <= l.size(); ++b)
        CHECK(l[a + b - 1] <= l[a - 1] * l[b - 1]);
  };
  DynamicalSystem base = base_system();
  check_submult(length_sequence(
      base, make_local_ideal(base.ring(), PL(base.ring()->ambient, "(y)")),
      4));
  DynamicalSystem fib = fiber_system();
  check_submult(length_sequence(
      fib, make_local_ideal(fib.ring(), PL(fib.ring()->ambient, "(w)")), 3));
}

TEST_CASE("sandwich: lengths from nested primary ideals nest", "[entropy]") {
  // q' = (y^2) sits between m = (y) and m^2, so per-n lengths sit between
  // the lengths from (y) and from (y^2) = m^2; all share the same headline.
  DynamicalSystem sys = base_system();
  const RingPtr& amb = sys.ring()->ambient;
  std::vector<std::uint64_t> from_m =
      length_sequence(sys, make_local_ideal(sys.ring(), PL(amb, "(y)")), 4);
  std::vector<std::uint64_t> from_q =
      length_sequence(sys, make_local_ideal(sys.ring(), PL(amb, "(y^2)")), 4);
  for (std::size_t i = 0; i < from_m.size(); ++i) {
    CHECK(from_m[i] <= from_q[i]);
    CHECK(from_q[i] <= 2 * from_m[i]);  // = lengths from m^2
  }
  lad::EntropyReport a = estimate_entropy(from_m);
  lad::EntropyReport b = estimate_entropy(from_q);
  REQUIRE(a.exact_ratio.has_value());
  REQUIRE(b.exact_ratio.has_value());
  CHECK(*a.exact_ratio == *b.exact_ratio);
  CHECK_THAT(a.headline, WithinAbs(b.headline, 1e-12));
}

TEST_CASE("zero-dimensional rings have bounded lengths", "[entropy]") {
  RingPtr amb = lad::make_ring(2, {"x"});
  LocalRingPtr Z = make_local_ring(amb, PL(amb, "(x^8)"));
  DynamicalSystem sys = make_system(make_endomorphism(Z, PL(amb, "(x^2)")));
  LocalIdeal q = make_local_ideal(Z, PL(amb, "(x)"));
  std::vector<std::uint64_t> l = length_sequence(sys, q, 6);
  std::vector<std::uint64_t> expect = {2, 4, 8, 8, 8, 8};
  CHECK(l == expect);
  lad::EntropyReport rep = estimate_entropy(l);
  CHECK(rep.headline == 0.0);
}

TEST_CASE("entropy_run validates its inputs", "[entropy]") {
  DynamicalSystem sys = base_system();
  const RingPtr& amb = sys.ring()->ambient;
  LocalIdeal q = make_local_ideal(sys.ring(), PL(amb, "(y)"));
  CHECK_THROWS_AS(length_sequence(sys, q, 0), lad::ValidationFailed);

  // Unvalidated systems are refused.
  RingPtr amb2 = lad::make_ring(2, {"x", "y"});
  LocalRingPtr R2 = make_local_ring(amb2, {});
  DynamicalSystem bad =
      make_system(make_endomorphism(R2, PL(amb2, "(x, x)")));
  CHECK_THROWS_AS(
      length_sequence(bad, make_local_ideal(R2, PL(amb2, "(x, y)")), 2),
      lad::ValidationFailed);

  // A non-primary q is reported with the failing iterate in the message.
  lad::Limits lim;
  lim.truncation_cap = 10;
  LocalIdeal notprimary = make_local_ideal(sys.ring(), {});
  try {
    lad::entropy_run(sys, notprimary, 2, lim);
    FAIL("expected ValidationFailed");
  } catch (const lad::ValidationFailed& e) {
    CHECK(std::string(e.what()).find("not primary") != std::string::npos);
  }

  // lambda_0 is the colength of q itself.
  lad::EntropyRun run = lad::entropy_run(sys, q, 3);
  CHECK(run.lambda0 == 1);
  std::vector<std::uint64_t> expect = {3, 9, 27};
  CHECK(run.report.lengths == expect);
}
