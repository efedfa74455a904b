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
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lad/dynamics.hpp"

namespace lad {

// Estimates of the local entropy from a finite length sequence. All
// logarithms are natural. The headline is the last successive-ratio
// estimate, which is exact at finite n whenever the lengths grow
// geometrically — the behavior of every known closed-form family — and a
// heuristic otherwise. The Fekete running minimum is always a valid upper
// bound for the limit (the log-lengths are subadditive).
struct EntropyReport {
  std::vector<std::uint64_t> lengths;     // lambda_n for n = 1..n_max
  std::vector<double> naive;              // (1/n) log lambda_n
  std::vector<double> fekete;             // running min of naive
  std::vector<double> ratio;              // log(lambda_{n+1}/lambda_n)
  double headline = 0.0;
  std::optional<std::uint64_t> exact_ratio;  // k when lambda_{n+1} = k*lambda_n
};

inline EntropyReport estimate_entropy(
    const std::vector<std::uint64_t>& lengths) {
  if (lengths.empty())
    throw ValidationFailed("estimate_entropy: empty length sequence");
  for (std::uint64_t l : lengths)
    if (l == 0)
      throw ValidationFailed("estimate_entropy: lengths must be positive");

  EntropyReport rep;
  rep.lengths = lengths;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    double est = std::log(static_cast<double>(lengths[i])) /
                 static_cast<double>(i + 1);
    rep.naive.push_back(est);
    rep.fekete.push_back(rep.fekete.empty()
                             ? est
                             : std::min(rep.fekete.back(), est));
  }
  for (std::size_t i = 0; i + 1 < lengths.size(); ++i)
    rep.ratio.push_back(std::log(static_cast<double>(lengths[i + 1]) /
                                 static_cast<double>(lengths[i])));
  rep.headline = rep.ratio.empty() ? rep.naive.back() : rep.ratio.back();

  if (lengths.size() >= 2) {
    bool constant = true;
    std::uint64_t k = 0;
    for (std::size_t i = 0; i + 1 < lengths.size() && constant; ++i) {
      if (lengths[i + 1] % lengths[i] != 0) {
        constant = false;
        break;
      }
      std::uint64_t q = lengths[i + 1] / lengths[i];
      if (i == 0)
        k = q;
      else if (q != k)
        constant = false;
    }
    if (constant) rep.exact_ratio = k;
  }
  return rep;
}

// lambda_n = local colength of I + phi^n(q) for n = 1..n_max. Errors from a
// failing index are re-thrown with the index attached.
inline std::vector<std::uint64_t> length_sequence(const DynamicalSystem& sys,
                                                  const LocalIdeal& q,
                                                  std::uint32_t n_max,
                                                  const Limits& limits = {}) {
  if (n_max == 0)
    throw ValidationFailed("length_sequence: n_max must be positive");
  if (!sys.validated_finite_length)
    throw ValidationFailed(
        "length_sequence: the system is not validated finite-length");
  std::vector<std::uint64_t> lengths;
  Endomorphism current = sys.endo;  // phi^n as n advances
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    try {
      std::vector<Polynomial> image_gens;
      image_gens.reserve(q.gens.size());
      for (const Polynomial& g : q.gens)
        image_gens.push_back(apply_endo(current, g));
      lengths.push_back(
          local_colength(LocalIdeal{sys.ring(), image_gens}, limits));
    } catch (const NotFiniteColength& e) {
      throw NotFiniteColength(std::string(e.what()) + " (at iterate n=" +
                              std::to_string(n) + ")");
    } catch (const ResourceExceeded& e) {
      throw ResourceExceeded(std::string(e.what()) + " (at iterate n=" +
                             std::to_string(n) + ")");
    }
    if (n < n_max) current = compose(current, sys.endo);
  }
  return lengths;
}

// Full pipeline: validate q, compute the sequence, estimate. lambda_0 (the
// colength of q itself) is returned alongside for human-readable reports.
struct EntropyRun {
  std::uint64_t lambda0 = 0;
  EntropyReport report;
};

inline EntropyRun entropy_run(const DynamicalSystem& sys, const LocalIdeal& q,
                              std::uint32_t n_max, const Limits& limits = {}) {
  EntropyRun run;
  try {
    run.lambda0 = local_colength(q, limits);
  } catch (const NotFiniteColength&) {
    throw ValidationFailed(
        "entropy: the chosen ideal is not primary to the maximal ideal "
        "(its colength did not stabilize)");
  }
  run.report = estimate_entropy(length_sequence(sys, q, n_max, limits));
  return run;
}

}  // namespace lad
