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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>

namespace lad {

// Resource caps threaded through every potentially expensive operation.
// Hitting a cap is a hard ResourceExceeded / NotFiniteColength error; the
// library never silently degrades an answer. `trace`, when set, receives
// one line per certified colength so stabilization levels can be audited.
struct Limits {
  std::size_t gb_basis_cap = 10000;        // max intermediate basis size
  std::uint32_t gb_degree_cap = 4096;      // max leading-monomial total degree
  int truncation_cap = 128;                // max m^N level for colengths
  std::size_t breadth_cap = 10000;         // max materialized m^N generators
  std::size_t oracle_column_cap = 30000;   // char-2 oracle matrix columns
  std::size_t oracle_dense_column_cap = 4000;  // general-p oracle columns
  std::function<void(std::string_view)> trace;  // optional audit sink

  void emit(std::string_view line) const {
    if (trace) trace(line);
  }
};

}  // namespace lad
