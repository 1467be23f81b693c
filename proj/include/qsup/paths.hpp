// Copyright 2026 The qsup Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSUP_PATHS_HPP_
#define QSUP_PATHS_HPP_

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "qsup/circuit.hpp"

namespace qsup {

// Branches whose gate-entry magnitude falls below 1e-15 contribute nothing at
// the sizes this backend accepts; compared as squared magnitude to avoid the sqrt.
inline constexpr double kPathWeightFloorSq = 1e-30;

namespace internal {

inline Amplitude paths_dfs(const std::vector<Gate>& gates, size_t t, uint64_t cur, Amplitude w, int n,
                           uint64_t target) {
  if (t == gates.size()) return cur == target ? w : Amplitude{0.0};
  const Gate& g = gates[t];
  const int pa = n - g.a;
  const int pb = n - g.b;
  const int s = static_cast<int>(((cur >> pa) & 1u) << 1 | ((cur >> pb) & 1u));
  const uint64_t cleared = cur & ~((uint64_t{1} << pa) | (uint64_t{1} << pb));
  Amplitude sum = 0.0;
  for (int out = 0; out < 4; ++out) {
    const Amplitude entry = g.u[out][s];
    if (std::norm(entry) < kPathWeightFloorSq) continue;
    const uint64_t next = cleared | (static_cast<uint64_t>(out >> 1) << pa) | (static_cast<uint64_t>(out & 1) << pb);
    sum += paths_dfs(gates, t + 1, next, w * entry, n, target);
  }
  return sum;
}

}  // namespace internal

/// Feynman path sum: <y|C|x> by depth-first branching over the 4 post-gate
/// bit assignments at each gate. Time ~4^m, space ~m+n (no 2^n allocation).
inline Amplitude amplitude_paths(const Circuit& circuit, const BasisState& x, const BasisState& y,
                                 bool force = false) {
  circuit.validate();
  if (x.n != circuit.n || y.n != circuit.n) throw std::invalid_argument("state width must equal circuit n");
  if (circuit.n > 62) throw std::invalid_argument("paths backend limited to n <= 62");
  const size_t m = circuit.gates.size();
  if (!force && m > 13) {
    throw std::invalid_argument("path limit exceeded: 4^" + std::to_string(m) + " = " +
                                std::to_string(std::pow(4.0, static_cast<double>(m))) +
                                " > 1e8 operations; use force to override");
  }
  return internal::paths_dfs(circuit.gates, 0, x.index, Amplitude{1.0}, circuit.n, y.index);
}

}  // namespace qsup

#endif  // QSUP_PATHS_HPP_
