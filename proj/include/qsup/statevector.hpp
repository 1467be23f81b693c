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

#ifndef QSUP_STATEVECTOR_HPP_
#define QSUP_STATEVECTOR_HPP_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qsup/circuit.hpp"

namespace qsup {

/// Full 2^n-dimensional state, indexed with qubit 1 as the most significant
/// bit (amps[x] = <x|psi> for basis index x).
struct StateVector {
  int n = 0;
  std::vector<Amplitude> amps;

  static StateVector basis(int n, uint64_t index = 0) {
    StateVector s{n, std::vector<Amplitude>(uint64_t{1} << n)};
    s.amps[index] = 1.0;
    return s;
  }
};

/// Applies a 2x2 matrix at bit position p of the index (p counted from the
/// least significant bit). Each amplitude is written exactly once.
inline void apply_mat2_at(std::vector<Amplitude>& amps, int p, const Mat2& m) {
  const uint64_t mp = uint64_t{1} << p;
  const uint64_t count = amps.size() >> 1;
  for (uint64_t t = 0; t < count; ++t) {
    const uint64_t lo = t & (mp - 1);
    const uint64_t i0 = ((t ^ lo) << 1) | lo;
    const uint64_t i1 = i0 | mp;
    const Amplitude a0 = amps[i0];
    const Amplitude a1 = amps[i1];
    amps[i0] = m[0][0] * a0 + m[0][1] * a1;
    amps[i1] = m[1][0] * a0 + m[1][1] * a1;
  }
}

/// Applies a 4x4 matrix with pa as the high bit and pb as the low bit of the
/// 2-bit gate index; pa and pb are distinct index bit positions.
inline void apply_mat4_at(std::vector<Amplitude>& amps, int pa, int pb, const Mat4& u) {
  const uint64_t ma = uint64_t{1} << pa;
  const uint64_t mb = uint64_t{1} << pb;
  const uint64_t mlo = pa < pb ? ma : mb;
  const uint64_t mhi = pa < pb ? mb : ma;
  const uint64_t count = amps.size() >> 2;
  for (uint64_t t = 0; t < count; ++t) {
    // Expand t by inserting zero bits at the two gate positions.
    const uint64_t r = t & (mlo - 1);
    const uint64_t mid = (t ^ r) << 1;
    const uint64_t r2 = mid & (mhi - 1);
    const uint64_t base = ((mid ^ r2) << 1) | r2 | r;
    const uint64_t i00 = base;
    const uint64_t i01 = base | mb;
    const uint64_t i10 = base | ma;
    const uint64_t i11 = base | ma | mb;
    const Amplitude a00 = amps[i00];
    const Amplitude a01 = amps[i01];
    const Amplitude a10 = amps[i10];
    const Amplitude a11 = amps[i11];
    amps[i00] = u[0][0] * a00 + u[0][1] * a01 + u[0][2] * a10 + u[0][3] * a11;
    amps[i01] = u[1][0] * a00 + u[1][1] * a01 + u[1][2] * a10 + u[1][3] * a11;
    amps[i10] = u[2][0] * a00 + u[2][1] * a01 + u[2][2] * a10 + u[2][3] * a11;
    amps[i11] = u[3][0] * a00 + u[3][1] * a01 + u[3][2] * a10 + u[3][3] * a11;
  }
}

/// Applies a two-qubit gate in place: qubit q lives at index bit n-q.
inline void apply_gate_in_place(StateVector& state, const Gate& gate) {
  if (gate.a < 1 || gate.a > state.n || gate.b < 1 || gate.b > state.n || gate.a == gate.b)
    throw std::invalid_argument("gate qubits must be distinct and within 1..n");
  apply_mat4_at(state.amps, state.n - gate.a, state.n - gate.b, gate.u);
}

inline StateVector apply_gate(StateVector state, const Gate& gate) {
  apply_gate_in_place(state, gate);
  return state;
}

}  // namespace qsup

#endif  // QSUP_STATEVECTOR_HPP_
