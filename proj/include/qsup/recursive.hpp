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

#ifndef QSUP_RECURSIVE_HPP_
#define QSUP_RECURSIVE_HPP_

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsup/circuit.hpp"
#include "qsup/gridcut.hpp"
#include "qsup/statevector.hpp"

namespace qsup {

// (2d)^(n+1) cost: n = 12 with d = 8 is ~6e14 at the theoretical worst, but
// the zero-product skip keeps observed small-n runs far below that.
inline constexpr int kMaxSavitchQubits = 12;

namespace internal {

/// <y|L|x> for a single layer L: product of the touched gates' matrix entries
/// times the indicator that untouched bits agree. O(n).
inline Amplitude layer_amplitude(const LayeredCircuit& lc, int layer, uint64_t xi, uint64_t yi) {
  const int n = lc.circuit.n;
  uint64_t touched = 0;
  Amplitude prod = 1.0;
  const LayerRange& range = lc.layers[static_cast<size_t>(layer)];
  for (int gi = range.begin; gi < range.end; ++gi) {
    const Gate& g = lc.circuit.gates[static_cast<size_t>(gi)];
    const int pa = n - g.a;
    const int pb = n - g.b;
    touched |= (uint64_t{1} << pa) | (uint64_t{1} << pb);
    const int row = static_cast<int>(((yi >> pa) & 1u) << 1 | ((yi >> pb) & 1u));
    const int col = static_cast<int>(((xi >> pa) & 1u) << 1 | ((xi >> pb) & 1u));
    prod *= g.u[row][col];
  }
  const uint64_t all = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  if (((xi ^ yi) & all & ~touched) != 0) return Amplitude{0.0};
  return prod;
}

/// Layer-halving recursion over layers l..r (0-based, inclusive): the lower
/// half takes ceil(d/2) layers; z runs in ascending index order and terms
/// accumulate in that fixed order.
inline Amplitude savitch_range(const LayeredCircuit& lc, int l, int r, uint64_t xi, uint64_t yi) {
  const int d = r - l + 1;
  if (d <= 0) return xi == yi ? Amplitude{1.0} : Amplitude{0.0};
  if (d == 1) return layer_amplitude(lc, l, xi, yi);
  const int mid = l + (d + 1) / 2 - 1;
  const uint64_t dim = uint64_t{1} << lc.circuit.n;
  Amplitude sum = 0.0;
  for (uint64_t z = 0; z < dim; ++z) {
    const Amplitude lower = savitch_range(lc, l, mid, xi, z);
    if (lower == Amplitude{0.0}) continue;
    sum += savitch_range(lc, mid + 1, r, z, yi) * lower;
  }
  return sum;
}

}  // namespace internal

/// <y|C|x> in poly space by recursive layer halving; time O(n (2d)^(n+1)).
inline Amplitude amplitude_savitch(const LayeredCircuit& layered, const BasisState& x, const BasisState& y,
                                   bool force = false) {
  layered.circuit.validate();
  const int n = layered.circuit.n;
  if (x.n != n || y.n != n) throw std::invalid_argument("state width must equal circuit n");
  if (n > kMaxSavitchQubits && !force)
    throw std::invalid_argument("savitch backend limited to n <= " + std::to_string(kMaxSavitchQubits) +
                                " (got n = " + std::to_string(n) + "); use force to override");
  return internal::savitch_range(layered, 0, layered.depth() - 1, x.index, y.index);
}

namespace internal {

struct BlockSpace {
  int n = 0;
  int k = 0;  // block index = first k bits; suffix vector spans the rest

  int suffix_bits() const { return n - k; }
  uint64_t suffix_dim() const { return uint64_t{1} << suffix_bits(); }
  uint64_t blocks() const { return uint64_t{1} << k; }
};

/// Applies layer `layer` to the suffix vector of input block s, projecting
/// onto output block t. Prefix-qubit bits are fixed by the blocks: a gate
/// entirely inside the prefix contributes a scalar, a gate straddling the
/// boundary restricts to a 2x2 matrix on its suffix qubit, and a gate inside
/// the suffix applies its full 4x4 kernel. Untouched prefix bits must agree.
inline std::vector<Amplitude> apply_layer_block(const LayeredCircuit& lc, int layer, const BlockSpace& bs, uint64_t s,
                                                uint64_t t, const std::vector<Amplitude>& vec) {
  const int n = bs.n, k = bs.k, nk = bs.suffix_bits();
  std::vector<Amplitude> out = vec;
  Amplitude scalar = 1.0;
  uint64_t touched_prefix = 0;
  const LayerRange& range = lc.layers[static_cast<size_t>(layer)];
  for (int gi = range.begin; gi < range.end; ++gi) {
    const Gate& g = lc.circuit.gates[static_cast<size_t>(gi)];
    const bool a_pre = g.a <= k;
    const bool b_pre = g.b <= k;
    if (a_pre && b_pre) {
      const int sa = static_cast<int>((s >> (k - g.a)) & 1u), sb = static_cast<int>((s >> (k - g.b)) & 1u);
      const int ta = static_cast<int>((t >> (k - g.a)) & 1u), tb = static_cast<int>((t >> (k - g.b)) & 1u);
      scalar *= g.u[2 * ta + tb][2 * sa + sb];
      touched_prefix |= (uint64_t{1} << (k - g.a)) | (uint64_t{1} << (k - g.b));
    } else if (!a_pre && !b_pre) {
      apply_mat4_at(out, nk - (g.a - k), nk - (g.b - k), g.u);
    } else {
      const int qp = a_pre ? g.a : g.b;
      const int qs = a_pre ? g.b : g.a;
      const int xp = static_cast<int>((s >> (k - qp)) & 1u);
      const int yp = static_cast<int>((t >> (k - qp)) & 1u);
      Mat2 m{};
      for (int yq = 0; yq < 2; ++yq)
        for (int xq = 0; xq < 2; ++xq)
          m[yq][xq] = a_pre ? g.u[2 * yp + yq][2 * xp + xq] : g.u[2 * yq + yp][2 * xq + xp];
      apply_mat2_at(out, nk - (qs - k), m);
      touched_prefix |= uint64_t{1} << (k - qp);
    }
  }
  const uint64_t prefix_all = k == 0 ? 0 : (uint64_t{1} << k) - 1;
  if (((s ^ t) & prefix_all & ~touched_prefix) != 0) return std::vector<Amplitude>(out.size(), Amplitude{0.0});
  if (scalar != Amplitude{1.0})
    for (auto& a : out) a *= scalar;
  return out;
}

inline bool all_zero(const std::vector<Amplitude>& v) {
  for (const Amplitude& a : v)
    if (a != Amplitude{0.0}) return false;
  return true;
}

/// Block-projected evolution over layers l..r: component in block t of
/// C_{[r..l]} applied to (block s, suffix vector vec).
inline std::vector<Amplitude> tradeoff_range(const LayeredCircuit& lc, const BlockSpace& bs, int l, int r, uint64_t s,
                                             uint64_t t, const std::vector<Amplitude>& vec) {
  const int d = r - l + 1;
  if (d <= 0) {
    if (s == t) return vec;
    return std::vector<Amplitude>(vec.size(), Amplitude{0.0});
  }
  if (d == 1) return apply_layer_block(lc, l, bs, s, t, vec);
  const int mid = l + (d + 1) / 2 - 1;
  std::vector<Amplitude> acc(vec.size(), Amplitude{0.0});
  for (uint64_t z = 0; z < bs.blocks(); ++z) {
    std::vector<Amplitude> lower = tradeoff_range(lc, bs, l, mid, s, z, vec);
    if (all_zero(lower)) continue;
    std::vector<Amplitude> upper = tradeoff_range(lc, bs, mid + 1, r, z, t, lower);
    for (size_t i = 0; i < acc.size(); ++i) acc[i] += upper[i];
  }
  return acc;
}

}  // namespace internal

/// Space-time tradeoff: Hilbert space split into 2^k blocks sharing their
/// first k bits; time O(n 2^(n-k) (2d)^(k+1)), space O(2^(n-k) log d).
/// k = 0 degenerates to layer-by-layer dense evolution, k = n to the
/// layer-halving recursion over basis states.
inline Amplitude amplitude_tradeoff(const LayeredCircuit& layered, const BasisState& x, const BasisState& y, int k,
                                    bool force = false) {
  layered.circuit.validate();
  const int n = layered.circuit.n;
  if (x.n != n || y.n != n) throw std::invalid_argument("state width must equal circuit n");
  if (k < 0 || k > n) throw std::invalid_argument("block bits k must satisfy 0 <= k <= n");
  if (n - k > 26 && !force)
    throw std::invalid_argument("tradeoff backend memory limit: 2^(n-k) exceeds 2^26; use force to override");
  internal::BlockSpace bs{n, k};
  const uint64_t suffix_mask = bs.suffix_dim() - 1;
  const uint64_t xw = x.index >> bs.suffix_bits();
  const uint64_t yw = y.index >> bs.suffix_bits();
  std::vector<Amplitude> vec(bs.suffix_dim(), Amplitude{0.0});
  vec[x.index & suffix_mask] = 1.0;
  std::vector<Amplitude> out = internal::tradeoff_range(layered, bs, 0, layered.depth() - 1, xw, yw, vec);
  return out[y.index & suffix_mask];
}

namespace internal {

inline Amplitude hybrid_range(const LayeredCircuit& lc, int l, int r, uint64_t xi, uint64_t yi, double c, bool force) {
  const int d = r - l + 1;
  const int n = lc.circuit.n;
  if (d <= 0) return xi == yi ? Amplitude{1.0} : Amplitude{0.0};
  if (lc.circuit.layout && static_cast<double>(d) <= c * std::sqrt(static_cast<double>(n))) {
    LayeredCircuit sub = slice(lc, l + 1, r + 1);
    return amplitude_gridcut(sub, BasisState{n, xi}, BasisState{n, yi}, force);
  }
  if (d == 1) return layer_amplitude(lc, l, xi, yi);
  const int mid = l + (d + 1) / 2 - 1;
  const uint64_t dim = uint64_t{1} << n;
  Amplitude sum = 0.0;
  for (uint64_t z = 0; z < dim; ++z) {
    const Amplitude lower = hybrid_range(lc, l, mid, xi, z, c, force);
    if (lower == Amplitude{0.0}) continue;
    sum += hybrid_range(lc, mid + 1, r, z, yi, c, force) * lower;
  }
  return sum;
}

}  // namespace internal

/// Layer-halving recursion that delegates to the grid-cut backend once the
/// current slice is no deeper than c*sqrt(n). Without a layout this is plain
/// amplitude_savitch.
inline Amplitude amplitude_hybrid(const LayeredCircuit& layered, const BasisState& x, const BasisState& y,
                                  double c = 1.0, bool force = false) {
  layered.circuit.validate();
  const int n = layered.circuit.n;
  if (x.n != n || y.n != n) throw std::invalid_argument("state width must equal circuit n");
  if (c <= 0) throw std::invalid_argument("depth-cut coefficient c must be positive");
  if (!layered.circuit.layout) return amplitude_savitch(layered, x, y, force);
  const int d = layered.depth();
  const bool delegates_whole = static_cast<double>(d) <= c * std::sqrt(static_cast<double>(n));
  if (!delegates_whole && n > kMaxSavitchQubits && !force)
    throw std::invalid_argument("hybrid backend limited to n <= " + std::to_string(kMaxSavitchQubits) +
                                " when splitting layers (got n = " + std::to_string(n) +
                                "); use force to override");
  return internal::hybrid_range(layered, 0, d - 1, x.index, y.index, c, force);
}

}  // namespace qsup

#endif  // QSUP_RECURSIVE_HPP_
