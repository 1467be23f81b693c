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

#ifndef QSUP_GRIDCUT_HPP_
#define QSUP_GRIDCUT_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsup/circuit.hpp"
#include "qsup/format.hpp"

namespace qsup {

/// Sub-rectangle of a grid layout, 1-based origin, in layout coordinates.
struct GridRect {
  int row0 = 1;
  int col0 = 1;
  int h = 0;
  int w = 0;

  int cells() const { return h * w; }

  bool contains(const GridLayout& layout, int q) const {
    int r = layout.row(q), c = layout.col(q);
    return r >= row0 && r < row0 + h && c >= col0 && c < col0 + w;
  }
};

struct CutSet {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> side_a;
  std::vector<int> side_b;
};

namespace internal {

inline std::pair<GridRect, GridRect> split_rect(const GridRect& rect) {
  if (rect.h >= rect.w) {
    int hc = rect.h / 2;
    return {GridRect{rect.row0, rect.col0, hc, rect.w}, GridRect{rect.row0 + hc, rect.col0, rect.h - hc, rect.w}};
  }
  int wc = rect.w / 2;
  return {GridRect{rect.row0, rect.col0, rect.h, wc}, GridRect{rect.row0, rect.col0 + wc, rect.h, rect.w - wc}};
}

}  // namespace internal

/// Removes the edges across the longer dimension's midline (between rows
/// floor(h/2) and floor(h/2)+1 of the rectangle, transposed when w > h),
/// leaving two disconnected sub-rectangles.
inline CutSet find_cut(const GridLayout& layout, const GridRect& rect) {
  if (rect.cells() < 2) throw std::invalid_argument("find_cut requires a rectangle with >= 2 cells");
  auto [ra, rb] = internal::split_rect(rect);
  CutSet cut;
  if (rect.h >= rect.w) {
    int boundary_row = rect.row0 + rect.h / 2 - 1;
    for (int c = rect.col0; c < rect.col0 + rect.w; ++c) {
      int q = layout.qubit(boundary_row, c);
      cut.edges.emplace_back(q, q + layout.w);
    }
  } else {
    int boundary_col = rect.col0 + rect.w / 2 - 1;
    for (int r = rect.row0; r < rect.row0 + rect.h; ++r) {
      int q = layout.qubit(r, boundary_col);
      cut.edges.emplace_back(q, q + 1);
    }
  }
  for (int r = ra.row0; r < ra.row0 + ra.h; ++r)
    for (int c = ra.col0; c < ra.col0 + ra.w; ++c) cut.side_a.push_back(layout.qubit(r, c));
  for (int r = rb.row0; r < rb.row0 + rb.h; ++r)
    for (int c = rb.col0; c < rb.col0 + rb.w; ++c) cut.side_b.push_back(layout.qubit(r, c));
  return cut;
}

inline CutSet find_cut(const GridLayout& layout) { return find_cut(layout, GridRect{1, 1, layout.h, layout.w}); }

/// One term of the 16-way gate decomposition O = sum_j scalar_j |out><in|.
struct SingleEntryTerm {
  Amplitude scalar;
  int in_bits = 0;   // x_j: 2*x_a + x_b
  int out_bits = 0;  // y_j: 2*y_a + y_b
};

/// Terms in lexicographic (x_j, y_j) order: term 4*x + y carries <y|O|x>.
inline std::array<SingleEntryTerm, 16> decompose_gate(const Gate& gate) {
  std::array<SingleEntryTerm, 16> out{};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) out[static_cast<size_t>(4 * x + y)] = SingleEntryTerm{gate.u[y][x], x, y};
  return out;
}

namespace internal {

// Generalized gate slot in the cut recursion. All m slots are kept in both
// sub-instances (identity-padded) so slot indices stay aligned throughout.
struct GenGate {
  int8_t kind = 0;  // 0: identity, 1: single-entry |out><in| on qubit a, 2: original two-qubit gate
  int16_t a = 0;
  int16_t b = 0;
  int8_t in_bit = 0;
  int8_t out_bit = 0;
  const Mat4* u = nullptr;
};

inline Amplitude gridcut_node(const GridLayout& layout, const GridRect& rect, const std::vector<GenGate>& gates,
                              uint64_t xi, uint64_t yi, int n, bool force) {
  if (rect.cells() == 1) {
    // Single cell: chase one bit through the surviving slots, O(m).
    const int q = layout.qubit(rect.row0, rect.col0);
    const int p = n - q;
    int cur = static_cast<int>((xi >> p) & 1u);
    for (const GenGate& g : gates) {
      if (g.kind == 0) continue;
      if (g.kind == 2) throw std::logic_error("two-qubit gate left inside a single-cell rectangle");
      if (cur != g.in_bit) return Amplitude{0.0};
      cur = g.out_bit;
    }
    return cur == static_cast<int>((yi >> p) & 1u) ? Amplitude{1.0} : Amplitude{0.0};
  }

  auto [ra, rb] = split_rect(rect);

  // Route every slot to one side; a two-qubit gate across the cut becomes a
  // crossing slot with a single-entry placeholder on each side.
  struct Crossing {
    size_t slot_a;
    size_t slot_b;
    bool high_in_a;  // gate qubit `a` (matrix high bit) lies in side A
    const Mat4* u;
  };
  std::vector<GenGate> base_a, base_b;
  base_a.reserve(gates.size());
  base_b.reserve(gates.size());
  std::vector<Crossing> crossing;
  for (const GenGate& g : gates) {
    if (g.kind == 0) {
      base_a.push_back(g);
      base_b.push_back(g);
      continue;
    }
    if (g.kind == 1) {
      bool in_a = ra.contains(layout, g.a);
      base_a.push_back(in_a ? g : GenGate{});
      base_b.push_back(in_a ? GenGate{} : g);
      continue;
    }
    bool a_in_a = ra.contains(layout, g.a);
    bool b_in_a = ra.contains(layout, g.b);
    if (a_in_a && b_in_a) {
      base_a.push_back(g);
      base_b.push_back(GenGate{});
    } else if (!a_in_a && !b_in_a) {
      base_a.push_back(GenGate{});
      base_b.push_back(g);
    } else {
      GenGate pa{1, static_cast<int16_t>(a_in_a ? g.a : g.b), 0, 0, 0, nullptr};
      GenGate pb{1, static_cast<int16_t>(a_in_a ? g.b : g.a), 0, 0, 0, nullptr};
      crossing.push_back(Crossing{base_a.size(), base_b.size(), a_in_a, g.u});
      base_a.push_back(pa);
      base_b.push_back(pb);
    }
  }

  const size_t R = crossing.size();
  if (!force && R > 6) {
    // 16^7 = 2.68e8 already exceeds the 1e8 budget.
    throw std::runtime_error("gridcut work limit exceeded: |R| = " + std::to_string(R) +
                             " crossing gates, 16^|R| = " + format_double(std::ldexp(1.0, static_cast<int>(4 * R))) +
                             " > 1e8; use force to override");
  }

  // scalar of term j = 16-way decomposition entry <y|O|x>, j = 4x + y
  std::vector<std::array<Amplitude, 16>> alpha(R);
  for (size_t r = 0; r < R; ++r)
    for (int j = 0; j < 16; ++j) alpha[r][static_cast<size_t>(j)] = (*crossing[r].u)[j & 3][j >> 2];

  // A side-A amplitude depends only on the per-gate (in,out) bit pairs that
  // land on side A — the base-4 word sigma — so memoize sides over sigma and
  // share them across the 16^|R| values of tau.
  const size_t memo_size = size_t{1} << (2 * R);
  std::vector<Amplitude> a_vals(memo_size), b_vals(memo_size);
  std::vector<char> a_done(memo_size, 0), b_done(memo_size, 0);
  std::vector<GenGate> work_a = base_a, work_b = base_b;

  auto eval_side = [&](bool side_a, uint64_t sigma) -> Amplitude {
    std::vector<char>& done = side_a ? a_done : b_done;
    std::vector<Amplitude>& vals = side_a ? a_vals : b_vals;
    if (!done[sigma]) {
      std::vector<GenGate>& work = side_a ? work_a : work_b;
      for (size_t r = 0; r < R; ++r) {
        int digit = static_cast<int>((sigma >> (2 * r)) & 3u);
        GenGate& slot = work[side_a ? crossing[r].slot_a : crossing[r].slot_b];
        slot.in_bit = static_cast<int8_t>(digit >> 1);
        slot.out_bit = static_cast<int8_t>(digit & 1);
      }
      vals[sigma] = gridcut_node(layout, side_a ? ra : rb, work, xi, yi, n, force);
      done[sigma] = 1;
    }
    return vals[sigma];
  };

  // tau runs as a mixed-radix base-16 counter (first crossing gate = least
  // significant digit); the digit recursion below visits leaves in ascending
  // counter order and prunes whole prefixes with an exactly zero scalar.
  Amplitude total = 0.0;
  std::function<void(int, Amplitude, uint64_t, uint64_t)> sum_tau = [&](int pos, Amplitude prod, uint64_t sig_a,
                                                                        uint64_t sig_b) {
    if (pos < 0) {
      total += prod * eval_side(true, sig_a) * eval_side(false, sig_b);
      return;
    }
    const auto& table = alpha[static_cast<size_t>(pos)];
    for (int j = 0; j < 16; ++j) {
      const Amplitude& scalar = table[static_cast<size_t>(j)];
      if (scalar == Amplitude{0.0}) continue;
      const int xa = (j >> 3) & 1, xb = (j >> 2) & 1, ya = (j >> 1) & 1, yb = j & 1;
      const int digit_high = (xa << 1) | ya;  // gate qubit a
      const int digit_low = (xb << 1) | yb;   // gate qubit b
      const uint64_t da = static_cast<uint64_t>(crossing[static_cast<size_t>(pos)].high_in_a ? digit_high : digit_low);
      const uint64_t db = static_cast<uint64_t>(crossing[static_cast<size_t>(pos)].high_in_a ? digit_low : digit_high);
      sum_tau(pos - 1, prod * scalar, sig_a | (da << (2 * pos)), sig_b | (db << (2 * pos)));
    }
  };
  sum_tau(static_cast<int>(R) - 1, Amplitude{1.0}, 0, 0);
  return total;
}

}  // namespace internal

/// Grid divide-and-conquer amplitude <y|C|x>: cut the rectangle, expand each
/// crossing gate into 16 single-entry terms, recurse on the two independent
/// sides, and sum side products over all crossing-term assignments tau.
inline Amplitude amplitude_gridcut(const LayeredCircuit& layered, const BasisState& x, const BasisState& y,
                                   bool force = false) {
  const Circuit& circuit = layered.circuit;
  circuit.validate();
  if (!circuit.layout) throw std::invalid_argument("gridcut backend requires a grid layout");
  if (x.n != circuit.n || y.n != circuit.n) throw std::invalid_argument("state width must equal circuit n");
  std::vector<internal::GenGate> gates;
  gates.reserve(circuit.gates.size());
  for (const Gate& g : circuit.gates)
    gates.push_back(internal::GenGate{2, static_cast<int16_t>(g.a), static_cast<int16_t>(g.b), 0, 0, &g.u});
  GridRect rect{1, 1, circuit.layout->h, circuit.layout->w};
  return internal::gridcut_node(*circuit.layout, rect, gates, x.index, y.index, circuit.n, force);
}

}  // namespace qsup

#endif  // QSUP_GRIDCUT_HPP_
