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

#ifndef QSUP_CIRCUIT_HPP_
#define QSUP_CIRCUIT_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsup {

using Amplitude = std::complex<double>;

template <std::size_t Dim>
using SquareMatrix = std::array<std::array<Amplitude, Dim>, Dim>;

using Mat2 = SquareMatrix<2>;
using Mat4 = SquareMatrix<4>;

template <std::size_t Dim>
constexpr SquareMatrix<Dim> identity_matrix() {
  SquareMatrix<Dim> m{};
  for (std::size_t i = 0; i < Dim; ++i) m[i][i] = 1.0;
  return m;
}

template <std::size_t Dim>
SquareMatrix<Dim> matmul(const SquareMatrix<Dim>& a, const SquareMatrix<Dim>& b) {
  SquareMatrix<Dim> out{};
  for (std::size_t r = 0; r < Dim; ++r)
    for (std::size_t k = 0; k < Dim; ++k)
      for (std::size_t c = 0; c < Dim; ++c) out[r][c] += a[r][k] * b[k][c];
  return out;
}

template <std::size_t Dim>
SquareMatrix<Dim> adjoint(const SquareMatrix<Dim>& a) {
  SquareMatrix<Dim> out{};
  for (std::size_t r = 0; r < Dim; ++r)
    for (std::size_t c = 0; c < Dim; ++c) out[r][c] = std::conj(a[c][r]);
  return out;
}

/// max |(A†A - I)_{rc}| — zero for an exactly unitary matrix.
template <std::size_t Dim>
double unitarity_error(const SquareMatrix<Dim>& a) {
  SquareMatrix<Dim> p = matmul(adjoint(a), a);
  double worst = 0.0;
  for (std::size_t r = 0; r < Dim; ++r)
    for (std::size_t c = 0; c < Dim; ++c) {
      double d = std::abs(p[r][c] - (r == c ? Amplitude{1.0} : Amplitude{0.0}));
      if (d > worst) worst = d;
    }
  return worst;
}

inline Mat2 pauli_x() {
  Mat2 m{};
  m[0][1] = 1.0;
  m[1][0] = 1.0;
  return m;
}

/// Kronecker product; the first operand owns the high bit, matching the gate
/// matrix convention (bit of qubit a = high bit, bit of qubit b = low bit).
inline Mat4 kron2(const Mat2& hi, const Mat2& lo) {
  Mat4 out{};
  for (int r1 = 0; r1 < 2; ++r1)
    for (int c1 = 0; c1 < 2; ++c1)
      for (int r0 = 0; r0 < 2; ++r0)
        for (int c0 = 0; c0 < 2; ++c0) out[2 * r1 + r0][2 * c1 + c0] = hi[r1][c1] * lo[r0][c0];
  return out;
}

/// Computational basis state of n qubits. Qubit 1 is the most significant bit
/// of the index: index = sum_i bits_i * 2^(n-i).
struct BasisState {
  int n = 0;
  uint64_t index = 0;

  static BasisState from_bits(std::string_view bits) {
    if (bits.empty() || bits.size() > 64) throw std::invalid_argument("bitstring length must be in [1, 64]");
    BasisState s{static_cast<int>(bits.size()), 0};
    for (char c : bits) {
      if (c != '0' && c != '1') throw std::invalid_argument("bitstring may contain only 0 and 1");
      s.index = (s.index << 1) | static_cast<uint64_t>(c - '0');
    }
    return s;
  }

  static BasisState zeros(int n) { return BasisState{n, 0}; }

  std::string to_bits() const {
    std::string out(static_cast<size_t>(n), '0');
    for (int i = 1; i <= n; ++i) out[static_cast<size_t>(i - 1)] = static_cast<char>('0' + bit(i));
    return out;
  }

  /// Bit of qubit q (1-based; qubit 1 = MSB).
  int bit(int q) const { return static_cast<int>((index >> (n - q)) & 1u); }
};

/// Two-qubit gate on the ordered pair (a, b). The 4x4 matrix is indexed with
/// the bit of qubit a as the high bit and the bit of qubit b as the low bit:
/// <y_a y_b|O|x_a x_b> = u[2*y_a + y_b][2*x_a + x_b].
struct Gate {
  int a = 0;
  int b = 0;
  Mat4 u{};
};

/// Rectangular qubit layout: qubit i occupies cell (ceil(i/w), ((i-1) mod w)+1),
/// rows and columns 1-based.
struct GridLayout {
  int h = 0;
  int w = 0;

  int row(int q) const { return (q - 1) / w + 1; }
  int col(int q) const { return (q - 1) % w + 1; }
  int qubit(int r, int c) const { return (r - 1) * w + c; }

  /// Grid adjacency: cells differ by exactly 1 in one coordinate.
  bool adjacent(int p, int q) const {
    int dr = row(p) - row(q), dc = col(p) - col(q);
    return std::abs(dr) + std::abs(dc) == 1;
  }

  std::vector<int> neighbors(int q) const {
    std::vector<int> out;
    int r = row(q), c = col(q);
    if (r > 1) out.push_back(qubit(r - 1, c));
    if (r < h) out.push_back(qubit(r + 1, c));
    if (c > 1) out.push_back(qubit(r, c - 1));
    if (c < w) out.push_back(qubit(r, c + 1));
    return out;
  }

  /// All grid edges in a fixed row-major order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int r = 1; r <= h; ++r)
      for (int c = 1; c <= w; ++c) {
        int q = qubit(r, c);
        if (c < w) out.emplace_back(q, q + 1);
        if (r < h) out.emplace_back(q, q + w);
      }
    return out;
  }
};

struct Circuit {
  int n = 0;
  std::vector<Gate> gates;
  std::optional<GridLayout> layout;

  /// Throws std::invalid_argument on any structural violation.
  void validate() const {
    if (n < 1) throw std::invalid_argument("circuit must have n >= 1 qubits");
    if (layout) {
      if (layout->h < 1 || layout->w < 1 || layout->h * layout->w != n)
        throw std::invalid_argument("grid layout must satisfy h*w = n with h, w >= 1");
    }
    for (size_t i = 0; i < gates.size(); ++i) {
      const Gate& g = gates[i];
      std::string where = "gate " + std::to_string(i + 1) + ": ";
      if (g.a < 1 || g.a > n || g.b < 1 || g.b > n) throw std::invalid_argument(where + "qubit index out of range");
      if (g.a == g.b) throw std::invalid_argument(where + "gate qubits must be distinct");
      if (unitarity_error(g.u) >= 1e-12) throw std::invalid_argument(where + "matrix is not unitary");
      if (layout && !layout->adjacent(g.a, g.b))
        throw std::invalid_argument(where + "qubits (" + std::to_string(g.a) + "," + std::to_string(g.b) +
                                    ") are not grid-adjacent");
    }
  }
};

/// Half-open range of gate indices [begin, end) forming one layer.
struct LayerRange {
  int begin = 0;
  int end = 0;
};

/// Chronological layer partition: layers cover the gate list contiguously and
/// in order, and gates within a layer act on pairwise-disjoint qubit pairs.
struct LayeredCircuit {
  Circuit circuit;
  std::vector<LayerRange> layers;

  int depth() const { return static_cast<int>(layers.size()); }
};

/// Greedy earliest-fit layering: scan gates chronologically, extending the
/// current layer while the next gate touches no qubit already used in it.
/// Layers stay contiguous in gate index, which the sub-circuit slicing
/// machinery relies on.
inline LayeredCircuit layering(const Circuit& circuit) {
  LayeredCircuit out{circuit, {}};
  std::vector<char> used(static_cast<size_t>(circuit.n) + 1, 0);
  int begin = 0;
  for (int i = 0; i < static_cast<int>(circuit.gates.size()); ++i) {
    const Gate& g = circuit.gates[static_cast<size_t>(i)];
    if (used[static_cast<size_t>(g.a)] || used[static_cast<size_t>(g.b)]) {
      out.layers.push_back({begin, i});
      std::fill(used.begin(), used.end(), 0);
      begin = i;
    }
    used[static_cast<size_t>(g.a)] = used[static_cast<size_t>(g.b)] = 1;
  }
  if (!circuit.gates.empty()) out.layers.push_back({begin, static_cast<int>(circuit.gates.size())});
  return out;
}

/// Sub-circuit C_{[r<-l]}: layers l..r (1-based, inclusive) with the layer
/// structure preserved and gate indices rebased.
inline LayeredCircuit slice(const LayeredCircuit& layered, int l, int r) {
  int d = layered.depth();
  if (l < 1 || r > d || l > r) throw std::invalid_argument("slice range must satisfy 1 <= l <= r <= d");
  int gate_begin = layered.layers[static_cast<size_t>(l - 1)].begin;
  int gate_end = layered.layers[static_cast<size_t>(r - 1)].end;
  LayeredCircuit out;
  out.circuit.n = layered.circuit.n;
  out.circuit.layout = layered.circuit.layout;
  out.circuit.gates.assign(layered.circuit.gates.begin() + gate_begin, layered.circuit.gates.begin() + gate_end);
  for (int i = l - 1; i < r; ++i)
    out.layers.push_back({layered.layers[static_cast<size_t>(i)].begin - gate_begin,
                          layered.layers[static_cast<size_t>(i)].end - gate_begin});
  return out;
}

}  // namespace qsup

#endif  // QSUP_CIRCUIT_HPP_
