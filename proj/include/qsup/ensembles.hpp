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

#ifndef QSUP_ENSEMBLES_HPP_
#define QSUP_ENSEMBLES_HPP_

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsup/circuit.hpp"
#include "qsup/rng.hpp"
#include "qsup/statevector.hpp"

namespace qsup {

/// Haar-random unitary via complex Ginibre + Gram-Schmidt QR. Modified
/// Gram-Schmidt normalizes each residual column, so the R diagonal is
/// positive-real by construction and no separate phase correction is needed.
/// A second orthogonalization pass keeps the unitarity error near machine eps.
template <int Dim>
SquareMatrix<Dim> haar_unitary(RngStream& rng) {
  static_assert(Dim == 2 || Dim == 4, "haar_unitary supports dim 2 and 4");
  SquareMatrix<Dim> g{};
  for (int r = 0; r < Dim; ++r)
    for (int c = 0; c < Dim; ++c) {
      double re = rng.next_normal();
      double im = rng.next_normal();
      g[r][c] = Amplitude(re, im);
    }
  for (int c = 0; c < Dim; ++c) {
    for (int pass = 0; pass < 2; ++pass)
      for (int p = 0; p < c; ++p) {
        Amplitude dot = 0.0;
        for (int r = 0; r < Dim; ++r) dot += std::conj(g[r][p]) * g[r][c];
        for (int r = 0; r < Dim; ++r) g[r][c] -= dot * g[r][p];
      }
    double norm = 0.0;
    for (int r = 0; r < Dim; ++r) norm += std::norm(g[r][c]);
    norm = std::sqrt(norm);
    for (int r = 0; r < Dim; ++r) g[r][c] /= norm;
  }
  return g;
}

/// Haar-random pure state: 2*dim i.i.d. standard normals, normalized.
inline std::vector<Amplitude> haar_state(uint64_t dim, RngStream& rng) {
  if (dim < 2 || (dim & (dim - 1)) != 0) throw std::invalid_argument("haar_state dim must be a power of two >= 2");
  std::vector<Amplitude> v(dim);
  double norm = 0.0;
  for (uint64_t i = 0; i < dim; ++i) {
    double re = rng.next_normal();
    double im = rng.next_normal();
    v[i] = Amplitude(re, im);
    norm += std::norm(v[i]);
  }
  norm = std::sqrt(norm);
  for (auto& a : v) a /= norm;
  return v;
}

struct EnsembleSpec {
  enum class Kind { grid, general, grid_conditional };
  Kind kind = Kind::grid;
  int n = 0;
  int m = 0;
  double threshold = 0.7;  // grid_conditional only
  int max_attempts = 1000;  // grid_conditional only
};

inline int grid_side(int n) {
  int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  if (s * s != n) throw std::invalid_argument("n must be a perfect square");
  return s;
}

/// mu_grid^{n,m}: sqrt(n) x sqrt(n) grid. Gates 1..n pair qubit t with a
/// uniform grid neighbor (so every qubit is touched at least once); gates
/// n+1..m pick a uniform grid edge. Every matrix is Haar on U(4).
inline Circuit sample_mu_grid(int n, int m, RngStream& rng) {
  int side = grid_side(n);
  if (n < 4) throw std::invalid_argument("n must be a perfect square >= 4");
  if (m < n) throw std::invalid_argument("m must be >= n");
  Circuit circuit;
  circuit.n = n;
  circuit.layout = GridLayout{side, side};
  circuit.gates.reserve(static_cast<size_t>(m));
  const auto edges = circuit.layout->edges();
  for (int t = 1; t <= m; ++t) {
    Gate g;
    if (t <= n) {
      auto nbrs = circuit.layout->neighbors(t);
      g.a = t;
      g.b = nbrs[rng.next_below(nbrs.size())];
    } else {
      const auto& e = edges[rng.next_below(edges.size())];
      g.a = e.first;
      g.b = e.second;
    }
    g.u = haar_unitary<4>(rng);
    circuit.gates.push_back(g);
  }
  return circuit;
}

/// mu_general: each gate acts on a uniform unordered pair of distinct qubits
/// (stored low-index first) with a Haar U(4) matrix; no layout.
inline Circuit sample_mu_general(int n, int m, RngStream& rng) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  Circuit circuit;
  circuit.n = n;
  circuit.gates.reserve(static_cast<size_t>(m));
  const uint64_t pairs = static_cast<uint64_t>(n) * (n - 1) / 2;
  for (int t = 0; t < m; ++t) {
    uint64_t k = rng.next_below(pairs);
    int lo = 1;
    while (k >= static_cast<uint64_t>(n - lo)) {
      k -= static_cast<uint64_t>(n - lo);
      ++lo;
    }
    Gate g;
    g.a = lo;
    g.b = lo + 1 + static_cast<int>(k);
    g.u = haar_unitary<4>(rng);
    circuit.gates.push_back(g);
  }
  return circuit;
}

struct NuGridSample {
  Circuit circuit;
  int attempts = 0;
  double adv = 0.0;
};

/// nu_grid: rejection-sample mu_grid until adv_oracle(C) >= threshold.
/// The oracle is injected so callers choose the backend (dense for small n).
inline NuGridSample sample_nu_grid(const EnsembleSpec& spec, RngStream& rng,
                                   const std::function<double(const Circuit&)>& adv_oracle) {
  if (spec.kind != EnsembleSpec::Kind::grid_conditional)
    throw std::invalid_argument("sample_nu_grid requires kind grid_conditional");
  for (int attempt = 1; attempt <= spec.max_attempts; ++attempt) {
    Circuit c = sample_mu_grid(spec.n, spec.m, rng);
    double adv = adv_oracle(c);
    if (adv >= spec.threshold) return NuGridSample{std::move(c), attempt, adv};
  }
  throw std::runtime_error("sample_nu_grid: max_attempts (" + std::to_string(spec.max_attempts) +
                           ") exhausted; threshold " + std::to_string(spec.threshold) +
                           " may be too high for this n, m");
}

}  // namespace qsup

#endif  // QSUP_ENSEMBLES_HPP_
