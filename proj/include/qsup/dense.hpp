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

#ifndef QSUP_DENSE_HPP_
#define QSUP_DENSE_HPP_

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsup/circuit.hpp"
#include "qsup/format.hpp"
#include "qsup/rng.hpp"
#include "qsup/statevector.hpp"

namespace qsup {

// 1 GiB of complex doubles; beyond this the dense backend refuses.
inline constexpr int kMaxDenseQubits = 26;

inline void check_dense_limit(int n, bool force = false) {
  if (n > kMaxDenseQubits && !force)
    throw std::invalid_argument("dense backend limited to n <= " + std::to_string(kMaxDenseQubits) +
                                " (got n = " + std::to_string(n) + "); use force to override");
  if (n > 30) throw std::invalid_argument("dense backend cannot address n > 30");
}

/// Schrodinger evolution: C|initial> by in-place gate application.
inline StateVector evolve(const Circuit& circuit, const BasisState& initial, bool force = false) {
  circuit.validate();
  if (initial.n != circuit.n) throw std::invalid_argument("initial state width must equal circuit n");
  check_dense_limit(circuit.n, force);
  StateVector state = StateVector::basis(circuit.n, initial.index);
  for (const Gate& g : circuit.gates) apply_gate_in_place(state, g);
  return state;
}

inline Amplitude amplitude_dense(const Circuit& circuit, const BasisState& x, const BasisState& y,
                                 bool force = false) {
  if (y.n != circuit.n) throw std::invalid_argument("output state width must equal circuit n");
  StateVector state = evolve(circuit, x, force);
  return state.amps[y.index];
}

/// Output distribution of C on |0^n>: probs[x] = |<x|C|0^n>|^2.
struct ProbList {
  int n = 0;
  std::vector<double> probs;
};

inline ProbList prob_list(const Circuit& circuit, bool force = false) {
  StateVector state = evolve(circuit, BasisState::zeros(circuit.n), force);
  ProbList out{circuit.n, std::vector<double>(state.amps.size())};
  for (size_t i = 0; i < state.amps.size(); ++i) out.probs[i] = std::norm(state.amps[i]);
  return out;
}

/// k i.i.d. computational-basis measurements via inverse-CDF over probs.
inline std::vector<BasisState> sample_outputs(const Circuit& circuit, int k, RngStream& rng, bool force = false) {
  if (k < 1) throw std::invalid_argument("sample count must be >= 1");
  ProbList pl = prob_list(circuit, force);
  std::vector<double> cdf(pl.probs.size());
  double acc = 0.0;
  for (size_t i = 0; i < pl.probs.size(); ++i) {
    acc += pl.probs[i];
    cdf[i] = acc;
  }
  std::vector<BasisState> out;
  out.reserve(static_cast<size_t>(k));
  for (int s = 0; s < k; ++s) {
    double u = rng.next_double() * acc;
    // First index with cdf > u; binary search keeps k·log(2^n) cost.
    uint64_t lo = 0, hi = cdf.size() - 1;
    while (lo < hi) {
      uint64_t mid = (lo + hi) / 2;
      if (cdf[mid] > u)
        hi = mid;
      else
        lo = mid + 1;
    }
    out.push_back(BasisState{pl.n, lo});
  }
  return out;
}

inline void write_prob_list_csv(const ProbList& pl, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "index,bitstring,probability\n";
  for (size_t i = 0; i < pl.probs.size(); ++i)
    out << i << ',' << BasisState{pl.n, i}.to_bits() << ',' << format_double(pl.probs[i]) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace qsup

#endif  // QSUP_DENSE_HPP_
