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

#ifndef QSUP_HOG_HPP_
#define QSUP_HOG_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qsup/backend.hpp"
#include "qsup/circuit.hpp"
#include "qsup/dense.hpp"
#include "qsup/rng.hpp"
#include "qsup/statevector.hpp"

namespace qsup {

/// Sum of the largest N/2 values. Deterministic under ties: sorted in
/// descending value order with ascending index as the tie-break.
inline double uphalf(const std::vector<double>& values) {
  const size_t n = values.size();
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("uphalf requires an even count >= 2");
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (values[a] != values[b]) return values[a] > values[b];
    return a < b;
  });
  double sum = 0.0;
  for (size_t i = 0; i < n / 2; ++i) sum += values[order[i]];
  return sum;
}

namespace internal {

inline std::vector<double> state_probs(const StateVector& state) {
  std::vector<double> probs(state.amps.size());
  double norm = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    probs[i] = std::norm(state.amps[i]);
    norm += probs[i];
  }
  if (std::abs(norm - 1.0) > 1e-6) throw std::invalid_argument("state is not normalized");
  return probs;
}

}  // namespace internal

/// adv(|u>) = uphalf(probList(|u>)); always in [1/2, 1].
inline double adv_state(const StateVector& state) { return uphalf(internal::state_probs(state)); }

/// dev(|u>) = sum_w | |<u|w>|^2 - 2^-n |, in [0, 2(1 - 2^-n)].
inline double dev_state(const StateVector& state) {
  std::vector<double> probs = internal::state_probs(state);
  const double uniform = 1.0 / static_cast<double>(probs.size());
  double dev = 0.0;
  for (double p : probs) dev += std::abs(p - uniform);
  return dev;
}

/// Exact median of the 2^n probabilities: mean of the two middle order
/// statistics (the count is even for n >= 1).
inline double median_prob(const ProbList& pl) {
  std::vector<double> sorted = pl.probs;
  std::sort(sorted.begin(), sorted.end());
  const size_t h = sorted.size() / 2;
  if (sorted.size() % 2 == 1) return sorted[h];
  return 0.5 * (sorted[h - 1] + sorted[h]);
}

/// Heavy = output probability strictly above the median.
inline bool is_heavy(const ProbList& pl, const BasisState& z) {
  if (z.index >= pl.probs.size()) throw std::invalid_argument("basis state out of range");
  return pl.probs[z.index] > median_prob(pl);
}

struct HogInstance {
  Circuit circuit;
  int k = 100;
};

struct HogVerdict {
  int heavy_count = 0;
  int k = 0;
  double median = 0.0;
  bool passed = false;
  std::vector<double> probs;  // per-sample |<z_i|C|0^n>|^2
};

/// Honest quantum solver: k measurements of C|0^n>.
inline std::vector<BasisState> hog_generate(const HogInstance& instance, RngStream& rng) {
  if (instance.k < 1) throw std::invalid_argument("k must be >= 1");
  return sample_outputs(instance.circuit, instance.k, rng);
}

/// Exponential-time verifier: computes each sample's ideal probability with
/// the selected backend and checks that >= ceil(2k/3) samples are heavy.
/// The median comes from the full dense ProbList when n is within the dense
/// cap, and from the analytic Exp(1) estimate ln2 * 2^-n beyond it.
inline HogVerdict hog_verify(const HogInstance& instance, const std::vector<BasisState>& samples,
                             const BackendOptions& opts = {}) {
  if (static_cast<int>(samples.size()) != instance.k)
    throw std::invalid_argument("sample count does not match instance k");
  const int n = instance.circuit.n;
  HogVerdict verdict;
  verdict.k = instance.k;
  if (n <= kMaxDenseQubits)
    verdict.median = median_prob(prob_list(instance.circuit, opts.force));
  else
    verdict.median = std::log(2.0) * std::ldexp(1.0, -n);
  const BasisState zero = BasisState::zeros(n);
  verdict.probs.reserve(samples.size());
  for (const BasisState& z : samples) {
    if (z.n != n) throw std::invalid_argument("sample bit-length does not match circuit n");
    const Amplitude a = compute_amplitude(instance.circuit, zero, z, opts);
    const double p = std::norm(a);
    verdict.probs.push_back(p);
    if (p > verdict.median) ++verdict.heavy_count;
  }
  verdict.passed = verdict.heavy_count >= (2 * instance.k + 2) / 3;
  return verdict;
}

/// Rewrites C so that <0^n|C'|z> = <0^n|C|0^n>: a NOT on each z-flagged qubit
/// is absorbed into the earliest gate touching it (input side), or appended
/// as a standalone X (x) I gate when no gate touches the qubit.
inline Circuit absorb_not_gates(const Circuit& circuit, const BasisState& z) {
  if (z.n != circuit.n) throw std::invalid_argument("state width must equal circuit n");
  Circuit out = circuit;
  const Mat2 x2 = pauli_x();
  const Mat2 i2 = identity_matrix<2>();
  for (int q = 1; q <= circuit.n; ++q) {
    if (z.bit(q) == 0) continue;
    bool merged = false;
    for (Gate& g : out.gates) {
      if (g.a == q) {
        g.u = matmul(g.u, kron2(x2, i2));
        merged = true;
        break;
      }
      if (g.b == q) {
        g.u = matmul(g.u, kron2(i2, x2));
        merged = true;
        break;
      }
    }
    if (merged) continue;
    // Untouched qubit: X commutes with the whole circuit, so position is
    // immaterial; pair it with its smallest valid partner.
    if (circuit.n < 2) throw std::invalid_argument("absorb_not_gates needs n >= 2 to append a standalone gate");
    int partner = 0;
    if (out.layout) {
      auto nbrs = out.layout->neighbors(q);
      partner = *std::min_element(nbrs.begin(), nbrs.end());
    } else {
      partner = q == 1 ? 2 : 1;
    }
    out.gates.push_back(Gate{q, partner, kron2(x2, i2)});
  }
  return out;
}

}  // namespace qsup

#endif  // QSUP_HOG_HPP_
