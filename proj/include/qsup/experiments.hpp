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

#ifndef QSUP_EXPERIMENTS_HPP_
#define QSUP_EXPERIMENTS_HPP_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsup/backend.hpp"
#include "qsup/dense.hpp"
#include "qsup/ensembles.hpp"
#include "qsup/format.hpp"
#include "qsup/fourier.hpp"
#include "qsup/hog.hpp"
#include "qsup/parallel.hpp"
#include "qsup/rng.hpp"
#include "qsup/stats.hpp"

namespace qsup {

// Every experiment is a pure function of (parameters, seed): samples use
// per-index RNG substreams and aggregation walks results in index order, so
// CSV/JSON bytes are identical at any thread count. bench_backends is the one
// exception — its timing columns are measurements.
struct ExperimentReport {
  std::string name;
  nlohmann::ordered_json params;
  nlohmann::ordered_json stats;
  std::string csv_path;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["params"] = params;
    j["stats"] = stats;
    j["csv"] = csv_path;
    return j;
  }
};

namespace internal {

inline std::string csv_target(const std::string& out_dir, const std::string& filename) {
  if (out_dir.empty()) return filename;
  std::filesystem::create_directories(out_dir);
  return (std::filesystem::path(out_dir) / filename).string();
}

inline void write_lines(const std::string& path, const std::string& header, const std::vector<std::string>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << header << '\n';
  for (const std::string& row : rows) out << row << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline std::string join_ints(const std::vector<int>& xs, char sep) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace internal

/// One mu_grid^{n,m} circuit; emits the 2^n scaled probabilities 2^n p and
/// their KS distance from Exp(1).
inline ExperimentReport exp_prob_histogram(int n, int m, uint64_t seed, const std::string& out_dir = ".",
                                           int threads = 1) {
  (void)threads;  // single circuit; kept for interface uniformity
  RngStream rng(seed, 0);
  Circuit circuit = sample_mu_grid(n, m, rng);
  ProbList pl = prob_list(circuit);
  const double scale = std::ldexp(1.0, n);
  std::vector<double> scaled(pl.probs.size());
  std::vector<std::string> rows(pl.probs.size());
  for (size_t i = 0; i < pl.probs.size(); ++i) {
    scaled[i] = scale * pl.probs[i];
    rows[i] = std::to_string(i) + ',' + BasisState{n, i}.to_bits() + ',' + format_double(scaled[i]);
  }
  ExperimentReport report;
  report.name = "prob_histogram";
  report.params = {{"n", n}, {"m", m}, {"seed", seed}};
  report.csv_path = internal::csv_target(
      out_dir, "prob_hist_n" + std::to_string(n) + "_m" + std::to_string(m) + "_seed" + std::to_string(seed) + ".csv");
  internal::write_lines(report.csv_path, "index,bitstring,scaled_prob", rows);
  report.stats = {{"ks_exp1", ks_statistic_exp1(scaled)},
                  {"scaled_median", scale * median_prob(pl)},
                  {"scaled_mean", mean(scaled)}};
  return report;
}

/// adv(C) over `samples` i.i.d. mu_grid^{n,m} circuits: per-sample CSV
/// (histogram data) plus mean/std and the C_thr constant.
inline ExperimentReport exp_adv_distribution(int n, int m, int samples, uint64_t seed, const std::string& out_dir = ".",
                                             int threads = 1) {
  if (samples < 2) throw std::invalid_argument("samples must be >= 2");
  std::vector<double> advs(static_cast<size_t>(samples));
  parallel_for(static_cast<uint64_t>(samples), threads, [&](uint64_t i) {
    RngStream rng(seed, i);
    Circuit circuit = sample_mu_grid(n, m, rng);
    advs[i] = adv_state(evolve(circuit, BasisState::zeros(n)));
  });
  std::vector<std::string> rows(advs.size());
  for (size_t i = 0; i < advs.size(); ++i) rows[i] = std::to_string(i) + ',' + format_double(advs[i]);
  ExperimentReport report;
  report.name = "adv_distribution";
  report.params = {{"n", n}, {"m", m}, {"samples", samples}, {"seed", seed}};
  report.csv_path =
      internal::csv_target(out_dir, "adv_dist_n" + std::to_string(n) + "_m" + std::to_string(m) + "_s" +
                                        std::to_string(samples) + "_seed" + std::to_string(seed) + ".csv");
  internal::write_lines(report.csv_path, "sample,adv", rows);
  report.stats = {{"mean", mean(advs)},
                  {"std", sample_std(advs)},
                  {"c_thr", 0.5 * (1.0 + std::log(2.0))}};
  return report;
}

/// Var[adv] over mu_general^{n,n^2} for each n, against the 0.1/n reference.
inline ExperimentReport exp_variance_decay(const std::vector<int>& n_list, int samples_per_n, uint64_t seed,
                                           const std::string& out_dir = ".", int threads = 1) {
  if (n_list.empty()) throw std::invalid_argument("n_list must not be empty");
  if (samples_per_n < 2) throw std::invalid_argument("samples_per_n must be >= 2");
  std::vector<double> variances(n_list.size());
  std::vector<std::string> rows(n_list.size());
  for (size_t ni = 0; ni < n_list.size(); ++ni) {
    const int n = n_list[ni];
    std::vector<double> advs(static_cast<size_t>(samples_per_n));
    parallel_for(static_cast<uint64_t>(samples_per_n), threads, [&](uint64_t i) {
      RngStream rng(seed, (static_cast<uint64_t>(ni) << 32) | i);
      Circuit circuit = sample_mu_general(n, n * n, rng);
      advs[i] = adv_state(evolve(circuit, BasisState::zeros(n)));
    });
    variances[ni] = sample_variance(advs);
    rows[ni] = std::to_string(n) + ',' + format_double(variances[ni]) + ',' + format_double(0.1 / n);
  }
  ExperimentReport report;
  report.name = "variance_decay";
  report.params = {{"n_list", n_list}, {"samples_per_n", samples_per_n}, {"seed", seed}};
  report.csv_path =
      internal::csv_target(out_dir, "var_decay_n" + internal::join_ints(n_list, '-') + "_s" +
                                        std::to_string(samples_per_n) + "_seed" + std::to_string(seed) + ".csv");
  internal::write_lines(report.csv_path, "n,variance,reference", rows);
  report.stats = {{"n_list", n_list}, {"variances", variances}};
  return report;
}

/// Fourier Fishing at scale: per random f, one quantum sample (success rate
/// estimates Succ_Q), one uniform guess (estimates Succ_R), and adv(f).
inline ExperimentReport exp_fourier_success(int n, int trials, uint64_t seed, const std::string& out_dir = ".",
                                            int threads = 1) {
  if (n < 1 || n > 16) throw std::invalid_argument("exp_fourier_success requires 1 <= n <= 16");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::vector<char> quantum(static_cast<size_t>(trials)), uniform(static_cast<size_t>(trials));
  std::vector<double> advs(static_cast<size_t>(trials));
  parallel_for(static_cast<uint64_t>(trials), threads, [&](uint64_t t) {
    RngStream fn_rng(seed, 2 * t);
    RngStream draw_rng(seed, 2 * t + 1);
    BooleanFn f = random_boolean_fn(n, fn_rng);
    BasisState zq = fourier_sample(f, draw_rng);
    quantum[t] = fishing_success(f, zq) ? 1 : 0;
    BasisState zu{n, draw_rng.next_below(uint64_t{1} << n)};
    uniform[t] = fishing_success(f, zu) ? 1 : 0;
    advs[t] = adv_f(f);
  });
  const SuccConstants sc = succ_constants();
  double q_rate = 0.0, r_rate = 0.0, below = 0.0;
  for (int t = 0; t < trials; ++t) {
    q_rate += quantum[static_cast<size_t>(t)];
    r_rate += uniform[static_cast<size_t>(t)];
    if (advs[static_cast<size_t>(t)] < sc.succ_q - 1.0 / n) below += 1.0;
  }
  q_rate /= trials;
  r_rate /= trials;
  below /= trials;
  std::vector<std::string> rows(advs.size());
  for (size_t t = 0; t < advs.size(); ++t)
    rows[t] = std::to_string(t) + ',' + std::to_string(static_cast<int>(quantum[t])) + ',' +
              std::to_string(static_cast<int>(uniform[t])) + ',' + format_double(advs[t]);
  ExperimentReport report;
  report.name = "fourier_success";
  report.params = {{"n", n}, {"trials", trials}, {"seed", seed}};
  report.csv_path = internal::csv_target(out_dir, "fourier_n" + std::to_string(n) + "_t" + std::to_string(trials) +
                                                      "_seed" + std::to_string(seed) + ".csv");
  internal::write_lines(report.csv_path, "trial,quantum_success,random_success,adv", rows);
  report.stats = {{"quantum_success_rate", q_rate}, {"random_success_rate", r_rate},
                  {"adv_mean", mean(advs)},         {"adv_variance", sample_variance(advs)},
                  {"frac_adv_below", below},        {"succ_q", sc.succ_q},
                  {"succ_r", sc.succ_r}};
  return report;
}

/// Wall-clock medians per (backend, n, d). Before timing a configuration,
/// every applicable backend must agree with dense within 1e-9; backends whose
/// limits exclude a configuration are skipped. Timing columns are genuine
/// measurements and are exempt from the byte-determinism contract.
inline ExperimentReport bench_backends(const std::vector<int>& n_list, const std::vector<int>& d_list, int reps,
                                       uint64_t seed, const std::string& out_dir = ".") {
  if (n_list.empty() || d_list.empty()) throw std::invalid_argument("n_list and d_list must not be empty");
  if (reps < 1) throw std::invalid_argument("reps must be >= 1");
  const int d_max = *std::max_element(d_list.begin(), d_list.end());
  std::vector<std::string> rows;
  double worst_err = 0.0;
  for (size_t ni = 0; ni < n_list.size(); ++ni) {
    const int n = n_list[ni];
    const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    const bool grid = side * side == n && n >= 4;
    // Grow m until the layering is at least d_max deep.
    RngStream rng(seed, 1000 + ni);
    int m = std::max(grid ? n : 2, 2 * d_max);
    LayeredCircuit layered;
    for (;;) {
      RngStream attempt = rng;  // keep the stream reproducible across growth steps
      Circuit circuit = grid ? sample_mu_grid(n, m, attempt) : sample_mu_general(n, m, attempt);
      layered = layering(circuit);
      if (layered.depth() >= d_max) break;
      m *= 2;
    }
    const BasisState zero = BasisState::zeros(n);
    for (int d : d_list) {
      LayeredCircuit sub = slice(layered, 1, d);
      const int sub_m = static_cast<int>(sub.circuit.gates.size());
      const Amplitude ref = amplitude_dense(sub.circuit, zero, zero);
      struct Candidate {
        std::string name;
        std::function<Amplitude()> run;
      };
      std::vector<Candidate> candidates;
      candidates.push_back({"dense", [&] { return amplitude_dense(sub.circuit, zero, zero); }});
      if (sub_m <= 13) candidates.push_back({"paths", [&] { return amplitude_paths(sub.circuit, zero, zero); }});
      if (n <= kMaxSavitchQubits) {
        candidates.push_back({"savitch", [&] { return amplitude_savitch(sub, zero, zero); }});
        candidates.push_back(
            {"tradeoff", [&] { return amplitude_tradeoff(sub, zero, zero, std::min(2, n)); }});
        candidates.push_back({"hybrid", [&] { return amplitude_hybrid(sub, zero, zero); }});
      }
      if (grid) candidates.push_back({"gridcut", [&] { return amplitude_gridcut(sub, zero, zero); }});
      for (const Candidate& cand : candidates) {
        Amplitude got;
        try {
          got = cand.run();
        } catch (const std::runtime_error&) {
          continue;  // work limit for this configuration; skip the row
        }
        const double err = std::abs(got - ref);
        worst_err = std::max(worst_err, err);
        if (err >= 1e-9)
          throw std::runtime_error("bench gating failure: backend " + cand.name + " disagrees with dense by " +
                                   format_double(err));
        std::vector<double> times(static_cast<size_t>(reps));
        for (int r = 0; r < reps; ++r) {
          const auto t0 = std::chrono::steady_clock::now();
          volatile double sink = std::abs(cand.run());
          (void)sink;
          const auto t1 = std::chrono::steady_clock::now();
          times[static_cast<size_t>(r)] = std::chrono::duration<double>(t1 - t0).count();
        }
        rows.push_back(cand.name + ',' + std::to_string(n) + ',' + std::to_string(d) + ',' + std::to_string(sub_m) +
                       ',' + format_double(median(times)) + ',' + format_double(err));
      }
    }
  }
  ExperimentReport report;
  report.name = "bench_backends";
  report.params = {{"n_list", n_list}, {"d_list", d_list}, {"reps", reps}, {"seed", seed}};
  report.csv_path = internal::csv_target(out_dir, "bench_seed" + std::to_string(seed) + ".csv");
  internal::write_lines(report.csv_path, "backend,n,d,m,median_seconds,amplitude_error", rows);
  report.stats = {{"rows", rows.size()}, {"max_error", worst_err}};
  return report;
}

}  // namespace qsup

#endif  // QSUP_EXPERIMENTS_HPP_
