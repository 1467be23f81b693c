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

#ifndef QSUP_STATS_HPP_
#define QSUP_STATS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qsup {

inline double mean(const std::vector<double>& xs) {
  if (xs.empty()) throw std::invalid_argument("mean of empty sample");
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

/// Unbiased (N-1) sample variance.
inline double sample_variance(const std::vector<double>& xs) {
  if (xs.size() < 2) throw std::invalid_argument("variance needs >= 2 samples");
  double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return s / static_cast<double>(xs.size() - 1);
}

inline double sample_std(const std::vector<double>& xs) { return std::sqrt(sample_variance(xs)); }

/// Kolmogorov-Smirnov statistic against Exp(1): sup_x |F_emp(x) - (1-e^-x)|.
inline double ks_statistic_exp1(std::vector<double> xs) {
  if (xs.empty()) throw std::invalid_argument("KS of empty sample");
  std::sort(xs.begin(), xs.end());
  const double inv_n = 1.0 / static_cast<double>(xs.size());
  double worst = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    double cdf = 1.0 - std::exp(-xs[i]);
    double lo = std::abs(cdf - static_cast<double>(i) * inv_n);
    double hi = std::abs(static_cast<double>(i + 1) * inv_n - cdf);
    worst = std::max(worst, std::max(lo, hi));
  }
  return worst;
}

/// Kolmogorov-Smirnov statistic against Uniform[0,1].
inline double ks_statistic_uniform01(std::vector<double> xs) {
  if (xs.empty()) throw std::invalid_argument("KS of empty sample");
  std::sort(xs.begin(), xs.end());
  const double inv_n = 1.0 / static_cast<double>(xs.size());
  double worst = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    double cdf = std::min(1.0, std::max(0.0, xs[i]));
    double lo = std::abs(cdf - static_cast<double>(i) * inv_n);
    double hi = std::abs(static_cast<double>(i + 1) * inv_n - cdf);
    worst = std::max(worst, std::max(lo, hi));
  }
  return worst;
}

/// Median via the order-statistic convention: mean of the two middle values
/// for even N.
inline double median(std::vector<double> xs) {
  if (xs.empty()) throw std::invalid_argument("median of empty sample");
  std::sort(xs.begin(), xs.end());
  size_t h = xs.size() / 2;
  if (xs.size() % 2 == 1) return xs[h];
  return 0.5 * (xs[h - 1] + xs[h]);
}

}  // namespace qsup

#endif  // QSUP_STATS_HPP_
