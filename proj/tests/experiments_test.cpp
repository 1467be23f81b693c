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
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qsup/dense.hpp"
#include "qsup/ensembles.hpp"
#include "qsup/experiments.hpp"
#include "qsup/format.hpp"
#include "qsup/hog.hpp"
#include "qsup/stats.hpp"
#include "test_util.hpp"

namespace qsup {
namespace {

std::string fresh_dir(const std::string& tag) {
  const auto p = std::filesystem::temp_directory_path() / ("qsup_exp_" + tag);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p.string();
}

struct Csv {
  std::string header;
  std::vector<std::vector<std::string>> rows;
};

Csv parse_csv(const std::string& text) {
  Csv csv;
  size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    std::string line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (line.empty()) continue;
    if (first) {
      csv.header = line;
      first = false;
      continue;
    }
    std::vector<std::string> cells;
    size_t c = 0;
    while (true) {
      size_t comma = line.find(',', c);
      if (comma == std::string::npos) {
        cells.push_back(line.substr(c));
        break;
      }
      cells.push_back(line.substr(c, comma - c));
      c = comma + 1;
    }
    csv.rows.push_back(std::move(cells));
  }
  return csv;
}

Csv load_csv(const std::string& path) { return parse_csv(testing::read_file(path)); }

TEST(Stats, HandValues) {
  EXPECT_DOUBLE_EQ(mean({1.0, 2.0, 3.0, 4.0}), 2.5);
  EXPECT_DOUBLE_EQ(median({3.0, 1.0, 2.0}), 2.0);
  EXPECT_DOUBLE_EQ(median({4.0, 1.0, 3.0, 2.0}), 2.5);
  EXPECT_DOUBLE_EQ(sample_variance({1.0, 2.0, 3.0, 4.0}), 5.0 / 3.0);
  EXPECT_DOUBLE_EQ(sample_std({1.0, 2.0, 3.0, 4.0}), std::sqrt(5.0 / 3.0));
  EXPECT_THROW(mean({}), std::invalid_argument);
  EXPECT_THROW(sample_variance({1.0}), std::invalid_argument);
  EXPECT_THROW(median({}), std::invalid_argument);
}

TEST(Stats, KsExp1FlagsPointMassScaledProbs) {
  // 2^n * probs of a point-mass output distribution at n = 2: the empirical
  // CDF jumps to 3/4 at x = 0 where Exp(1) has mass 0.
  const double ks = ks_statistic_exp1({4.0, 0.0, 0.0, 0.0});
  EXPECT_DOUBLE_EQ(ks, 0.75);
  EXPECT_GT(ks, 0.5);
}

TEST(Stats, KsAcceptsGenuineDraws) {
  RngStream rng(123, 0);
  std::vector<double> exp1(100000), unif(100000);
  for (size_t i = 0; i < exp1.size(); ++i) {
    unif[i] = rng.next_double();
    exp1[i] = -std::log1p(-unif[i]);
  }
  // 1% critical value at N = 1e5 is ~0.0052.
  EXPECT_LT(ks_statistic_exp1(exp1), 0.01);
  EXPECT_LT(ks_statistic_uniform01(unif), 0.01);
  EXPECT_DOUBLE_EQ(ks_statistic_uniform01({0.5, 0.5}), 0.5);
}

TEST(Experiments, ProbHistogramReportAndCsv) {
  const std::string dir = fresh_dir("probhist");
  const ExperimentReport rep = exp_prob_histogram(4, 16, 3, dir);
  EXPECT_EQ(rep.name, "prob_histogram");
  EXPECT_EQ(rep.params["n"].get<int>(), 4);
  EXPECT_EQ(rep.params["m"].get<int>(), 16);
  EXPECT_EQ(rep.params["seed"].get<std::uint64_t>(), 3u);
  EXPECT_NE(rep.csv_path.find("prob_hist_n4_m16_seed3.csv"), std::string::npos);
  ASSERT_TRUE(std::filesystem::exists(rep.csv_path));

  const Csv csv = load_csv(rep.csv_path);
  EXPECT_EQ(csv.header, "index,bitstring,scaled_prob");
  ASSERT_EQ(csv.rows.size(), 16u);
  std::vector<double> scaled;
  for (size_t i = 0; i < csv.rows.size(); ++i) {
    ASSERT_EQ(csv.rows[i].size(), 3u);
    EXPECT_EQ(csv.rows[i][0], std::to_string(i));
    EXPECT_EQ(csv.rows[i][1], (BasisState{4, i}.to_bits()));
    scaled.push_back(std::stod(csv.rows[i][2]));
  }
  // Sum of 2^n * p over all strings is 2^n, so the mean is 1.
  EXPECT_NEAR(rep.stats["scaled_mean"].get<double>(), 1.0, 1e-9);
  EXPECT_DOUBLE_EQ(rep.stats["scaled_mean"].get<double>(), mean(scaled));
  const double ks = rep.stats["ks_exp1"].get<double>();
  EXPECT_GE(ks, 0.0);
  EXPECT_LE(ks, 1.0);

  // The circuit is drawn from stream (seed, 0); the summary stats must match
  // an independent reconstruction.
  RngStream rng(3, 0);
  const ProbList pl = prob_list(sample_mu_grid(4, 16, rng));
  EXPECT_DOUBLE_EQ(rep.stats["scaled_median"].get<double>(), 16.0 * median_prob(pl));
}

TEST(Experiments, ProbHistogramRerunIsByteIdentical) {
  const std::string a = fresh_dir("probhist_a");
  const std::string b = fresh_dir("probhist_b");
  const ExperimentReport ra = exp_prob_histogram(9, 20, 11, a);
  const ExperimentReport rb = exp_prob_histogram(9, 20, 11, b);
  EXPECT_EQ(testing::read_file(ra.csv_path), testing::read_file(rb.csv_path));
  EXPECT_EQ(ra.stats.dump(), rb.stats.dump());
  const ExperimentReport rc = exp_prob_histogram(9, 20, 12, b);
  EXPECT_NE(testing::read_file(ra.csv_path), testing::read_file(rc.csv_path));
}

TEST(Experiments, AdvDistributionSmallGrid) {
  const std::string dir = fresh_dir("advdist");
  const ExperimentReport rep = exp_adv_distribution(4, 16, 40, 5, dir);
  EXPECT_EQ(rep.name, "adv_distribution");
  const Csv csv = load_csv(rep.csv_path);
  EXPECT_EQ(csv.header, "sample,adv");
  ASSERT_EQ(csv.rows.size(), 40u);
  std::vector<double> advs;
  for (size_t i = 0; i < csv.rows.size(); ++i) {
    EXPECT_EQ(csv.rows[i][0], std::to_string(i));
    const double adv = std::stod(csv.rows[i][1]);
    EXPECT_GE(adv, 0.5);
    EXPECT_LE(adv, 1.0);
    advs.push_back(adv);
  }
  const double m = rep.stats["mean"].get<double>();
  EXPECT_GT(m, 0.5);
  EXPECT_LE(m, 1.0);
  EXPECT_DOUBLE_EQ(m, mean(advs));  // format_double round-trips exactly
  EXPECT_GT(rep.stats["std"].get<double>(), 0.0);

  // The concentration constant (1 + ln 2)/2 and its 6-decimal rendering.
  const double c_thr = rep.stats["c_thr"].get<double>();
  EXPECT_DOUBLE_EQ(c_thr, 0.5 * (1.0 + std::log(2.0)));
  EXPECT_EQ(format_fixed(c_thr, 6), "0.846574");

  // Sample i is a pure function of (seed, i).
  RngStream rng(5, 7);
  const Circuit c = sample_mu_grid(4, 16, rng);
  EXPECT_DOUBLE_EQ(advs[7], adv_state(evolve(c, BasisState::zeros(4))));
}

TEST(Experiments, AdvDistributionThreadCountInvariance) {
  const std::string a = fresh_dir("advdist_t1");
  const std::string b = fresh_dir("advdist_t8");
  const ExperimentReport ra = exp_adv_distribution(4, 16, 33, 6, a, /*threads=*/1);
  const ExperimentReport rb = exp_adv_distribution(4, 16, 33, 6, b, /*threads=*/8);
  EXPECT_EQ(testing::read_file(ra.csv_path), testing::read_file(rb.csv_path));
  EXPECT_EQ(ra.stats.dump(), rb.stats.dump());
}

TEST(Experiments, AdvDistributionRejectsTinySample) {
  EXPECT_THROW(exp_adv_distribution(4, 16, 1, 0, fresh_dir("advdist_bad")), std::invalid_argument);
}

TEST(Experiments, VarianceDecaySmall) {
  const std::string dir = fresh_dir("vardecay");
  const ExperimentReport rep = exp_variance_decay({4, 6}, 40, 9, dir);
  EXPECT_EQ(rep.name, "variance_decay");
  const Csv csv = load_csv(rep.csv_path);
  EXPECT_EQ(csv.header, "n,variance,reference");
  ASSERT_EQ(csv.rows.size(), 2u);
  EXPECT_EQ(csv.rows[0][0], "4");
  EXPECT_EQ(csv.rows[1][0], "6");
  EXPECT_DOUBLE_EQ(std::stod(csv.rows[0][2]), 0.1 / 4);
  EXPECT_DOUBLE_EQ(std::stod(csv.rows[1][2]), 0.1 / 6);
  const std::vector<double> vars = rep.stats["variances"].get<std::vector<double>>();
  ASSERT_EQ(vars.size(), 2u);
  for (size_t i = 0; i < vars.size(); ++i) {
    // adv lives in [1/2, 1], so the variance is at most 1/16 (Popoviciu).
    EXPECT_GT(vars[i], 0.0);
    EXPECT_LE(vars[i], 0.0625);
    EXPECT_DOUBLE_EQ(std::stod(csv.rows[i][1]), vars[i]);
  }
}

TEST(Experiments, VarianceDecayThreadCountInvariance) {
  const std::string a = fresh_dir("vardecay_t1");
  const std::string b = fresh_dir("vardecay_t5");
  const ExperimentReport ra = exp_variance_decay({4, 5}, 24, 10, a, /*threads=*/1);
  const ExperimentReport rb = exp_variance_decay({4, 5}, 24, 10, b, /*threads=*/5);
  EXPECT_EQ(testing::read_file(ra.csv_path), testing::read_file(rb.csv_path));
  EXPECT_EQ(ra.stats.dump(), rb.stats.dump());
}

TEST(Experiments, VarianceDecayRejectsBadArgs) {
  EXPECT_THROW(exp_variance_decay({}, 10, 0, fresh_dir("vardecay_bad")), std::invalid_argument);
  EXPECT_THROW(exp_variance_decay({4}, 1, 0, fresh_dir("vardecay_bad")), std::invalid_argument);
}

TEST(Experiments, FourierSuccessSmall) {
  const std::string dir = fresh_dir("fourier");
  const ExperimentReport rep = exp_fourier_success(6, 150, 11, dir);
  EXPECT_EQ(rep.name, "fourier_success");
  const Csv csv = load_csv(rep.csv_path);
  EXPECT_EQ(csv.header, "trial,quantum_success,random_success,adv");
  ASSERT_EQ(csv.rows.size(), 150u);
  double q_sum = 0.0, r_sum = 0.0;
  for (size_t t = 0; t < csv.rows.size(); ++t) {
    EXPECT_EQ(csv.rows[t][0], std::to_string(t));
    EXPECT_TRUE(csv.rows[t][1] == "0" || csv.rows[t][1] == "1");
    EXPECT_TRUE(csv.rows[t][2] == "0" || csv.rows[t][2] == "1");
    q_sum += std::stod(csv.rows[t][1]);
    r_sum += std::stod(csv.rows[t][2]);
    const double adv = std::stod(csv.rows[t][3]);
    EXPECT_GE(adv, 0.0);
    EXPECT_LE(adv, 1.0);
  }
  const double q_rate = rep.stats["quantum_success_rate"].get<double>();
  const double r_rate = rep.stats["random_success_rate"].get<double>();
  EXPECT_DOUBLE_EQ(q_rate, q_sum / 150.0);
  EXPECT_DOUBLE_EQ(r_rate, r_sum / 150.0);
  // Succ_Q - Succ_R ~ 0.48; at 150 trials the gap is ~8 sigma wide.
  EXPECT_GT(q_rate, r_rate + 0.2);
  // E[quantum_success | f] = adv(f), so the two estimates agree in mean.
  EXPECT_NEAR(q_rate, rep.stats["adv_mean"].get<double>(), 0.15);
  const double below = rep.stats["frac_adv_below"].get<double>();
  EXPECT_GE(below, 0.0);
  EXPECT_LE(below, 1.0);
  EXPECT_NEAR(rep.stats["succ_q"].get<double>(), 0.80125, 1e-4);
  EXPECT_NEAR(rep.stats["succ_r"].get<double>(), 0.31731, 1e-4);
}

TEST(Experiments, FourierSuccessThreadCountInvariance) {
  const std::string a = fresh_dir("fourier_t1");
  const std::string b = fresh_dir("fourier_t3");
  const ExperimentReport ra = exp_fourier_success(5, 60, 12, a, /*threads=*/1);
  const ExperimentReport rb = exp_fourier_success(5, 60, 12, b, /*threads=*/3);
  EXPECT_EQ(testing::read_file(ra.csv_path), testing::read_file(rb.csv_path));
  EXPECT_EQ(ra.stats.dump(), rb.stats.dump());
}

TEST(Experiments, FourierSuccessRejectsBadArgs) {
  EXPECT_THROW(exp_fourier_success(0, 10, 0, fresh_dir("fourier_bad")), std::invalid_argument);
  EXPECT_THROW(exp_fourier_success(17, 10, 0, fresh_dir("fourier_bad")), std::invalid_argument);
  EXPECT_THROW(exp_fourier_success(6, 0, 0, fresh_dir("fourier_bad")), std::invalid_argument);
}

TEST(Bench, SmallGridAllBackendsAgree) {
  const std::string dir = fresh_dir("bench_grid");
  const ExperimentReport rep = bench_backends({4}, {1, 2}, 3, 2, dir);
  EXPECT_EQ(rep.name, "bench_backends");
  EXPECT_LT(rep.stats["max_error"].get<double>(), 1e-9);
  const Csv csv = load_csv(rep.csv_path);
  EXPECT_EQ(csv.header, "backend,n,d,m,median_seconds,amplitude_error");
  EXPECT_EQ(rep.stats["rows"].get<size_t>(), csv.rows.size());
  // n = 4 is a 2x2 grid well inside every backend's limit: at d <= 2 the cut
  // carries at most 4 crossing gates, so no candidate hits a work limit.
  std::map<std::string, std::set<std::string>> backends_by_d;
  for (const auto& row : csv.rows) {
    ASSERT_EQ(row.size(), 6u);
    EXPECT_EQ(row[1], "4");
    EXPECT_TRUE(row[2] == "1" || row[2] == "2");
    EXPECT_GE(std::stod(row[4]), 0.0);
    EXPECT_LT(std::stod(row[5]), 1e-9);
    backends_by_d[row[2]].insert(row[0]);
  }
  const std::set<std::string> all = {"dense", "paths", "savitch", "tradeoff", "hybrid", "gridcut"};
  EXPECT_EQ(backends_by_d["1"], all);
  EXPECT_EQ(backends_by_d["2"], all);
}

TEST(Bench, SavitchTimeGrowsWithDepth) {
  const std::string dir = fresh_dir("bench_savitch");
  const ExperimentReport rep = bench_backends({10}, {1, 4}, 1, 7, dir);
  const Csv csv = load_csv(rep.csv_path);
  std::map<std::string, double> savitch_time;
  for (const auto& row : csv.rows)
    if (row[0] == "savitch") savitch_time[row[2]] = std::stod(row[4]);
  ASSERT_EQ(savitch_time.size(), 2u);
  // Doubling the depth multiplies the midpoint sums by 2^{n+1}; measurement
  // noise cannot flip an ordering that steep.
  EXPECT_GE(savitch_time["4"], savitch_time["1"]);
  EXPECT_GT(savitch_time["4"], 0.0);
}

TEST(Bench, DenseTimeRoughlyLinearInGateCount) {
  const std::string dir = fresh_dir("bench_dense");
  const ExperimentReport rep = bench_backends({14}, {1, 6}, 5, 21, dir);
  const Csv csv = load_csv(rep.csv_path);
  std::map<std::string, std::pair<double, double>> dense;  // d -> (m, median_s)
  for (const auto& row : csv.rows)
    if (row[0] == "dense") dense[row[2]] = {std::stod(row[3]), std::stod(row[4])};
  ASSERT_EQ(dense.size(), 2u);
  const double per_gate_small = dense["1"].second / dense["1"].first;
  const double per_gate_large = dense["6"].second / dense["6"].first;
  ASSERT_GT(per_gate_small, 0.0);
  const double ratio = per_gate_large / per_gate_small;
  EXPECT_GT(ratio, 1.0 / 3.0);
  EXPECT_LT(ratio, 3.0);
}

TEST(Bench, RejectsBadArgs) {
  EXPECT_THROW(bench_backends({}, {1}, 1, 0, fresh_dir("bench_bad")), std::invalid_argument);
  EXPECT_THROW(bench_backends({4}, {}, 1, 0, fresh_dir("bench_bad")), std::invalid_argument);
  EXPECT_THROW(bench_backends({4}, {1}, 0, 0, fresh_dir("bench_bad")), std::invalid_argument);
}

}  // namespace
}  // namespace qsup
