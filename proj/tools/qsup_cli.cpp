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

// qsup: circuit generation, amplitude queries, heavy-output generation, and
// the Fourier / experiment harness behind one seedable command-line surface.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.
// Machine output (JSON / CSV / sample lines) goes to stdout or --out;
// human-readable summaries go to stderr.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsup/qsup.hpp"

namespace {

struct GlobalOpts {
  uint64_t seed = 1;
  int threads = 1;
  std::string out;
  bool force = false;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open for writing: " + out_path);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + out_path);
}

qsup::Circuit load_circuit(const std::string& path) {
  if (path.empty()) throw std::invalid_argument("--circuit is required");
  return qsup::read_circuit_file(path);
}

std::vector<qsup::BasisState> load_samples(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::vector<qsup::BasisState> samples;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    qsup::BasisState z = qsup::BasisState::from_bits(line);
    if (z.n != n)
      throw std::invalid_argument("sample '" + line + "' has " + std::to_string(z.n) + " bits; circuit has n = " +
                                  std::to_string(n));
    samples.push_back(z);
  }
  if (samples.empty()) throw std::invalid_argument("samples file is empty: " + path);
  return samples;
}

qsup::BooleanFn obtain_fn(int n, const std::string& fn_path, uint64_t seed) {
  if (!fn_path.empty()) return qsup::read_boolean_fn_file(n, fn_path);
  qsup::RngStream rng(seed, 0);
  return qsup::random_boolean_fn(n, rng);
}

std::string verdict_json(const qsup::HogVerdict& v) {
  nlohmann::ordered_json j;
  j["heavy_count"] = v.heavy_count;
  j["k"] = v.k;
  j["median"] = v.median;
  j["passed"] = v.passed;
  return j.dump();
}

void print_report(const qsup::ExperimentReport& report) {
  std::cout << report.to_json().dump() << '\n';
  std::cerr << report.name << ": wrote " << report.csv_path << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum-circuit sampling and simulation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--seed", g.seed, "RNG seed (default 1)");
  app.add_option("--threads", g.threads, "worker thread cap (default 1)")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "output file or directory (subcommand-specific)");
  app.add_flag("--force", g.force, "override backend size/work limits");

  // gen
  auto* gen = app.add_subcommand("gen", "sample a random circuit");
  std::string gen_kind = "grid";
  int gen_n = 0, gen_m = 0, gen_attempts = 1000;
  double gen_threshold = 0.7;
  gen->add_option("--kind", gen_kind, "grid | general | grid_conditional")
      ->check(CLI::IsMember({"grid", "general", "grid_conditional"}));
  gen->add_option("--n", gen_n, "qubit count")->required();
  gen->add_option("--m", gen_m, "gate count")->required();
  gen->add_option("--threshold", gen_threshold, "adv threshold (grid_conditional)");
  gen->add_option("--max-attempts", gen_attempts, "rejection cap (grid_conditional)");

  // amp
  auto* amp = app.add_subcommand("amp", "compute one transition amplitude <y|C|x>");
  std::string amp_circuit, amp_backend = "dense", amp_x, amp_y;
  int amp_k = 2;
  double amp_c = 1.0;
  amp->add_option("--circuit", amp_circuit, "circuit JSON file")->required();
  amp->add_option("--backend", amp_backend, "dense | paths | savitch | tradeoff | hybrid | gridcut");
  amp->add_option("--x", amp_x, "input bitstring, qubit 1 first")->required();
  amp->add_option("--y", amp_y, "output bitstring, qubit 1 first")->required();
  amp->add_option("--k", amp_k, "block bits (tradeoff backend)");
  amp->add_option("--c", amp_c, "depth-cut coefficient (hybrid backend)");

  // hog
  auto* hog = app.add_subcommand("hog", "heavy output generation");
  hog->require_subcommand(1);
  auto* hog_gen = hog->add_subcommand("gen", "sample a nu_grid instance circuit");
  int hg_n = 9, hg_m = 81, hg_attempts = 1000;
  double hg_threshold = 0.7;
  hog_gen->add_option("--n", hg_n, "qubit count (perfect square)");
  hog_gen->add_option("--m", hg_m, "gate count");
  hog_gen->add_option("--threshold", hg_threshold, "adv acceptance threshold");
  hog_gen->add_option("--max-attempts", hg_attempts, "rejection cap");
  auto* hog_solve = hog->add_subcommand("solve", "draw k measurement samples from C|0^n>");
  std::string hs_circuit;
  int hs_k = 100;
  hog_solve->add_option("--circuit", hs_circuit, "circuit JSON file")->required();
  hog_solve->add_option("--k", hs_k, "sample count");
  auto* hog_verify = hog->add_subcommand("verify", "verify samples against ideal probabilities");
  std::string hv_circuit, hv_samples, hv_backend;
  hog_verify->add_option("--circuit", hv_circuit, "circuit JSON file")->required();
  hog_verify->add_option("--samples", hv_samples, "samples file, one bitstring per line")->required();
  hog_verify->add_option("--backend", hv_backend, "amplitude backend (default: dense, hybrid above the dense cap)");

  // fourier
  auto* fourier = app.add_subcommand("fourier", "Boolean-function Fourier tools");
  fourier->require_subcommand(1);
  auto* f_sample = fourier->add_subcommand("sample", "draw z with probability 2^-n fhat(z)^2");
  int fs_n = 0, fs_count = 1;
  std::string fs_fn;
  f_sample->add_option("--n", fs_n, "input bits")->required();
  f_sample->add_option("--fn", fs_fn, "hex truth-table file (default: random from seed)");
  f_sample->add_option("--count", fs_count, "number of draws")->check(CLI::PositiveNumber);
  auto* f_fish = fourier->add_subcommand("fish", "check |fhat(z)| >= 1");
  int ff_n = 0;
  std::string ff_fn, ff_z;
  f_fish->add_option("--n", ff_n, "input bits")->required();
  f_fish->add_option("--fn", ff_fn, "hex truth-table file (default: random from seed)");
  f_fish->add_option("--z", ff_z, "candidate z (default: one fourier sample)");
  auto* f_adv = fourier->add_subcommand("adv", "compute adv(f)");
  int fa_n = 0;
  std::string fa_fn;
  f_adv->add_option("--n", fa_n, "input bits")->required();
  f_adv->add_option("--fn", fa_fn, "hex truth-table file (default: random from seed)");

  // exp
  auto* exp = app.add_subcommand("exp", "experiment harness (CSV + summary JSON)");
  exp->require_subcommand(1);
  auto* e_hist = exp->add_subcommand("prob-hist", "scaled output probabilities of one mu_grid circuit");
  int eh_n = 16, eh_m = 256;
  e_hist->add_option("--n", eh_n, "qubit count");
  e_hist->add_option("--m", eh_m, "gate count");
  auto* e_adv = exp->add_subcommand("adv-dist", "adv(C) distribution over mu_grid circuits");
  int ea_n = 9, ea_m = 81, ea_samples = 1000;
  e_adv->add_option("--n", ea_n, "qubit count");
  e_adv->add_option("--m", ea_m, "gate count");
  e_adv->add_option("--samples", ea_samples, "circuit draws");
  auto* e_var = exp->add_subcommand("var-decay", "Var[adv] vs n over mu_general circuits");
  std::vector<int> ev_nlist{4, 6, 8, 10, 12};
  int ev_samples = 300;
  e_var->add_option("--n-list", ev_nlist, "qubit counts")->delimiter(',');
  e_var->add_option("--samples", ev_samples, "draws per n");
  auto* e_fourier = exp->add_subcommand("fourier", "Fishing success rates and adv(f) statistics");
  int ef_n = 10, ef_trials = 2000;
  e_fourier->add_option("--n", ef_n, "input bits");
  e_fourier->add_option("--trials", ef_trials, "random functions");
  auto* e_bench = exp->add_subcommand("bench", "wall-clock comparison of amplitude backends");
  std::vector<int> eb_nlist{4, 9}, eb_dlist{1, 2, 4};
  int eb_reps = 5;
  e_bench->add_option("--n-list", eb_nlist, "qubit counts")->delimiter(',');
  e_bench->add_option("--d-list", eb_dlist, "depths")->delimiter(',');
  e_bench->add_option("--reps", eb_reps, "repetitions per timing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      qsup::RngStream rng(g.seed, 0);
      qsup::Circuit circuit;
      if (gen_kind == "grid") {
        circuit = qsup::sample_mu_grid(gen_n, gen_m, rng);
      } else if (gen_kind == "general") {
        circuit = qsup::sample_mu_general(gen_n, gen_m, rng);
      } else {
        qsup::EnsembleSpec spec{qsup::EnsembleSpec::Kind::grid_conditional, gen_n, gen_m, gen_threshold, gen_attempts};
        qsup::NuGridSample nu = qsup::sample_nu_grid(spec, rng, [](const qsup::Circuit& c) {
          return qsup::adv_state(qsup::evolve(c, qsup::BasisState::zeros(c.n)));
        });
        std::cerr << "accepted after " << nu.attempts << " attempt(s), adv = " << nu.adv << '\n';
        circuit = std::move(nu.circuit);
      }
      emit(qsup::circuit_to_string(circuit) + "\n", g.out);
      if (!g.out.empty())
        std::cerr << "wrote " << gen_kind << " circuit n=" << gen_n << " m=" << gen_m << " to " << g.out << '\n';
    } else if (amp->parsed()) {
      qsup::Circuit circuit = load_circuit(amp_circuit);
      qsup::BasisState x = qsup::BasisState::from_bits(amp_x);
      qsup::BasisState y = qsup::BasisState::from_bits(amp_y);
      if (x.n != circuit.n || y.n != circuit.n)
        throw std::invalid_argument("bitstring length must equal circuit n = " + std::to_string(circuit.n));
      qsup::BackendOptions opts;
      opts.backend = qsup::parse_backend(amp_backend);
      opts.tradeoff_k = amp_k;
      opts.hybrid_c = amp_c;
      opts.force = g.force;
      qsup::Amplitude a = qsup::compute_amplitude(circuit, x, y, opts);
      emit("{\"re\": " + qsup::format_fixed(a.real(), 12) + ", \"im\": " + qsup::format_fixed(a.imag(), 12) + "}\n",
           g.out);
    } else if (hog_gen->parsed()) {
      qsup::RngStream rng(g.seed, 0);
      qsup::EnsembleSpec spec{qsup::EnsembleSpec::Kind::grid_conditional, hg_n, hg_m, hg_threshold, hg_attempts};
      qsup::NuGridSample nu = qsup::sample_nu_grid(spec, rng, [](const qsup::Circuit& c) {
        return qsup::adv_state(qsup::evolve(c, qsup::BasisState::zeros(c.n)));
      });
      std::cerr << "accepted after " << nu.attempts << " attempt(s), adv = " << nu.adv << '\n';
      emit(qsup::circuit_to_string(nu.circuit) + "\n", g.out);
    } else if (hog_solve->parsed()) {
      qsup::Circuit circuit = load_circuit(hs_circuit);
      qsup::HogInstance instance{circuit, hs_k};
      qsup::RngStream rng(g.seed, 0);
      std::vector<qsup::BasisState> samples = qsup::hog_generate(instance, rng);
      std::string text;
      for (const qsup::BasisState& z : samples) text += z.to_bits() + "\n";
      emit(text, g.out);
    } else if (hog_verify->parsed()) {
      qsup::Circuit circuit = load_circuit(hv_circuit);
      std::vector<qsup::BasisState> samples = load_samples(hv_samples, circuit.n);
      qsup::HogInstance instance{circuit, static_cast<int>(samples.size())};
      qsup::BackendOptions opts;
      if (hv_backend.empty())
        opts.backend = circuit.n <= qsup::kMaxDenseQubits ? qsup::Backend::dense : qsup::Backend::hybrid;
      else
        opts.backend = qsup::parse_backend(hv_backend);
      opts.force = g.force;
      qsup::HogVerdict v = qsup::hog_verify(instance, samples, opts);
      emit(verdict_json(v) + "\n", g.out);
      std::cerr << "heavy " << v.heavy_count << "/" << v.k << ", median " << v.median << " -> "
                << (v.passed ? "PASS" : "FAIL") << '\n';
    } else if (f_sample->parsed()) {
      qsup::BooleanFn f = obtain_fn(fs_n, fs_fn, g.seed);
      qsup::RngStream rng(g.seed, 1);
      std::string text;
      for (int i = 0; i < fs_count; ++i) text += qsup::fourier_sample(f, rng).to_bits() + "\n";
      emit(text, g.out);
    } else if (f_fish->parsed()) {
      qsup::BooleanFn f = obtain_fn(ff_n, ff_fn, g.seed);
      qsup::BasisState z;
      if (ff_z.empty()) {
        qsup::RngStream rng(g.seed, 1);
        z = qsup::fourier_sample(f, rng);
      } else {
        z = qsup::BasisState::from_bits(ff_z);
        if (z.n != ff_n) throw std::invalid_argument("--z length must equal --n");
      }
      qsup::FourierTable t = qsup::wht(f);
      nlohmann::ordered_json j;
      j["z"] = z.to_bits();
      j["coeff"] = t.coeffs[z.index];
      j["success"] = qsup::fishing_success(f, z);
      emit(j.dump() + "\n", g.out);
    } else if (f_adv->parsed()) {
      qsup::BooleanFn f = obtain_fn(fa_n, fa_fn, g.seed);
      nlohmann::ordered_json j;
      j["adv"] = qsup::adv_f(f);
      emit(j.dump() + "\n", g.out);
    } else if (e_hist->parsed()) {
      print_report(qsup::exp_prob_histogram(eh_n, eh_m, g.seed, g.out.empty() ? "." : g.out, g.threads));
    } else if (e_adv->parsed()) {
      print_report(qsup::exp_adv_distribution(ea_n, ea_m, ea_samples, g.seed, g.out.empty() ? "." : g.out, g.threads));
    } else if (e_var->parsed()) {
      print_report(qsup::exp_variance_decay(ev_nlist, ev_samples, g.seed, g.out.empty() ? "." : g.out, g.threads));
    } else if (e_fourier->parsed()) {
      print_report(qsup::exp_fourier_success(ef_n, ef_trials, g.seed, g.out.empty() ? "." : g.out, g.threads));
    } else if (e_bench->parsed()) {
      print_report(qsup::bench_backends(eb_nlist, eb_dlist, eb_reps, g.seed, g.out.empty() ? "." : g.out));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
