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

#ifndef QSUP_FOURIER_HPP_
#define QSUP_FOURIER_HPP_

#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsup/circuit.hpp"
#include "qsup/rng.hpp"

namespace qsup {

// Everything here follows the convention sum_z fhat(z)^2 = 2^n, i.e.
// fhat(z) = 2^(-n/2) sum_x f(x) (-1)^(x.z). n is capped at 24 so the
// unnormalized integer transform stays cheap and exact.
inline constexpr int kMaxFourierBits = 24;

/// f : {0,1}^n -> {-1,+1}, stored as a 2^n truth table.
struct BooleanFn {
  int n = 0;
  std::vector<int8_t> table;

  void validate() const {
    if (n < 1 || n > kMaxFourierBits) throw std::invalid_argument("BooleanFn requires 1 <= n <= 24");
    if (table.size() != (size_t{1} << n)) throw std::invalid_argument("truth table must have 2^n entries");
    for (int8_t v : table)
      if (v != 1 && v != -1) throw std::invalid_argument("truth table entries must be +1 or -1");
  }
};

struct FourierTable {
  int n = 0;
  std::vector<double> coeffs;
};

/// One RNG bit per entry; bit 1 maps to -1.
inline BooleanFn random_boolean_fn(int n, RngStream& rng) {
  if (n < 1 || n > kMaxFourierBits) throw std::invalid_argument("random_boolean_fn requires 1 <= n <= 24");
  BooleanFn f{n, std::vector<int8_t>(size_t{1} << n)};
  for (auto& v : f.table) v = (rng.next_u64() & 1u) ? int8_t{-1} : int8_t{1};
  return f;
}

/// Unnormalized Walsh-Hadamard transform F(z) = sum_x f(x)(-1)^(x.z),
/// exact in 64-bit integers (|F| <= 2^n <= 2^24).
inline std::vector<int64_t> wht_unnormalized(const BooleanFn& f) {
  f.validate();
  std::vector<int64_t> out(f.table.begin(), f.table.end());
  const size_t size = out.size();
  for (size_t half = 1; half < size; half <<= 1)
    for (size_t block = 0; block < size; block += half << 1)
      for (size_t i = block; i < block + half; ++i) {
        const int64_t a = out[i];
        const int64_t b = out[i + half];
        out[i] = a + b;
        out[i + half] = a - b;
      }
  return out;
}

inline FourierTable wht(const BooleanFn& f) {
  std::vector<int64_t> raw = wht_unnormalized(f);
  const double scale = std::exp2(-0.5 * static_cast<double>(f.n));
  FourierTable t{f.n, std::vector<double>(raw.size())};
  for (size_t i = 0; i < raw.size(); ++i) t.coeffs[i] = static_cast<double>(raw[i]) * scale;
  return t;
}

/// Draws z with probability 2^-n fhat(z)^2 — the exact output law of the
/// Hadamard / query / Hadamard quantum circuit. Works on the integer
/// transform: sum_z F(z)^2 = 4^n exactly, so the inverse-CDF walk is exact.
inline BasisState fourier_sample(const BooleanFn& f, RngStream& rng) {
  std::vector<int64_t> raw = wht_unnormalized(f);
  const uint64_t total = uint64_t{1} << (2 * f.n);
  uint64_t r = rng.next_below(total);
  uint64_t acc = 0;
  for (size_t z = 0; z < raw.size(); ++z) {
    acc += static_cast<uint64_t>(raw[z] * raw[z]);
    if (acc > r) return BasisState{f.n, z};
  }
  throw std::logic_error("fourier_sample: Parseval mass exhausted early");
}

/// |fhat(z)| >= 1 (inclusive), decided exactly: F(z)^2 >= 2^n in integers.
inline bool fishing_success(const BooleanFn& f, const BasisState& z) {
  f.validate();
  if (z.n != f.n) throw std::invalid_argument("z width must equal f.n");
  int64_t coeff = 0;
  for (size_t x = 0; x < f.table.size(); ++x)
    coeff += (std::popcount(x & z.index) & 1) ? -f.table[x] : f.table[x];
  return coeff * coeff >= (int64_t{1} << f.n);
}

/// adv(f) = 2^-n sum_{|fhat(z)| >= 1} fhat(z)^2 = 4^-n sum_{F(z)^2 >= 2^n} F(z)^2.
inline double adv_f(const BooleanFn& f) {
  std::vector<int64_t> raw = wht_unnormalized(f);
  const int64_t threshold = int64_t{1} << f.n;
  uint64_t mass = 0;
  for (int64_t v : raw) {
    const int64_t sq = v * v;
    if (sq >= threshold) mass += static_cast<uint64_t>(sq);
  }
  return static_cast<double>(mass) / std::ldexp(1.0, 2 * f.n);
}

struct SuccConstants {
  double succ_q = 0.0;
  double succ_r = 0.0;
};

/// Succ_R = (2/sqrt(2 pi)) int_1^inf e^(-x^2/2) dx = erfc(1/sqrt(2));
/// Succ_Q = (2/sqrt(2 pi)) int_1^inf x^2 e^(-x^2/2) dx
///        = sqrt(2/pi) e^(-1/2) + Succ_R   (integration by parts).
inline SuccConstants succ_constants() {
  const double succ_r = std::erfc(1.0 / std::sqrt(2.0));
  const double succ_q = std::sqrt(2.0 / std::acos(-1.0)) * std::exp(-0.5) + succ_r;
  return SuccConstants{succ_q, succ_r};
}

// Hex-packed truth-table format: nibble j covers entries 4j..4j+3 with entry
// 4j at the nibble's most significant bit; bit 1 means f = -1. The final
// nibble is zero-padded when 2^n < 4.

inline std::string boolean_fn_to_hex(const BooleanFn& f) {
  f.validate();
  static const char* digits = "0123456789abcdef";
  const size_t size = f.table.size();
  std::vector<int> nibbles((size + 3) / 4, 0);
  for (size_t i = 0; i < size; ++i)
    if (f.table[i] == -1) nibbles[i / 4] |= 8 >> (i % 4);
  std::string out;
  out.reserve(nibbles.size());
  for (int v : nibbles) out.push_back(digits[v]);
  return out;
}

inline BooleanFn boolean_fn_from_hex(int n, const std::string& hex) {
  if (n < 1 || n > kMaxFourierBits) throw std::invalid_argument("BooleanFn requires 1 <= n <= 24");
  const size_t size = size_t{1} << n;
  const size_t want = (size + 3) / 4;
  std::string clean;
  for (char c : hex)
    if (!std::isspace(static_cast<unsigned char>(c))) clean.push_back(c);
  if (clean.size() != want)
    throw std::invalid_argument("truth table hex must have " + std::to_string(want) + " digits for n = " +
                                std::to_string(n));
  BooleanFn f{n, std::vector<int8_t>(size)};
  for (size_t i = 0; i < size; ++i) {
    const char c = clean[i / 4];
    int nibble;
    if (c >= '0' && c <= '9')
      nibble = c - '0';
    else if (c >= 'a' && c <= 'f')
      nibble = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F')
      nibble = c - 'A' + 10;
    else
      throw std::invalid_argument("invalid hex digit in truth table");
    f.table[i] = (nibble & (8 >> (i % 4))) ? int8_t{-1} : int8_t{1};
  }
  return f;
}

inline void write_boolean_fn_file(const BooleanFn& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << boolean_fn_to_hex(f) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline BooleanFn read_boolean_fn_file(int n, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return boolean_fn_from_hex(n, buf.str());
}

}  // namespace qsup

#endif  // QSUP_FOURIER_HPP_
