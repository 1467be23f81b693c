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

#ifndef QSUP_RNG_HPP_
#define QSUP_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace qsup {

/// Splittable deterministic PRNG (splitmix64 core).
///
/// A stream is fully determined by (seed, stream index), so per-sample
/// substreams reproduce bit-identically regardless of host, thread count, or
/// how draws from other streams are interleaved. The standard library's
/// distribution objects are deliberately avoided: their output is
/// implementation-defined, which would break cross-platform reproducibility.
class RngStream {
 public:
  RngStream(uint64_t seed, uint64_t stream)
      : state_(mix(seed + kGolden) ^ mix(stream * kGolden + 0x94D049BB133111EBull)),
        seed_(seed),
        stream_(stream) {}

  uint64_t seed() const { return seed_; }
  uint64_t stream() const { return stream_; }

  uint64_t next_u64() {
    uint64_t z = (state_ += kGolden);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (pairs cached).
  double next_normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u = 1.0 - next_double();  // (0, 1], keeps log() finite
    double v = next_double();
    double r = std::sqrt(-2.0 * std::log(u));
    double t = 2.0 * kPi * v;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  /// Uniform integer in [0, bound), rejection-sampled to avoid modulo bias.
  uint64_t next_below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
    uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  static constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;
  static constexpr double kPi = 3.14159265358979323846;

  static constexpr uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  uint64_t state_;
  uint64_t seed_;
  uint64_t stream_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace qsup

#endif  // QSUP_RNG_HPP_
