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

#ifndef QSUP_FORMAT_HPP_
#define QSUP_FORMAT_HPP_

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <system_error>

namespace qsup {

/// Shortest round-trip decimal representation (the same on every platform
/// with IEEE doubles, which keeps emitted CSV/JSON byte-stable).
inline std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  if (res.ec != std::errc{}) throw std::runtime_error("format_double: to_chars failed");
  return std::string(buf, res.ptr);
}

/// Fixed-point with `digits` decimals, for CLI-visible amplitudes.
inline std::string format_fixed(double value, int digits) {
  char buf[64];
  int len = std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  if (len < 0 || len >= static_cast<int>(sizeof(buf))) throw std::runtime_error("format_fixed: overflow");
  return std::string(buf, static_cast<size_t>(len));
}

}  // namespace qsup

#endif  // QSUP_FORMAT_HPP_
