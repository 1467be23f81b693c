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

#ifndef QSUP_BACKEND_HPP_
#define QSUP_BACKEND_HPP_

#include <stdexcept>
#include <string>

#include "qsup/circuit.hpp"
#include "qsup/dense.hpp"
#include "qsup/gridcut.hpp"
#include "qsup/paths.hpp"
#include "qsup/recursive.hpp"

namespace qsup {

enum class Backend { dense, paths, savitch, tradeoff, hybrid, gridcut };

struct BackendOptions {
  Backend backend = Backend::dense;
  int tradeoff_k = 2;     // tradeoff only
  double hybrid_c = 1.0;  // hybrid only
  bool force = false;
};

inline Backend parse_backend(const std::string& name) {
  if (name == "dense") return Backend::dense;
  if (name == "paths") return Backend::paths;
  if (name == "savitch") return Backend::savitch;
  if (name == "tradeoff") return Backend::tradeoff;
  if (name == "hybrid") return Backend::hybrid;
  if (name == "gridcut") return Backend::gridcut;
  throw std::invalid_argument("unknown backend: " + name);
}

inline std::string backend_name(Backend b) {
  switch (b) {
    case Backend::dense: return "dense";
    case Backend::paths: return "paths";
    case Backend::savitch: return "savitch";
    case Backend::tradeoff: return "tradeoff";
    case Backend::hybrid: return "hybrid";
    case Backend::gridcut: return "gridcut";
  }
  throw std::logic_error("unreachable");
}

/// Uniform entry point: <y|C|x> via the selected backend. Layer-structured
/// backends layer the circuit on the fly.
inline Amplitude compute_amplitude(const Circuit& circuit, const BasisState& x, const BasisState& y,
                                   const BackendOptions& opts = {}) {
  switch (opts.backend) {
    case Backend::dense:
      return amplitude_dense(circuit, x, y, opts.force);
    case Backend::paths:
      return amplitude_paths(circuit, x, y, opts.force);
    case Backend::savitch:
      return amplitude_savitch(layering(circuit), x, y, opts.force);
    case Backend::tradeoff:
      return amplitude_tradeoff(layering(circuit), x, y, opts.tradeoff_k, opts.force);
    case Backend::hybrid:
      return amplitude_hybrid(layering(circuit), x, y, opts.hybrid_c, opts.force);
    case Backend::gridcut:
      return amplitude_gridcut(layering(circuit), x, y, opts.force);
  }
  throw std::logic_error("unreachable");
}

}  // namespace qsup

#endif  // QSUP_BACKEND_HPP_
