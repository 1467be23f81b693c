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

#ifndef QSUP_CIRCUIT_IO_HPP_
#define QSUP_CIRCUIT_IO_HPP_

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qsup/circuit.hpp"

namespace qsup {

// Circuit file schema:
//   {"n": <int>, "grid": {"h": <int>, "w": <int>} | null,
//    "gates": [{"q": [a, b], "u": [[[re, im] x4] x4]}, ...]}

inline nlohmann::ordered_json circuit_to_json(const Circuit& circuit) {
  nlohmann::ordered_json j;
  j["n"] = circuit.n;
  if (circuit.layout)
    j["grid"] = {{"h", circuit.layout->h}, {"w", circuit.layout->w}};
  else
    j["grid"] = nullptr;
  j["gates"] = nlohmann::ordered_json::array();
  for (const Gate& g : circuit.gates) {
    nlohmann::ordered_json u = nlohmann::ordered_json::array();
    for (int r = 0; r < 4; ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int c = 0; c < 4; ++c) row.push_back({g.u[r][c].real(), g.u[r][c].imag()});
      u.push_back(row);
    }
    j["gates"].push_back({{"q", {g.a, g.b}}, {"u", u}});
  }
  return j;
}

inline Circuit circuit_from_json(const nlohmann::json& j) {
  Circuit circuit;
  try {
    circuit.n = j.at("n").get<int>();
    if (j.contains("grid") && !j.at("grid").is_null()) {
      GridLayout layout;
      layout.h = j.at("grid").at("h").get<int>();
      layout.w = j.at("grid").at("w").get<int>();
      circuit.layout = layout;
    }
    const auto& gates = j.at("gates");
    if (!gates.is_array()) throw std::invalid_argument("\"gates\" must be an array");
    circuit.gates.reserve(gates.size());
    for (size_t i = 0; i < gates.size(); ++i) {
      const auto& jg = gates[i];
      Gate g;
      const auto& q = jg.at("q");
      if (!q.is_array() || q.size() != 2)
        throw std::invalid_argument("gate " + std::to_string(i + 1) + ": \"q\" must be a pair");
      g.a = q[0].get<int>();
      g.b = q[1].get<int>();
      const auto& u = jg.at("u");
      if (!u.is_array() || u.size() != 4)
        throw std::invalid_argument("gate " + std::to_string(i + 1) + ": \"u\" must be a 4x4 matrix");
      for (int r = 0; r < 4; ++r) {
        if (!u[r].is_array() || u[r].size() != 4)
          throw std::invalid_argument("gate " + std::to_string(i + 1) + ": \"u\" must be a 4x4 matrix");
        for (int c = 0; c < 4; ++c) {
          const auto& e = u[r][c];
          if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("gate " + std::to_string(i + 1) + ": matrix entries must be [re, im] pairs");
          g.u[r][c] = Amplitude(e[0].get<double>(), e[1].get<double>());
        }
      }
      circuit.gates.push_back(g);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed circuit JSON: ") + e.what());
  }
  circuit.validate();
  return circuit;
}

inline std::string circuit_to_string(const Circuit& circuit) { return circuit_to_json(circuit).dump(); }

inline Circuit circuit_from_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed circuit JSON: ") + e.what());
  }
  return circuit_from_json(j);
}

inline void write_circuit_file(const Circuit& circuit, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << circuit_to_string(circuit) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline Circuit read_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return circuit_from_string(buf.str());
}

}  // namespace qsup

#endif  // QSUP_CIRCUIT_IO_HPP_
