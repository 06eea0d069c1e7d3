// Copyright 2026 The vqe-taper Authors.
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
#include "vqe/pauli_io.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "vqe/error.hpp"

namespace vqe {

std::string to_text(const PauliSum& h) {
  std::string out;
  char buf[96];
  for (const auto& [term, c] : h.terms()) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g ", c.real(), c.imag());
    out += buf;
    out += term.axes();
    out += '\n';
  }
  return out;
}

PauliSum parse_pauli_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<PauliSum> sum;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    double re = 0, im = 0;
    std::string axes;
    if (!(fields >> re >> im)) {
      fail(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected '<re> <im> <axes>'");
    }
    fields >> axes;
    std::string extra;
    if (fields >> extra) {
      fail(ErrorCode::Parse, "line " + std::to_string(lineno) + ": trailing field '" + extra + "'");
    }
    if (!sum) sum.emplace(static_cast<int>(axes.size()));
    if (static_cast<int>(axes.size()) != sum->num_qubits()) {
      fail(ErrorCode::Parse, "line " + std::to_string(lineno) + ": inconsistent qubit count");
    }
    sum->add(PauliTerm(axes), Complex(re, im));
  }
  if (!sum) fail(ErrorCode::Parse, "no terms found");
  return *sum;
}

nlohmann::json to_json(const PauliSum& h) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [term, c] : h.terms()) {
    terms.push_back({{"re", c.real()}, {"im", c.imag()}, {"axes", term.axes()}});
  }
  return {{"m", h.num_qubits()}, {"terms", std::move(terms)}};
}

PauliSum pauli_sum_from_json(const nlohmann::json& j) {
  try {
    const int m = j.at("m").get<int>();
    PauliSum sum(m);
    for (const auto& t : j.at("terms")) {
      const auto axes = t.at("axes").get<std::string>();
      if (static_cast<int>(axes.size()) != m) {
        fail(ErrorCode::Parse, "term '" + axes + "' does not have m = " + std::to_string(m) + " axes");
      }
      sum.add(PauliTerm(axes), Complex(t.at("re").get<double>(), t.value("im", 0.0)));
    }
    return sum;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("Pauli sum JSON: ") + e.what());
  }
}

PauliSum parse_pauli_sum(std::string_view content) {
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && content[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::Parse, std::string("Pauli sum JSON: ") + e.what());
    }
    return pauli_sum_from_json(j);
  }
  return parse_pauli_text(content);
}

PauliSum load_pauli_sum(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_pauli_sum(ss.str());
}

}  // namespace vqe
