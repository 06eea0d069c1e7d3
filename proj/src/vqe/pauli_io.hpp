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
#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

#include "vqe/pauli.hpp"

namespace vqe {

// Text form: one term per line, "<re> <im> <axes>". Blank lines and lines
// starting with '#' are ignored. A scalar (0-qubit) term has an empty axes
// field; the qubit count is taken from the first term.
std::string to_text(const PauliSum& h);
PauliSum parse_pauli_text(std::string_view text);

// JSON form: {"m": 4, "terms": [{"re": 0.5, "im": 0.0, "axes": "IZXY"}]}
nlohmann::json to_json(const PauliSum& h);
PauliSum pauli_sum_from_json(const nlohmann::json& j);

/// Loads either form; JSON is detected by a leading '{'.
PauliSum load_pauli_sum(const std::filesystem::path& path);
PauliSum parse_pauli_sum(std::string_view content);

}  // namespace vqe
