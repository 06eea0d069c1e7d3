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

#include <vector>

#include "vqe/pauli.hpp"

namespace vqe {

inline constexpr int kMaxExactQubits = 12;

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending
  double ground_energy = 0;
  Eigen::VectorXcd ground_state;
  double residual = 0;  // ||H v - lambda v|| for the ground pair
};

/// Dense Hermitian eigensolve of a Pauli sum, m <= 12.
SpectrumResult ground_energy(const PauliSum& h);

}  // namespace vqe
