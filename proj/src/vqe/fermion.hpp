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
#include <optional>
#include <utility>
#include <vector>

#include "vqe/pauli.hpp"

namespace vqe {

/// Second-quantized molecular data in Hartree, spin-orbital basis:
///   H = V_nn + sum_pq h_pq a+_p a_q + 1/2 sum_pqrs h_pqrs a+_p a+_q a_r a_s
/// Mode indices are 1-based in the public accessors. Odd modes are spin up,
/// even modes spin down.
class MolecularIntegrals {
 public:
  MolecularIntegrals(int n_spin_orbitals, double v_nn, std::vector<double> h_pq,
                     std::vector<double> h_pqrs, nlohmann::json metadata = {},
                     std::optional<double> reference_ground_energy = std::nullopt);

  [[nodiscard]] int num_spin_orbitals() const noexcept { return m_; }
  [[nodiscard]] double nuclear_repulsion() const noexcept { return v_nn_; }
  [[nodiscard]] double one_body(int p, int q) const;
  [[nodiscard]] double two_body(int p, int q, int r, int s) const;
  [[nodiscard]] const nlohmann::json& metadata() const noexcept { return metadata_; }
  [[nodiscard]] std::optional<double> reference_ground_energy() const noexcept {
    return reference_;
  }

 private:
  int m_;
  double v_nn_;
  std::vector<double> h_pq_;
  std::vector<double> h_pqrs_;
  nlohmann::json metadata_;
  std::optional<double> reference_;
};

MolecularIntegrals integrals_from_json(const nlohmann::json& j);
MolecularIntegrals load_integrals(const std::filesystem::path& path);

/// Jordan-Wigner image of a_j (dagger = false) or a_j^dagger on m qubits:
/// I^{j-1} (x) sigma^{+/-} (x) Z^{m-j}, sigma^{+/-} = (X +/- iY)/2.
PauliSum jw_ladder(int j, bool dagger, int m);

PauliSum build_qubit_hamiltonian(const MolecularIntegrals& mi);

/// (N_up, N_down) as I/Z Pauli sums; m must be even.
std::pair<PauliSum, PauliSum> number_operators(int m);

/// (-1)^{N_up} and (-1)^{N_down}: the Z-strings over the up and down modes.
std::pair<PauliTerm, PauliTerm> number_parity_operators(int m);

}  // namespace vqe
