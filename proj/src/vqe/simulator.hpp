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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vqe/pauli.hpp"

namespace vqe {

inline constexpr int kMaxStateQubits = 24;

/// 2^m amplitudes, big-endian: qubit 1 is the most significant index bit.
class StateVector {
 public:
  /// |0...0>
  static StateVector vacuum(int m);
  StateVector(int m, std::vector<Complex> amplitudes);

  [[nodiscard]] int num_qubits() const noexcept { return m_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return amps_.size(); }
  [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amps_; }
  [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }
  [[nodiscard]] Complex operator[](std::size_t i) const noexcept { return amps_[i]; }
  [[nodiscard]] double norm() const;
  [[nodiscard]] Eigen::VectorXcd to_eigen() const;

 private:
  int m_;
  std::vector<Complex> amps_;
};

inline StateVector init_vacuum(int m) { return StateVector::vacuum(m); }

/// R(phi) = cos(phi/2) I - i sin(phi/2) sigma on qubit q (1-based).
void apply_rotation(StateVector& s, int q, Axis axis, double phi);

enum class EntanglerKind { CnotChain, CnotPairs, CmNot, PstM, Iswap2 };

std::string_view entangler_name(EntanglerKind kind);
EntanglerKind parse_entangler(std::string_view name);
inline constexpr EntanglerKind kAllEntanglers[] = {EntanglerKind::CnotChain, EntanglerKind::CnotPairs,
                                                   EntanglerKind::CmNot, EntanglerKind::PstM,
                                                   EntanglerKind::Iswap2};

/// Textual description of the entangler's convention, recorded in reports.
std::string_view entangler_convention(EntanglerKind kind);

void apply_cnot(StateVector& s, int control, int target);
void apply_entangler(StateVector& s, EntanglerKind kind);

/// D = (3d + 2) m.
std::size_t parameter_count(int m, int depth);

/// Offset of qubit q's first angle in rotation layer `layer`. Layer 0 holds
/// (theta_X, theta_Z) per qubit, layers 1..d hold (theta_Z, theta_X,
/// theta_Z); angles are listed in the order they act on the state.
std::size_t parameter_offset(int m, int layer, int q);

StateVector prepare_trial_state(std::span<const double> theta, int depth, EntanglerKind kind, int m);

/// sum_k h_k <psi|sigma_k|psi>, term by term without forming dense matrices.
double expectation(const StateVector& s, const PauliSum& h);

}  // namespace vqe
