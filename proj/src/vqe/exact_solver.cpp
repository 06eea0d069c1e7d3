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
#include "vqe/exact_solver.hpp"

#include <Eigen/Eigenvalues>

#include "vqe/error.hpp"

namespace vqe {

SpectrumResult ground_energy(const PauliSum& h) {
  if (h.num_qubits() > kMaxExactQubits) {
    fail(ErrorCode::Dimension, "exact solver limited to " + std::to_string(kMaxExactQubits) + " qubits");
  }
  if (!h.is_hermitian()) fail(ErrorCode::NotHermitian, "exact solver needs a Hermitian Pauli sum");

  const DenseMatrix dense = to_dense(h);
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(dense);
  if (solver.info() != Eigen::Success) fail(ErrorCode::Numerical, "eigensolver did not converge");

  SpectrumResult out;
  const auto& values = solver.eigenvalues();
  out.eigenvalues.assign(values.data(), values.data() + values.size());
  out.ground_energy = out.eigenvalues.front();
  out.ground_state = solver.eigenvectors().col(0);
  out.residual = (dense * out.ground_state - out.ground_energy * out.ground_state).norm();
  return out;
}

}  // namespace vqe
