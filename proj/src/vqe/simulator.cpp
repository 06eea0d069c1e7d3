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
#include "vqe/simulator.hpp"

#include <bit>
#include <cmath>

#include "vqe/error.hpp"

namespace vqe {
namespace {

constexpr Complex kI{0, 1};
constexpr double kImaginaryResidue = 1e-9;

void check_qubit(const StateVector& s, int q) {
  if (q < 1 || q > s.num_qubits()) {
    fail(ErrorCode::InvalidArgument, "qubit " + std::to_string(q) + " outside 1.." +
                                         std::to_string(s.num_qubits()));
  }
}

std::uint64_t reverse_bits(std::uint64_t b, int m) {
  std::uint64_t out = 0;
  for (int i = 0; i < m; ++i) {
    out = (out << 1) | (b & 1);
    b >>= 1;
  }
  return out;
}

// Applies |b> -> phase * |f(b)> for a bijection f.
template <typename Map>
void permute(StateVector& s, Complex phase, Map f) {
  auto amps = s.amplitudes();
  std::vector<Complex> out(amps.size());
  for (std::uint64_t b = 0; b < amps.size(); ++b) out[f(b)] = phase * amps[b];
  std::copy(out.begin(), out.end(), amps.begin());
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double acc = 0;
    for (double x : v) acc += x;
    return acc;
  }
  const auto half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

}  // namespace

StateVector StateVector::vacuum(int m) {
  if (m < 1 || m > kMaxStateQubits) {
    fail(ErrorCode::Dimension, "state vectors need 1.." + std::to_string(kMaxStateQubits) + " qubits");
  }
  std::vector<Complex> amps(std::size_t{1} << m);
  amps[0] = 1.0;
  return {m, std::move(amps)};
}

StateVector::StateVector(int m, std::vector<Complex> amplitudes) : m_(m), amps_(std::move(amplitudes)) {
  if (m < 1 || m > kMaxStateQubits) {
    fail(ErrorCode::Dimension, "state vectors need 1.." + std::to_string(kMaxStateQubits) + " qubits");
  }
  if (amps_.size() != (std::size_t{1} << m)) fail(ErrorCode::Dimension, "amplitude count is not 2^m");
}

double StateVector::norm() const {
  double acc = 0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

Eigen::VectorXcd StateVector::to_eigen() const {
  return Eigen::Map<const Eigen::VectorXcd>(amps_.data(), static_cast<Eigen::Index>(amps_.size()));
}

void apply_rotation(StateVector& s, int q, Axis axis, double phi) {
  check_qubit(s, q);
  const double c = std::cos(phi / 2);
  const double sn = std::sin(phi / 2);
  const auto bit = qubit_bit(s.num_qubits(), q);
  auto amps = s.amplitudes();
  switch (axis) {
    case Axis::I:
      return;
    case Axis::Z: {
      const Complex lo(c, -sn), hi(c, sn);
      for (std::uint64_t b = 0; b < amps.size(); ++b) amps[b] *= (b & bit) ? hi : lo;
      return;
    }
    case Axis::X:
    case Axis::Y:
      break;
  }
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    if (b & bit) continue;
    const Complex a0 = amps[b];
    const Complex a1 = amps[b | bit];
    if (axis == Axis::X) {
      amps[b] = c * a0 - kI * sn * a1;
      amps[b | bit] = -kI * sn * a0 + c * a1;
    } else {
      amps[b] = c * a0 - sn * a1;
      amps[b | bit] = sn * a0 + c * a1;
    }
  }
}

std::string_view entangler_name(EntanglerKind kind) {
  switch (kind) {
    case EntanglerKind::CnotChain: return "cnot_chain";
    case EntanglerKind::CnotPairs: return "cnot_pairs";
    case EntanglerKind::CmNot: return "cmnot";
    case EntanglerKind::PstM: return "pst";
    case EntanglerKind::Iswap2: return "iswap2";
  }
  return "?";
}

EntanglerKind parse_entangler(std::string_view name) {
  for (auto k : kAllEntanglers) {
    if (entangler_name(k) == name) return k;
  }
  fail(ErrorCode::Parse, "unknown entangler '" + std::string(name) +
                             "' (cnot_chain, cnot_pairs, cmnot, pst, iswap2)");
}

std::string_view entangler_convention(EntanglerKind kind) {
  switch (kind) {
    case EntanglerKind::CnotChain:
      return "CNOT(q, q+1) for q = 1..m-1, ascending";
    case EntanglerKind::CnotPairs:
      return "CNOT(i, j) for all i < j, ascending lexicographic";
    case EntanglerKind::CmNot:
      return "qubit 1 controls X on qubits 2..m";
    case EntanglerKind::PstM:
      return "|b1..bm> -> i |bm..b1> (bit reversal, uniform phase i)";
    case EntanglerKind::Iswap2:
      return "if qubits 1..m-2 are all |1>: |c b_{m-1} b_m> -> i |c b_m b_{m-1}>, else identity";
  }
  return "?";
}

void apply_cnot(StateVector& s, int control, int target) {
  check_qubit(s, control);
  check_qubit(s, target);
  if (control == target) fail(ErrorCode::InvalidArgument, "CNOT control equals target");
  const auto cbit = qubit_bit(s.num_qubits(), control);
  const auto tbit = qubit_bit(s.num_qubits(), target);
  auto amps = s.amplitudes();
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    if ((b & cbit) && !(b & tbit)) std::swap(amps[b], amps[b | tbit]);
  }
}

void apply_entangler(StateVector& s, EntanglerKind kind) {
  const int m = s.num_qubits();
  if (m < 2) fail(ErrorCode::Dimension, "entanglers need at least 2 qubits");
  switch (kind) {
    case EntanglerKind::CnotChain:
      for (int q = 1; q < m; ++q) apply_cnot(s, q, q + 1);
      return;
    case EntanglerKind::CnotPairs:
      for (int i = 1; i < m; ++i) {
        for (int j = i + 1; j <= m; ++j) apply_cnot(s, i, j);
      }
      return;
    case EntanglerKind::CmNot: {
      const auto control = qubit_bit(m, 1);
      const auto targets = control - 1;
      auto amps = s.amplitudes();
      for (std::uint64_t b = control; b < amps.size(); ++b) {
        const auto partner = b ^ targets;
        if (b < partner) std::swap(amps[b], amps[partner]);
      }
      return;
    }
    case EntanglerKind::PstM:
      permute(s, kI, [m](std::uint64_t b) { return reverse_bits(b, m); });
      return;
    case EntanglerKind::Iswap2: {
      const std::uint64_t controls = ((std::uint64_t{1} << m) - 1) & ~std::uint64_t{3};
      auto amps = s.amplitudes();
      for (std::uint64_t b = controls; b < amps.size(); ++b) {
        if ((b & controls) != controls) continue;
        if ((b & 3) == 1) std::swap(amps[b], amps[b ^ 3]);
        amps[b] *= kI;
      }
      return;
    }
  }
}

std::size_t parameter_count(int m, int depth) {
  if (m < 1 || depth < 0) fail(ErrorCode::InvalidArgument, "need m >= 1 and depth >= 0");
  return static_cast<std::size_t>(3 * depth + 2) * static_cast<std::size_t>(m);
}

std::size_t parameter_offset(int m, int layer, int q) {
  const auto mm = static_cast<std::size_t>(m);
  const auto qq = static_cast<std::size_t>(q - 1);
  if (layer == 0) return 2 * qq;
  return 2 * mm + 3 * mm * static_cast<std::size_t>(layer - 1) + 3 * qq;
}

StateVector prepare_trial_state(std::span<const double> theta, int depth, EntanglerKind kind, int m) {
  const auto expected = parameter_count(m, depth);
  if (theta.size() != expected) {
    fail(ErrorCode::InvalidArgument, "parameter vector has length " + std::to_string(theta.size()) +
                                         ", expected (3d+2)m = " + std::to_string(expected));
  }
  StateVector s = StateVector::vacuum(m);
  for (int q = 1; q <= m; ++q) {
    const auto o = parameter_offset(m, 0, q);
    apply_rotation(s, q, Axis::X, theta[o]);
    apply_rotation(s, q, Axis::Z, theta[o + 1]);
  }
  for (int layer = 1; layer <= depth; ++layer) {
    if (m >= 2) apply_entangler(s, kind);
    for (int q = 1; q <= m; ++q) {
      const auto o = parameter_offset(m, layer, q);
      apply_rotation(s, q, Axis::Z, theta[o]);
      apply_rotation(s, q, Axis::X, theta[o + 1]);
      apply_rotation(s, q, Axis::Z, theta[o + 2]);
    }
  }
  return s;
}

double expectation(const StateVector& s, const PauliSum& h) {
  if (h.num_qubits() != s.num_qubits()) fail(ErrorCode::Dimension, "state and Hamiltonian differ in m");
  if (!h.is_hermitian()) fail(ErrorCode::NotHermitian, "expectation needs a Hermitian Pauli sum");
  static constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const auto amps = s.amplitudes();
  std::vector<double> contributions;
  contributions.reserve(h.size());
  double imaginary = 0;
  for (const auto& [k, c] : h.map()) {
    // <psi| P |psi> = sum_b conj(psi[b^x]) i^{|x&z|} (-1)^{z.b} psi[b]
    Complex acc = 0;
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
      const Complex v = std::conj(amps[b ^ k.x]) * amps[b];
      acc += (std::popcount(k.z & b) & 1) ? -v : v;
    }
    const Complex term = c * kIPowers[std::popcount(k.x & k.z) & 3] * acc;
    contributions.push_back(term.real());
    imaginary += term.imag();
  }
  if (std::abs(imaginary) > kImaginaryResidue) {
    fail(ErrorCode::Numerical, "expectation has imaginary residue " + std::to_string(imaginary));
  }
  return pairwise_sum(contributions);
}

}  // namespace vqe
