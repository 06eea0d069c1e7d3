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

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vqe {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;

inline constexpr int kMaxQubits = 64;
inline constexpr int kMaxDenseQubits = 14;
inline constexpr double kPruneTolerance = 1e-12;

enum class Axis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char axis_char(Axis a);
Axis axis_from_char(char c);

/// Basis-index bit of qubit q (1-based). Qubit 1 is the leftmost tensor
/// factor, i.e. the most significant bit of a basis index.
constexpr std::uint64_t qubit_bit(int m, int q) {
  return std::uint64_t{1} << (m - q);
}

/// Binary (a_x|a_z) encoding of a Pauli string modulo phase.
class SymplecticVector {
 public:
  SymplecticVector() = default;
  SymplecticVector(int m, std::uint64_t x, std::uint64_t z);

  /// Parses the "0011|0101" notation.
  static SymplecticVector parse(std::string_view bits);

  [[nodiscard]] int num_qubits() const noexcept { return m_; }
  [[nodiscard]] std::uint64_t x_bits() const noexcept { return x_; }
  [[nodiscard]] std::uint64_t z_bits() const noexcept { return z_; }
  [[nodiscard]] bool x(int q) const noexcept { return (x_ & qubit_bit(m_, q)) != 0; }
  [[nodiscard]] bool z(int q) const noexcept { return (z_ & qubit_bit(m_, q)) != 0; }
  [[nodiscard]] bool is_zero() const noexcept { return x_ == 0 && z_ == 0; }
  [[nodiscard]] std::string to_string() const;

  /// GF(2) addition, i.e. the Pauli product with phases dropped.
  SymplecticVector operator^(const SymplecticVector& other) const;

  friend bool operator==(const SymplecticVector&, const SymplecticVector&) = default;

 private:
  int m_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// a_x . b_z + a_z . b_x over GF(2): 0 iff the two Paulis commute.
int symplectic_product(const SymplecticVector& a, const SymplecticVector& b);

/// An m-fold Pauli operator i^k * (P_1 (x) ... (x) P_m).
class PauliTerm {
 public:
  PauliTerm() = default;
  explicit PauliTerm(std::string_view axes, int phase_power = 0);
  PauliTerm(int m, std::uint64_t x, std::uint64_t z, int phase_power = 0);

  static PauliTerm identity(int m) { return PauliTerm(m, 0, 0); }
  static PauliTerm single(int m, int q, Axis axis);

  [[nodiscard]] int num_qubits() const noexcept { return m_; }
  [[nodiscard]] Axis axis(int q) const;
  [[nodiscard]] std::uint64_t x_mask() const noexcept { return x_; }
  [[nodiscard]] std::uint64_t z_mask() const noexcept { return z_; }
  /// Phase as a power k of i, k in 0..3.
  [[nodiscard]] int phase_power() const noexcept { return phase_; }
  [[nodiscard]] Complex phase() const;
  [[nodiscard]] bool is_identity() const noexcept { return x_ == 0 && z_ == 0; }
  [[nodiscard]] std::string axes() const;
  /// Axes with a phase prefix, e.g. "-iXZ".
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] PauliTerm without_phase() const { return PauliTerm(m_, x_, z_); }
  [[nodiscard]] bool commutes_with(const PauliTerm& other) const;

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;

 private:
  int m_ = 0;
  std::uint64_t x_ = 0;  // set where the axis is X or Y
  std::uint64_t z_ = 0;  // set where the axis is Z or Y
  int phase_ = 0;
};

SymplecticVector encode_symplectic(const PauliTerm& p);
/// Inverse of encode_symplectic; both bits set decode to Y and the phase is +1.
PauliTerm decode_symplectic(const SymplecticVector& v);

/// Exact group product, phase tracked.
PauliTerm multiply(const PauliTerm& p, const PauliTerm& q);
inline PauliTerm operator*(const PauliTerm& p, const PauliTerm& q) { return multiply(p, q); }

/// Sparse weighted sum of phase-free Pauli strings on m qubits. Coefficients
/// with magnitude below kPruneTolerance are never stored.
class PauliSum {
 public:
  struct Key {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
  };
  /// Orders keys like their axes strings, with I < X < Y < Z.
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const noexcept;
  };
  using Map = std::map<Key, Complex, KeyLess>;

  PauliSum() = default;
  explicit PauliSum(int m);

  static PauliSum constant(int m, Complex c);
  static PauliSum from_term(const PauliTerm& p, Complex coeff = 1.0);

  /// Adds coeff * p; the term's phase is absorbed into the coefficient.
  void add(const PauliTerm& p, Complex coeff = 1.0);
  void add(std::string_view axes, Complex coeff);

  [[nodiscard]] int num_qubits() const noexcept { return m_; }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
  [[nodiscard]] const Map& map() const noexcept { return terms_; }
  [[nodiscard]] PauliTerm term(const Key& k) const { return PauliTerm(m_, k.x, k.z); }
  /// Terms in storage order, phase +1.
  [[nodiscard]] std::vector<std::pair<PauliTerm, Complex>> terms() const;

  [[nodiscard]] Complex coefficient(const PauliTerm& p) const;
  [[nodiscard]] Complex coefficient(std::string_view axes) const;

  /// True iff every coefficient is real within tol.
  [[nodiscard]] bool is_hermitian(double tol = 1e-10) const;
  /// Drops imaginary parts no larger than tol; throws NotHermitian otherwise.
  [[nodiscard]] PauliSum real_part(double tol = 1e-10) const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator*=(Complex s);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator*(PauliSum a, Complex s) { return a *= s; }
  friend PauliSum operator*(Complex s, PauliSum a) { return a *= s; }
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

 private:
  void accumulate(Key k, Complex c);

  int m_ = 0;
  Map terms_;
};

/// Kronecker product with qubit 1 as the leftmost factor. m <= 14.
DenseMatrix to_dense(const PauliTerm& p);
DenseMatrix to_dense(const PauliSum& h);

/// Coefficients h_k = 2^-m tr(sigma_k^dagger H), evaluated with one
/// Walsh-Hadamard transform per X-pattern (O(m 4^m)).
PauliSum decompose_dense(const DenseMatrix& h, int m);

}  // namespace vqe
