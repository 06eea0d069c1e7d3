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
#include "vqe/pauli.hpp"

#include <bit>
#include <cmath>

#include "vqe/error.hpp"

namespace vqe {
namespace {

constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_qubits(int m) {
  if (m < 0 || m > kMaxQubits) {
    fail(ErrorCode::Dimension, "qubit count " + std::to_string(m) + " outside 0.." +
                                   std::to_string(kMaxQubits));
  }
}

std::uint64_t full_mask(int m) {
  return m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
}

Axis axis_of(bool x, bool z) {
  if (x && z) return Axis::Y;
  if (x) return Axis::X;
  if (z) return Axis::Z;
  return Axis::I;
}

// Power of i picked up by the single-qubit product a*b.
int product_phase(Axis a, Axis b) {
  if (a == Axis::I || b == Axis::I || a == b) return 0;
  // cyclic X->Y->Z gives +i, anti-cyclic gives -i
  const int da = static_cast<int>(a);
  const int db = static_cast<int>(b);
  return ((db - da + 3) % 3 == 1) ? 1 : 3;
}

int order_code(bool x, bool z) {
  // I < X < Y < Z
  if (x && z) return 2;
  if (x) return 1;
  if (z) return 3;
  return 0;
}

}  // namespace

char axis_char(Axis a) {
  switch (a) {
    case Axis::I: return 'I';
    case Axis::X: return 'X';
    case Axis::Y: return 'Y';
    case Axis::Z: return 'Z';
  }
  return '?';
}

Axis axis_from_char(char c) {
  switch (c) {
    case 'I': return Axis::I;
    case 'X': return Axis::X;
    case 'Y': return Axis::Y;
    case 'Z': return Axis::Z;
    default:
      fail(ErrorCode::Parse, std::string("invalid Pauli axis '") + c + "'");
  }
}

// ---------------------------------------------------------------------------
// SymplecticVector

SymplecticVector::SymplecticVector(int m, std::uint64_t x, std::uint64_t z)
    : m_(m), x_(x), z_(z) {
  check_qubits(m);
  if ((x & ~full_mask(m)) != 0 || (z & ~full_mask(m)) != 0) {
    fail(ErrorCode::InvalidArgument, "symplectic bits exceed qubit count");
  }
}

SymplecticVector SymplecticVector::parse(std::string_view bits) {
  const auto bar = bits.find('|');
  if (bar == std::string_view::npos) fail(ErrorCode::Parse, "missing '|' in symplectic vector");
  const auto xs = bits.substr(0, bar);
  const auto zs = bits.substr(bar + 1);
  if (xs.size() != zs.size()) {
    fail(ErrorCode::Parse, "symplectic halves differ in length");
  }
  const int m = static_cast<int>(xs.size());
  check_qubits(m);
  std::uint64_t x = 0, z = 0;
  for (int q = 1; q <= m; ++q) {
    for (auto [s, dst] : {std::pair{xs, &x}, std::pair{zs, &z}}) {
      const char c = s[q - 1];
      if (c != '0' && c != '1') fail(ErrorCode::Parse, "symplectic bits must be 0 or 1");
      if (c == '1') *dst |= qubit_bit(m, q);
    }
  }
  return {m, x, z};
}

std::string SymplecticVector::to_string() const {
  std::string s;
  s.reserve(2 * m_ + 1);
  for (int q = 1; q <= m_; ++q) s.push_back(x(q) ? '1' : '0');
  s.push_back('|');
  for (int q = 1; q <= m_; ++q) s.push_back(z(q) ? '1' : '0');
  return s;
}

SymplecticVector SymplecticVector::operator^(const SymplecticVector& other) const {
  if (m_ != other.m_) fail(ErrorCode::Dimension, "symplectic length mismatch");
  return {m_, x_ ^ other.x_, z_ ^ other.z_};
}

int symplectic_product(const SymplecticVector& a, const SymplecticVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    fail(ErrorCode::Dimension, "symplectic length mismatch");
  }
  const auto bits = (a.x_bits() & b.z_bits()) ^ (a.z_bits() & b.x_bits());
  return std::popcount(bits) & 1;
}

// ---------------------------------------------------------------------------
// PauliTerm

PauliTerm::PauliTerm(std::string_view axes, int phase_power)
    : m_(static_cast<int>(axes.size())), phase_(((phase_power % 4) + 4) % 4) {
  check_qubits(m_);
  for (int q = 1; q <= m_; ++q) {
    const Axis a = axis_from_char(axes[q - 1]);
    if (a == Axis::X || a == Axis::Y) x_ |= qubit_bit(m_, q);
    if (a == Axis::Z || a == Axis::Y) z_ |= qubit_bit(m_, q);
  }
}

PauliTerm::PauliTerm(int m, std::uint64_t x, std::uint64_t z, int phase_power)
    : m_(m), x_(x), z_(z), phase_(((phase_power % 4) + 4) % 4) {
  check_qubits(m);
  if ((x & ~full_mask(m)) != 0 || (z & ~full_mask(m)) != 0) {
    fail(ErrorCode::InvalidArgument, "Pauli mask exceeds qubit count");
  }
}

PauliTerm PauliTerm::single(int m, int q, Axis axis) {
  if (q < 1 || q > m) fail(ErrorCode::InvalidArgument, "qubit index out of range");
  const auto bit = qubit_bit(m, q);
  const bool x = axis == Axis::X || axis == Axis::Y;
  const bool z = axis == Axis::Z || axis == Axis::Y;
  return {m, x ? bit : 0, z ? bit : 0};
}

Axis PauliTerm::axis(int q) const {
  if (q < 1 || q > m_) fail(ErrorCode::InvalidArgument, "qubit index out of range");
  const auto bit = qubit_bit(m_, q);
  return axis_of((x_ & bit) != 0, (z_ & bit) != 0);
}

Complex PauliTerm::phase() const { return kIPowers[phase_]; }

std::string PauliTerm::axes() const {
  std::string s(static_cast<std::size_t>(m_), 'I');
  for (int q = 1; q <= m_; ++q) s[q - 1] = axis_char(axis(q));
  return s;
}

std::string PauliTerm::to_string() const {
  static const char* prefix[4] = {"+", "+i", "-", "-i"};
  return prefix[phase_] + axes();
}

bool PauliTerm::commutes_with(const PauliTerm& other) const {
  return symplectic_product(encode_symplectic(*this), encode_symplectic(other)) == 0;
}

SymplecticVector encode_symplectic(const PauliTerm& p) {
  return {p.num_qubits(), p.x_mask(), p.z_mask()};
}

PauliTerm decode_symplectic(const SymplecticVector& v) {
  return {v.num_qubits(), v.x_bits(), v.z_bits()};
}

PauliTerm multiply(const PauliTerm& p, const PauliTerm& q) {
  const int m = p.num_qubits();
  if (m != q.num_qubits()) fail(ErrorCode::Dimension, "Pauli length mismatch");
  int phase = p.phase_power() + q.phase_power();
  const auto busy = (p.x_mask() | p.z_mask()) & (q.x_mask() | q.z_mask());
  for (int q_idx = 1; q_idx <= m; ++q_idx) {
    const auto bit = qubit_bit(m, q_idx);
    if ((busy & bit) == 0) continue;
    phase += product_phase(axis_of(p.x_mask() & bit, p.z_mask() & bit),
                           axis_of(q.x_mask() & bit, q.z_mask() & bit));
  }
  return {m, p.x_mask() ^ q.x_mask(), p.z_mask() ^ q.z_mask(), phase};
}

// ---------------------------------------------------------------------------
// PauliSum

bool PauliSum::KeyLess::operator()(const Key& a, const Key& b) const noexcept {
  const auto diff = (a.x ^ b.x) | (a.z ^ b.z);
  if (diff == 0) return false;
  const auto top = std::uint64_t{1} << (63 - std::countl_zero(diff));
  return order_code(a.x & top, a.z & top) < order_code(b.x & top, b.z & top);
}

PauliSum::PauliSum(int m) : m_(m) { check_qubits(m); }

PauliSum PauliSum::constant(int m, Complex c) {
  PauliSum s(m);
  s.accumulate({0, 0}, c);
  return s;
}

PauliSum PauliSum::from_term(const PauliTerm& p, Complex coeff) {
  PauliSum s(p.num_qubits());
  s.add(p, coeff);
  return s;
}

void PauliSum::accumulate(Key k, Complex c) {
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kPruneTolerance) terms_.erase(it);
}

void PauliSum::add(const PauliTerm& p, Complex coeff) {
  if (p.num_qubits() != m_) fail(ErrorCode::Dimension, "term length differs from sum");
  accumulate({p.x_mask(), p.z_mask()}, coeff * p.phase());
}

void PauliSum::add(std::string_view axes, Complex coeff) { add(PauliTerm(axes), coeff); }

std::vector<std::pair<PauliTerm, Complex>> PauliSum::terms() const {
  std::vector<std::pair<PauliTerm, Complex>> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.emplace_back(term(k), c);
  return out;
}

Complex PauliSum::coefficient(const PauliTerm& p) const {
  if (p.num_qubits() != m_) fail(ErrorCode::Dimension, "term length differs from sum");
  const auto it = terms_.find({p.x_mask(), p.z_mask()});
  return it == terms_.end() ? Complex{} : it->second;
}

Complex PauliSum::coefficient(std::string_view axes) const {
  return coefficient(PauliTerm(axes));
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& [k, c] : terms_) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

PauliSum PauliSum::real_part(double tol) const {
  PauliSum out(m_);
  for (const auto& [k, c] : terms_) {
    if (std::abs(c.imag()) > tol) {
      fail(ErrorCode::NotHermitian, "imaginary coefficient " + std::to_string(c.imag()) +
                                        " on " + term(k).axes());
    }
    out.accumulate(k, c.real());
  }
  return out;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.m_ != m_) fail(ErrorCode::Dimension, "qubit count mismatch in sum");
  for (const auto& [k, c] : other.terms_) accumulate(k, c);
  return *this;
}

PauliSum& PauliSum::operator*=(Complex s) {
  Map scaled;
  for (const auto& [k, c] : terms_) {
    const Complex v = c * s;
    if (std::abs(v) >= kPruneTolerance) scaled.emplace(k, v);
  }
  terms_ = std::move(scaled);
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  if (a.m_ != b.m_) fail(ErrorCode::Dimension, "qubit count mismatch in product");
  PauliSum out(a.m_);
  for (const auto& [ka, ca] : a.terms_) {
    const PauliTerm pa = a.term(ka);
    for (const auto& [kb, cb] : b.terms_) {
      out.add(multiply(pa, b.term(kb)), ca * cb);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dense conversion

namespace {

void check_dense(int m) {
  if (m > kMaxDenseQubits) {
    fail(ErrorCode::Dimension, "dense conversion limited to " +
                                   std::to_string(kMaxDenseQubits) + " qubits");
  }
}

// P|b> = i^{|x&z|} (-1)^{popcount(z&b)} |b^x>
void add_term_dense(DenseMatrix& out, std::uint64_t x, std::uint64_t z, Complex coeff) {
  const auto dim = static_cast<std::uint64_t>(out.rows());
  const Complex base = coeff * kIPowers[std::popcount(x & z) & 3];
  for (std::uint64_t b = 0; b < dim; ++b) {
    const bool odd = (std::popcount(z & b) & 1) != 0;
    out(static_cast<Eigen::Index>(b ^ x), static_cast<Eigen::Index>(b)) += odd ? -base : base;
  }
}

}  // namespace

DenseMatrix to_dense(const PauliTerm& p) {
  check_dense(p.num_qubits());
  const Eigen::Index dim = Eigen::Index{1} << p.num_qubits();
  DenseMatrix out = DenseMatrix::Zero(dim, dim);
  add_term_dense(out, p.x_mask(), p.z_mask(), p.phase());
  return out;
}

DenseMatrix to_dense(const PauliSum& h) {
  check_dense(h.num_qubits());
  const Eigen::Index dim = Eigen::Index{1} << h.num_qubits();
  DenseMatrix out = DenseMatrix::Zero(dim, dim);
  for (const auto& [k, c] : h.map()) add_term_dense(out, k.x, k.z, c);
  return out;
}

PauliSum decompose_dense(const DenseMatrix& h, int m) {
  if (h.rows() != h.cols()) fail(ErrorCode::Dimension, "matrix is not square");
  const auto n = static_cast<std::uint64_t>(h.rows());
  if (n == 0 || !std::has_single_bit(n)) {
    fail(ErrorCode::Dimension, "dimension " + std::to_string(n) + " is not a power of two");
  }
  if (m < 0 || n != (std::uint64_t{1} << m)) {
    fail(ErrorCode::Dimension, "dimension does not match qubit count " + std::to_string(m));
  }
  check_dense(m);

  PauliSum out(m);
  const double norm = 1.0 / static_cast<double>(n);
  std::vector<Complex> f(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t b = 0; b < n; ++b) {
      f[b] = h(static_cast<Eigen::Index>(b ^ x), static_cast<Eigen::Index>(b));
    }
    // in-place Walsh-Hadamard: f[z] <- sum_b (-1)^{z.b} f[b]
    for (std::uint64_t len = 1; len < n; len <<= 1) {
      for (std::uint64_t i = 0; i < n; i += len << 1) {
        for (std::uint64_t j = i; j < i + len; ++j) {
          const Complex u = f[j];
          const Complex v = f[j + len];
          f[j] = u + v;
          f[j + len] = u - v;
        }
      }
    }
    for (std::uint64_t z = 0; z < n; ++z) {
      const Complex c = std::conj(kIPowers[std::popcount(x & z) & 3]) * f[z] * norm;
      if (std::abs(c) >= kPruneTolerance) out.add(PauliTerm(m, x, z), c);
    }
  }
  return out;
}

}  // namespace vqe
