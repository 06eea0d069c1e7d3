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
#include "vqe/tapering.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "vqe/error.hpp"
#include "vqe/exact_solver.hpp"
#include "vqe/fermion.hpp"

namespace vqe::tapering {
namespace {

constexpr int kMaxUnitaryQubits = 12;
constexpr double kTieTolerance = 1e-10;

gf2::BitRow swapped_row(const PauliTerm& p) {
  const int m = p.num_qubits();
  gf2::BitRow row(2 * m);
  for (int q = 1; q <= m; ++q) {
    const auto bit = qubit_bit(m, q);
    if (p.z_mask() & bit) row.set(q - 1);
    if (p.x_mask() & bit) row.set(m + q - 1);
  }
  return row;
}

// Mask of qubits q(i) whose label is Z.
std::uint64_t hadamard_mask(const TaperTriple& t) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.labels[i] == Label::Z) mask |= qubit_bit(t.m, t.qubits[i]);
  }
  return mask;
}

// Hd P Hd with Hd the product of Hadamards on `mask`: X <-> Z, Y -> -Y.
PauliTerm hadamard_conjugate(const PauliTerm& p, std::uint64_t mask) {
  const auto x = p.x_mask();
  const auto z = p.z_mask();
  const auto nx = (x & ~mask) | (z & mask);
  const auto nz = (z & ~mask) | (x & mask);
  const int ys = std::popcount(x & z & mask);
  return {p.num_qubits(), nx, nz, p.phase_power() + 2 * ys};
}

void check_symmetry(const PauliSum& h, const TaperTriple& t) {
  for (const auto& [k, c] : h.map()) {
    const PauliTerm term = h.term(k);
    for (const auto& tau : t.generators) {
      if (!term.commutes_with(tau)) {
        fail(ErrorCode::NotSymmetry, "not a symmetry: term " + term.axes() +
                                         " anti-commutes with generator " + tau.axes());
      }
    }
  }
}

PauliSum transform_symbolic(const PauliSum& h, const TaperTriple& t) {
  const int m = t.m;
  const auto hmask = hadamard_mask(t);
  std::vector<PauliTerm> rotated;  // Hd tau_i Hd
  for (const auto& tau : t.generators) rotated.push_back(hadamard_conjugate(tau, hmask));
  const auto perm = tapering_permutation(t);

  PauliSum out(m);
  for (const auto& [k, c] : h.map()) {
    PauliTerm p = hadamard_conjugate(h.term(k), hmask);
    for (std::size_t i = 0; i < t.size(); ++i) {
      // (A + B)/sqrt2 with A = X_q, B = Hd tau Hd; A and B anti-commute
      const PauliTerm a = PauliTerm::single(m, t.qubits[i], Axis::X);
      const PauliTerm& b = rotated[i];
      const bool ca = p.commutes_with(a);
      const bool cb = p.commutes_with(b);
      if (ca && cb) continue;
      if (!ca && !cb) {
        p = PauliTerm(m, p.x_mask(), p.z_mask(), p.phase_power() + 2);
        continue;
      }
      p = multiply(multiply(p, a), b);
      if (!ca) p = PauliTerm(m, p.x_mask(), p.z_mask(), p.phase_power() + 2);
    }
    // W^dagger: the factor on qubit perm[a-1] moves to position a
    std::uint64_t x = 0, z = 0;
    for (int pos = 1; pos <= m; ++pos) {
      const auto src = qubit_bit(m, perm[static_cast<std::size_t>(pos - 1)]);
      if (p.x_mask() & src) x |= qubit_bit(m, pos);
      if (p.z_mask() & src) z |= qubit_bit(m, pos);
    }
    out.add(PauliTerm(m, x, z, p.phase_power()), c);
  }
  return out;
}

PauliSum transform_dense(const PauliSum& h, const TaperTriple& t) {
  const DenseMatrix u = build_unitary(t);
  const DenseMatrix conj = u.adjoint() * to_dense(h) * u;
  return decompose_dense(conj, t.m);
}

}  // namespace

void validate(const SymmetryGroup& s) {
  const auto r = s.generators.size();
  if (r > static_cast<std::size_t>(s.m)) {
    fail(ErrorCode::InvalidArgument, "more generators than qubits");
  }
  std::vector<gf2::BitRow> rows;
  for (std::size_t i = 0; i < r; ++i) {
    const auto& g = s.generators[i];
    if (g.num_qubits() != s.m) fail(ErrorCode::Dimension, "generator length differs from m");
    if (g.is_identity()) fail(ErrorCode::InvalidArgument, "identity is not a generator");
    for (std::size_t j = i + 1; j < r; ++j) {
      if (!g.commutes_with(s.generators[j])) {
        fail(ErrorCode::InvalidArgument,
             "generators " + g.axes() + " and " + s.generators[j].axes() + " do not commute");
      }
    }
    rows.push_back(gf2::from_symplectic(encode_symplectic(g)));
  }
  if (gf2::rref(rows, 2 * s.m).size() != r) {
    fail(ErrorCode::InvalidArgument, "generators are not independent");
  }
}

PauliTerm TaperTriple::pivot(std::size_t i) const {
  return PauliTerm::single(m, qubits.at(i - 1), labels.at(i - 1) == Label::X ? Axis::X : Axis::Z);
}

bool satisfies_pi(const TaperTriple& t) {
  for (std::size_t i = 1; i <= t.size(); ++i) {
    const auto sigma = encode_symplectic(t.pivot(i));
    for (std::size_t j = 1; j <= t.generators.size(); ++j) {
      const int expected = (i == j) ? 1 : 0;
      if (symplectic_product(sigma, encode_symplectic(t.generators[j - 1])) != expected) return false;
    }
  }
  return true;
}

ParityCheckMatrix build_parity_check(const PauliSum& h) {
  ParityCheckMatrix e{h.num_qubits(), {}};
  for (const auto& [k, c] : h.map()) {
    const PauliTerm p = h.term(k);
    if (!p.is_identity()) e.rows.push_back(swapped_row(p));
  }
  return e;
}

std::vector<SymplecticVector> kernel_basis(const ParityCheckMatrix& e) {
  std::vector<SymplecticVector> out;
  for (const auto& v : gf2::nullspace(e.rows, 2 * e.m)) out.push_back(gf2::to_symplectic(v, e.m));
  return out;
}

SymmetryGroup maximal_abelian_generators(const std::vector<SymplecticVector>& basis, int m) {
  const auto d = basis.size();
  const int cols = static_cast<int>(d);
  std::vector<gf2::BitRow> b;
  for (const auto& v : basis) {
    if (v.num_qubits() != m) fail(ErrorCode::Dimension, "basis vector length differs from m");
    b.push_back(gf2::from_symplectic(v));
  }
  if (gf2::rref(b, 2 * m).size() != d) fail(ErrorCode::InvalidArgument, "basis is not independent");

  // element of G from a coefficient vector alpha
  auto combine = [&](const gf2::BitRow& alpha) {
    gf2::BitRow v(2 * m);
    for (std::size_t i = 0; i < d; ++i) {
      if (alpha.get(static_cast<int>(i))) v ^= b[i];
    }
    return v;
  };
  auto product_row = [&](const SymplecticVector& a) {
    gf2::BitRow row(cols);
    for (std::size_t i = 0; i < d; ++i) {
      if (symplectic_product(basis[i], a)) row.set(static_cast<int>(i));
    }
    return row;
  };

  // Step 2: center of G, solved as a linear system on the coefficients.
  std::vector<gf2::BitRow> gram;
  for (std::size_t j = 0; j < d; ++j) gram.push_back(product_row(basis[j]));
  std::vector<gf2::BitRow> abelian;
  for (const auto& alpha : gf2::nullspace(gram, cols)) abelian.push_back(combine(alpha));

  // Step 3: grow A until C_G(A) = A.
  while (true) {
    std::vector<gf2::BitRow> constraints;
    for (const auto& a : abelian) constraints.push_back(product_row(gf2::to_symplectic(a, m)));
    std::vector<gf2::BitRow> centralizer;
    for (const auto& alpha : gf2::nullspace(constraints, cols)) centralizer.push_back(combine(alpha));
    if (centralizer.size() == abelian.size()) break;

    const auto a_echelon = gf2::rref(abelian, 2 * m);
    std::vector<gf2::BitRow> reduced;
    for (const auto& w : centralizer) reduced.push_back(gf2::reduce(w, a_echelon));
    const auto quotient = gf2::rref(reduced, 2 * m);
    if (quotient.empty()) fail(ErrorCode::Internal, "centralizer larger than A but quotient empty");
    abelian.push_back(quotient.back());
  }

  SymmetryGroup s{m, {}};
  for (const auto& a : abelian) s.generators.push_back(decode_symplectic(gf2::to_symplectic(a, m)));
  return s;
}

SymmetryGroup find_symmetries(const PauliSum& h) {
  const auto e = build_parity_check(h);
  return maximal_abelian_generators(kernel_basis(e), h.num_qubits());
}

std::string_view symmetry_mode_name(SymmetryMode mode) {
  return mode == SymmetryMode::Maximal ? "maximal" : "number_parity";
}

SymmetryMode parse_symmetry_mode(std::string_view name) {
  if (name == "maximal") return SymmetryMode::Maximal;
  if (name == "number_parity") return SymmetryMode::NumberParity;
  fail(ErrorCode::Parse, "unknown symmetry mode '" + std::string(name) + "' (maximal, number_parity)");
}

SymmetryGroup symmetries(const PauliSum& h, SymmetryMode mode) {
  if (mode == SymmetryMode::Maximal) return find_symmetries(h);
  const int m = h.num_qubits();
  if (m < 2 || m % 2 != 0) fail(ErrorCode::NotSymmetry, "number parities need an even number of modes");
  auto [up, down] = number_parity_operators(m);
  for (const auto& [term, c] : h.terms()) {
    if (!term.commutes_with(up) || !term.commutes_with(down)) {
      fail(ErrorCode::NotSymmetry, "term " + term.to_string() + " breaks spin number parity");
    }
  }
  SymmetryGroup s{m, {up, down}};
  validate(s);
  return s;
}

SymmetryGroup generator_transform(const SymmetryGroup& s, std::size_t i, int q, Axis rho) {
  if (i < 1 || i > s.generators.size()) fail(ErrorCode::InvalidArgument, "generator index out of range");
  const PauliTerm sigma = PauliTerm::single(s.m, q, rho);
  const PauliTerm& pivot = s.generators[i - 1];
  if (pivot.commutes_with(sigma)) {
    fail(ErrorCode::InvalidArgument,
         "generator " + pivot.axes() + " commutes with " + sigma.axes());
  }
  SymmetryGroup out = s;
  const auto pv = encode_symplectic(pivot);
  for (std::size_t k = 1; k <= s.generators.size(); ++k) {
    if (k == i || s.generators[k - 1].commutes_with(sigma)) continue;
    out.generators[k - 1] = decode_symplectic(pv ^ encode_symplectic(s.generators[k - 1]));
  }
  return out;
}

TaperTriple build_taper_triple(const SymmetryGroup& s) {
  if (s.generators.empty()) fail(ErrorCode::InvalidArgument, "symmetry group has no generators");
  validate(s);
  SymmetryGroup current = s;
  TaperTriple t{s.m, {}, {}, {}};
  for (std::size_t n = 1; n <= s.generators.size(); ++n) {
    const PauliTerm& tau = current.generators[n - 1];
    int chosen = 0;
    for (int j = 1; j <= s.m; ++j) {
      if (std::find(t.qubits.begin(), t.qubits.end(), j) != t.qubits.end()) continue;
      if (tau.axis(j) != Axis::I) {
        chosen = j;
        break;
      }
    }
    if (chosen == 0) fail(ErrorCode::Internal, "no free qubit for generator " + tau.axes());
    const Label label = tau.axis(chosen) == Axis::X ? Label::Z : Label::X;
    current = generator_transform(current, n, chosen, label == Label::X ? Axis::X : Axis::Z);
    t.qubits.push_back(chosen);
    t.labels.push_back(label);
  }
  t.generators = current.generators;
  return t;
}

std::vector<int> tapering_permutation(const TaperTriple& t) {
  const int m = t.m;
  const int r = static_cast<int>(t.size());
  std::vector<int> perm(static_cast<std::size_t>(m));
  int next = 0;
  for (int q = 1; q <= m; ++q) {
    if (std::find(t.qubits.begin(), t.qubits.end(), q) == t.qubits.end()) {
      perm[static_cast<std::size_t>(next++)] = q;
    }
  }
  for (int i = 0; i < r; ++i) perm[static_cast<std::size_t>(m - r + i)] = t.qubits[static_cast<std::size_t>(i)];
  return perm;
}

PauliSum build_clifford(const TaperTriple& t) {
  const int m = t.m;
  const double s = 1.0 / std::sqrt(2.0);
  const auto hmask = hadamard_mask(t);
  PauliSum u = PauliSum::constant(m, 1.0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.labels[i] != Label::Z) continue;
    PauliSum had(m);
    had.add(PauliTerm::single(m, t.qubits[i], Axis::X), s);
    had.add(PauliTerm::single(m, t.qubits[i], Axis::Z), s);
    u = u * had;
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    PauliSum ui(m);
    ui.add(PauliTerm::single(m, t.qubits[i], Axis::X), s);
    ui.add(hadamard_conjugate(t.generators[i], hmask), s);
    u = u * ui;
  }
  return u;
}

DenseMatrix build_unitary(const TaperTriple& t) {
  if (t.m > kMaxUnitaryQubits) {
    fail(ErrorCode::Dimension, "dense tapering unitary limited to " +
                                   std::to_string(kMaxUnitaryQubits) + " qubits");
  }
  const int m = t.m;
  const auto perm = tapering_permutation(t);
  const Eigen::Index dim = Eigen::Index{1} << m;
  DenseMatrix w = DenseMatrix::Zero(dim, dim);
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
    std::uint64_t c = 0;
    for (int a = 1; a <= m; ++a) {
      if (b & qubit_bit(m, a)) c |= qubit_bit(m, perm[static_cast<std::size_t>(a - 1)]);
    }
    w(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(b)) = 1.0;
  }
  return to_dense(build_clifford(t)) * w;
}

PauliSum transform(const PauliSum& h, const TaperTriple& t, ConjugationRoute route) {
  if (h.num_qubits() != t.m) fail(ErrorCode::Dimension, "Hamiltonian and triple differ in m");
  check_symmetry(h, t);
  if (route == ConjugationRoute::Auto) {
    route = t.m <= kDenseTaperQubits ? ConjugationRoute::Dense : ConjugationRoute::Symbolic;
  }
  PauliSum out = route == ConjugationRoute::Dense ? transform_dense(h, t) : transform_symbolic(h, t);
  return out.real_part(1e-10);
}

TaperedHamiltonian restrict_to_sector(const PauliSum& transformed, const TaperTriple& t,
                                      const std::vector<int>& sector) {
  const int m = t.m;
  const int r = static_cast<int>(t.size());
  if (static_cast<int>(sector.size()) != r) {
    fail(ErrorCode::InvalidArgument, "sector needs " + std::to_string(r) + " signs");
  }
  for (int s : sector) {
    if (s != 1 && s != -1) fail(ErrorCode::InvalidArgument, "sector signs must be +1 or -1");
  }
  const std::uint64_t tail = r == 0 ? 0 : (std::uint64_t{1} << r) - 1;
  PauliSum out(m - r);
  for (const auto& [k, c] : transformed.map()) {
    if ((k.z & tail) != 0) {
      fail(ErrorCode::Internal, "transformed term " + transformed.term(k).axes() +
                                    " has Y/Z on a tapered qubit");
    }
    double sign = 1.0;
    for (int i = 1; i <= r; ++i) {
      if (k.x & qubit_bit(m, m - r + i)) sign *= sector[static_cast<std::size_t>(i - 1)];
    }
    out.add(PauliTerm(m - r, k.x >> r, k.z >> r), c * sign);
  }
  return {sector, out.real_part(1e-10), tapering_permutation(t)};
}

TaperedHamiltonian taper(const PauliSum& h, const TaperTriple& t, const std::vector<int>& sector,
                         ConjugationRoute route) {
  return restrict_to_sector(transform(h, t, route), t, sector);
}

SectorScan select_ground_sector(const PauliSum& h, const TaperTriple& t, ConjugationRoute route) {
  const int r = static_cast<int>(t.size());
  if (t.m - r > kMaxExactQubits) fail(ErrorCode::Dimension, "tapered Hamiltonian too large for exact solve");
  const PauliSum transformed = transform(h, t, route);

  SectorScan scan;
  const std::uint64_t count = std::uint64_t{1} << r;
  for (std::uint64_t code = 0; code < count; ++code) {
    // bit set = minus; the first generator is the most significant bit
    std::vector<int> sector(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) sector[static_cast<std::size_t>(i)] = ((code >> (r - 1 - i)) & 1) ? -1 : 1;
    auto tapered = restrict_to_sector(transformed, t, sector);
    const double e = ground_energy(tapered.hamiltonian).ground_energy;
    if (scan.sectors.empty() || e < scan.best_energy - kTieTolerance) {
      scan.best_sector = sector;
      scan.best_energy = e;
      scan.tapered = std::move(tapered);
    }
    scan.sectors.push_back(std::move(sector));
    scan.energies.push_back(e);
  }
  return scan;
}

std::string sector_string(const std::vector<int>& sector) {
  std::string s;
  for (int v : sector) s.push_back(v > 0 ? '+' : '-');
  return s;
}

std::vector<int> parse_sector(std::string_view s) {
  std::vector<int> out;
  for (char c : s) {
    if (c == '+') out.push_back(1);
    else if (c == '-') out.push_back(-1);
    else fail(ErrorCode::Parse, std::string("sector characters must be '+' or '-', got '") + c + "'");
  }
  return out;
}

}  // namespace vqe::tapering
