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

#include "vqe/gf2.hpp"
#include "vqe/pauli.hpp"

/// Z2-symmetry qubit tapering.
///
/// Pipeline: Hamiltonian terms -> parity check matrix E -> ker(E) -> maximal
/// abelian subgroup S = <tau_1..tau_r> -> taper triple (q, rho, tau) -> Clifford
/// U with U X_{m-r+i} U^dagger = tau_i -> H' = U^dagger H U, whose last r
/// qubits carry only I/X and are replaced by sector signs.
///
/// Everything up to the final sign substitution is done modulo phase in the
/// symplectic representation.
namespace vqe::tapering {

/// Rows are the block-swapped encodings (a_z | a_x) of the non-identity
/// Hamiltonian terms, so E v = 0 iff sigma(v) commutes with every term.
struct ParityCheckMatrix {
  int m = 0;
  std::vector<gf2::BitRow> rows;
};

/// Generators of an abelian Pauli group, all with phase +1.
struct SymmetryGroup {
  int m = 0;
  std::vector<PauliTerm> generators;

  [[nodiscard]] std::size_t size() const noexcept { return generators.size(); }
};

/// Checks pairwise commutation and GF(2) independence; throws
/// InvalidArgument with the reason otherwise.
void validate(const SymmetryGroup& s);

enum class Label { X, Z };

/// q(i), rho(i), tau_i for i = 1..r. Qubit indices are 1-based.
struct TaperTriple {
  int m = 0;
  std::vector<int> qubits;
  std::vector<Label> labels;
  std::vector<PauliTerm> generators;

  [[nodiscard]] std::size_t size() const noexcept { return qubits.size(); }
  /// The single-qubit Pauli sigma^{rho(i)}_{q(i)}, i 1-based.
  [[nodiscard]] PauliTerm pivot(std::size_t i) const;
};

/// Each sigma^{rho(i)}_{q(i)} anti-commutes with tau_i and commutes with
/// every other tau_j.
bool satisfies_pi(const TaperTriple& t);

struct TaperedHamiltonian {
  std::vector<int> sector;  // +1 / -1 per generator
  PauliSum hamiltonian;     // on m - r qubits
  /// permutation[a-1] = qubit that position a of the transformed frame maps
  /// to; positions m-r+1..m are the tapered ones.
  std::vector<int> permutation;
};

ParityCheckMatrix build_parity_check(const PauliSum& h);

std::vector<SymplecticVector> kernel_basis(const ParityCheckMatrix& e);

/// Grows the center of <basis> one element at a time until it is its own
/// centralizer. The element added is the numerically smallest vector of
/// C_G(A) \ A, with (a_x|a_z) read as a binary number, qubit 1's x bit first.
SymmetryGroup maximal_abelian_generators(const std::vector<SymplecticVector>& basis, int m);

/// Full search: parity check -> kernel -> maximal abelian subgroup.
SymmetryGroup find_symmetries(const PauliSum& h);

enum class SymmetryMode {
  Maximal,       // find_symmetries
  NumberParity,  // the spin-resolved number parities (-1)^{N_up}, (-1)^{N_down}
};
std::string_view symmetry_mode_name(SymmetryMode mode);
SymmetryMode parse_symmetry_mode(std::string_view name);

/// The generators of the chosen mode; throws NotSymmetry if a NumberParity
/// generator fails to commute with h (e.g. m odd or spin-mixing terms).
SymmetryGroup symmetries(const PauliSum& h, SymmetryMode mode);

/// tau_k -> tau_i tau_k for every k != i anti-commuting with sigma^rho_q.
/// i is 1-based.
SymmetryGroup generator_transform(const SymmetryGroup& s, std::size_t i, int q, Axis rho);

TaperTriple build_taper_triple(const SymmetryGroup& s);

/// Pauli-sum form of the Clifford part of U (without the qubit permutation
/// W): Hd * prod_i (X_{q(i)} + Hd tau_i Hd) / sqrt2, where Hd is the product
/// of Hadamards on the qubits labelled Z. Conjugating X_{q(i)} by it gives
/// tau_i for every i, also when several Z-labelled pivots interact.
PauliSum build_clifford(const TaperTriple& t);

/// Dense U = (Clifford part) * W, m <= 12.
DenseMatrix build_unitary(const TaperTriple& t);

/// W as a list: perm[a-1] is the qubit that position a is sent to.
std::vector<int> tapering_permutation(const TaperTriple& t);

enum class ConjugationRoute {
  Auto,      // dense when m <= kDenseTaperQubits, symbolic otherwise
  Dense,     // decompose_dense(U^dagger H U)
  Symbolic,  // Clifford rules applied term by term
};
inline constexpr int kDenseTaperQubits = 10;

/// H' = U^dagger H U on all m qubits.
PauliSum transform(const PauliSum& h, const TaperTriple& t,
                   ConjugationRoute route = ConjugationRoute::Auto);

/// Replaces the trailing r factors of an already transformed H' by the
/// sector signs.
TaperedHamiltonian restrict_to_sector(const PauliSum& transformed, const TaperTriple& t,
                                      const std::vector<int>& sector);

TaperedHamiltonian taper(const PauliSum& h, const TaperTriple& t, const std::vector<int>& sector,
                         ConjugationRoute route = ConjugationRoute::Auto);

struct SectorScan {
  std::vector<int> best_sector;
  double best_energy = 0;
  TaperedHamiltonian tapered;
  std::vector<std::vector<int>> sectors;  // lexicographic, + before -
  std::vector<double> energies;           // ground energy per sector
};

/// Exhaustive sector search. Ties within 1e-10 go to the lexicographically
/// smallest sector.
SectorScan select_ground_sector(const PauliSum& h, const TaperTriple& t,
                                ConjugationRoute route = ConjugationRoute::Auto);

std::string sector_string(const std::vector<int>& sector);
std::vector<int> parse_sector(std::string_view s);

}  // namespace vqe::tapering
