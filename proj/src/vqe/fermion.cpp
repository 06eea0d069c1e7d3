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
#include "vqe/fermion.hpp"

#include <cmath>
#include <fstream>

#include "vqe/error.hpp"

namespace vqe {
namespace {

constexpr double kSymmetryTolerance = 1e-10;
constexpr double kImaginaryResidue = 1e-10;

std::size_t checked_size(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::Parse, std::string(what) + " is not an array");
  return j.size();
}

}  // namespace

MolecularIntegrals::MolecularIntegrals(int n_spin_orbitals, double v_nn, std::vector<double> h_pq,
                                       std::vector<double> h_pqrs, nlohmann::json metadata,
                                       std::optional<double> reference_ground_energy)
    : m_(n_spin_orbitals),
      v_nn_(v_nn),
      h_pq_(std::move(h_pq)),
      h_pqrs_(std::move(h_pqrs)),
      metadata_(std::move(metadata)),
      reference_(reference_ground_energy) {
  if (m_ < 1 || m_ > kMaxQubits) {
    fail(ErrorCode::Dimension, "n_spin_orbitals must be in 1.." + std::to_string(kMaxQubits));
  }
  const auto m = static_cast<std::size_t>(m_);
  if (h_pq_.size() != m * m) fail(ErrorCode::Dimension, "h_pq must be m x m");
  if (h_pqrs_.size() != m * m * m * m) fail(ErrorCode::Dimension, "h_pqrs must be m x m x m x m");
  for (int p = 1; p <= m_; ++p) {
    for (int q = p + 1; q <= m_; ++q) {
      if (std::abs(one_body(p, q) - one_body(q, p)) > kSymmetryTolerance) {
        fail(ErrorCode::InvalidArgument,
             "one-electron tensor not symmetric at (" + std::to_string(p) + "," + std::to_string(q) + ")");
      }
    }
  }
}

double MolecularIntegrals::one_body(int p, int q) const {
  return h_pq_[static_cast<std::size_t>((p - 1) * m_ + (q - 1))];
}

double MolecularIntegrals::two_body(int p, int q, int r, int s) const {
  const auto m = static_cast<std::size_t>(m_);
  return h_pqrs_[((static_cast<std::size_t>(p - 1) * m + static_cast<std::size_t>(q - 1)) * m +
                  static_cast<std::size_t>(r - 1)) * m + static_cast<std::size_t>(s - 1)];
}

MolecularIntegrals integrals_from_json(const nlohmann::json& j) {
  try {
    for (const char* key : {"n_spin_orbitals", "V_nn", "h_pq", "h_pqrs"}) {
      if (!j.contains(key)) fail(ErrorCode::Parse, std::string("missing field '") + key + "'");
    }
    const int m = j.at("n_spin_orbitals").get<int>();
    if (m < 1) fail(ErrorCode::Dimension, "n_spin_orbitals must be positive");
    const auto n = static_cast<std::size_t>(m);

    std::vector<double> h1;
    h1.reserve(n * n);
    const auto& jh1 = j.at("h_pq");
    if (checked_size(jh1, "h_pq") != n) fail(ErrorCode::Dimension, "h_pq has wrong row count");
    for (const auto& row : jh1) {
      if (checked_size(row, "h_pq row") != n) fail(ErrorCode::Dimension, "h_pq has wrong column count");
      for (const auto& v : row) h1.push_back(v.get<double>());
    }

    std::vector<double> h2;
    h2.reserve(n * n * n * n);
    const auto& jh2 = j.at("h_pqrs");
    if (checked_size(jh2, "h_pqrs") != n) fail(ErrorCode::Dimension, "h_pqrs has wrong extent");
    for (const auto& a : jh2) {
      if (checked_size(a, "h_pqrs") != n) fail(ErrorCode::Dimension, "h_pqrs has wrong extent");
      for (const auto& b : a) {
        if (checked_size(b, "h_pqrs") != n) fail(ErrorCode::Dimension, "h_pqrs has wrong extent");
        for (const auto& c : b) {
          if (checked_size(c, "h_pqrs") != n) fail(ErrorCode::Dimension, "h_pqrs has wrong extent");
          for (const auto& v : c) h2.push_back(v.get<double>());
        }
      }
    }

    std::optional<double> reference;
    if (j.contains("reference_ground_energy") && !j.at("reference_ground_energy").is_null()) {
      reference = j.at("reference_ground_energy").get<double>();
    }
    return MolecularIntegrals(m, j.at("V_nn").get<double>(), std::move(h1), std::move(h2),
                              j.value("metadata", nlohmann::json::object()), reference);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("integrals JSON: ") + e.what());
  }
}

MolecularIntegrals load_integrals(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, path.string() + ": " + e.what());
  }
  return integrals_from_json(j);
}

PauliSum jw_ladder(int j, bool dagger, int m) {
  if (m < 1 || m > kMaxQubits) fail(ErrorCode::Dimension, "invalid qubit count");
  if (j < 1 || j > m) {
    fail(ErrorCode::InvalidArgument, "mode index " + std::to_string(j) + " outside 1.." + std::to_string(m));
  }
  std::uint64_t z_tail = 0;
  for (int q = j + 1; q <= m; ++q) z_tail |= qubit_bit(m, q);
  const auto bit = qubit_bit(m, j);
  PauliSum out(m);
  out.add(PauliTerm(m, bit, z_tail), 0.5);
  out.add(PauliTerm(m, bit, z_tail | bit), Complex(0, dagger ? -0.5 : 0.5));
  return out;
}

PauliSum build_qubit_hamiltonian(const MolecularIntegrals& mi) {
  const int m = mi.num_spin_orbitals();
  std::vector<PauliSum> annihilate, create;
  annihilate.reserve(static_cast<std::size_t>(m));
  create.reserve(static_cast<std::size_t>(m));
  for (int p = 1; p <= m; ++p) {
    annihilate.push_back(jw_ladder(p, false, m));
    create.push_back(jw_ladder(p, true, m));
  }
  auto idx = [m](int p, int q) { return static_cast<std::size_t>((p - 1) * m + (q - 1)); };

  PauliSum h = PauliSum::constant(m, mi.nuclear_repulsion());
  for (int p = 1; p <= m; ++p) {
    for (int q = 1; q <= m; ++q) {
      const double v = mi.one_body(p, q);
      if (v != 0.0) h += (create[p - 1] * annihilate[q - 1]) * v;
    }
  }

  // a+_p a+_q and a_r a_s, computed once per pair
  std::vector<PauliSum> cc(static_cast<std::size_t>(m * m)), aa(static_cast<std::size_t>(m * m));
  for (int p = 1; p <= m; ++p) {
    for (int q = 1; q <= m; ++q) {
      cc[idx(p, q)] = create[p - 1] * create[q - 1];
      aa[idx(p, q)] = annihilate[p - 1] * annihilate[q - 1];
    }
  }
  for (int p = 1; p <= m; ++p) {
    for (int q = 1; q <= m; ++q) {
      if (p == q) continue;  // a+_p a+_p = 0
      for (int r = 1; r <= m; ++r) {
        for (int s = 1; s <= m; ++s) {
          if (r == s) continue;
          const double v = mi.two_body(p, q, r, s);
          if (v != 0.0) h += (cc[idx(p, q)] * aa[idx(r, s)]) * (0.5 * v);
        }
      }
    }
  }
  return h.real_part(kImaginaryResidue);
}

std::pair<PauliSum, PauliSum> number_operators(int m) {
  if (m < 2 || m % 2 != 0) fail(ErrorCode::InvalidArgument, "number operators need an even qubit count");
  PauliSum up(m), down(m);
  for (int j = 1; j <= m; ++j) {
    auto& target = (j % 2 == 1) ? up : down;
    target.add(PauliTerm::identity(m), 0.5);
    target.add(PauliTerm::single(m, j, Axis::Z), -0.5);
  }
  return {up, down};
}

std::pair<PauliTerm, PauliTerm> number_parity_operators(int m) {
  if (m < 2 || m % 2 != 0) fail(ErrorCode::InvalidArgument, "number parities need an even qubit count");
  std::uint64_t up = 0, down = 0;
  for (int j = 1; j <= m; ++j) ((j % 2 == 1) ? up : down) |= qubit_bit(m, j);
  return {PauliTerm(m, 0, up), PauliTerm(m, 0, down)};
}

}  // namespace vqe
