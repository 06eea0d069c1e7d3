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
#include <nlohmann/json.hpp>

#include "doctest.h"
#include "oracles.hpp"
#include "vqe/error.hpp"
#include "vqe/exact_solver.hpp"
#include "vqe/fermion.hpp"

using namespace vqe;
using nlohmann::json;

namespace {

const std::string kData = VQE_DATA_DIR;

json minimal_integrals(int m) {
  const auto n = static_cast<std::size_t>(m);
  const json row(std::vector<double>(n, 0.0));
  const json matrix(std::vector<json>(n, row));
  const json cube(std::vector<json>(n, matrix));
  return {{"n_spin_orbitals", m},
          {"V_nn", 0.0},
          {"h_pq", matrix},
          {"h_pqrs", json(std::vector<json>(n, cube))}};
}

// H = V + sum h_pq a+_p a_q + 1/2 sum h_pqrs a+_p a+_q a_r a_s built
// directly from oracle JW matrices.
oracle::Mat dense_hamiltonian(const MolecularIntegrals& mi) {
  const int m = mi.num_spin_orbitals();
  std::vector<oracle::Mat> a;
  for (int j = 1; j <= m; ++j) a.push_back(oracle::jw_annihilation(j, m));
  const int d = 1 << m;
  oracle::Mat h = mi.nuclear_repulsion() * oracle::Mat::Identity(d, d);
  for (int p = 1; p <= m; ++p) {
    for (int q = 1; q <= m; ++q) {
      const double c = mi.one_body(p, q);
      if (c != 0) h += c * a[p - 1].adjoint() * a[q - 1];
    }
  }
  for (int p = 1; p <= m; ++p)
    for (int q = 1; q <= m; ++q)
      for (int r = 1; r <= m; ++r)
        for (int s = 1; s <= m; ++s) {
          const double c = mi.two_body(p, q, r, s);
          if (c != 0) h += 0.5 * c * a[p - 1].adjoint() * a[q - 1].adjoint() * a[r - 1] * a[s - 1];
        }
  return h;
}

}  // namespace

TEST_CASE("minimal integrals file is accepted") {
  auto j = minimal_integrals(1);
  j["h_pq"] = {{-0.5}};
  const auto mi = integrals_from_json(j);
  CHECK(mi.num_spin_orbitals() == 1);
  CHECK(mi.one_body(1, 1) == -0.5);
}

TEST_CASE("asymmetric one-electron tensor is rejected") {
  auto j = minimal_integrals(2);
  j["h_pq"] = {{0.0, 0.1}, {0.2, 0.0}};
  try {
    (void)integrals_from_json(j);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("one-electron tensor not symmetric") != std::string::npos);
  }
}

TEST_CASE("malformed integrals files are rejected") {
  auto j = minimal_integrals(2);
  j["h_pqrs"] = {0.0};
  CHECK_THROWS_AS((void)integrals_from_json(j), Error);
  j = minimal_integrals(2);
  j.erase("V_nn");
  CHECK_THROWS_AS((void)integrals_from_json(j), Error);
  CHECK_THROWS_AS((void)load_integrals(kData + "/does_not_exist.json"), Error);
}

TEST_CASE("H2 fixture loads") {
  const auto mi = load_integrals(kData + "/h2_sto3g_0.735A.json");
  CHECK(mi.num_spin_orbitals() == 4);
  CHECK(mi.nuclear_repulsion() > 0);
  bool nonzero = false;
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q)
      for (int r = 1; r <= 4; ++r)
        for (int s = 1; s <= 4; ++s) nonzero |= mi.two_body(p, q, r, s) != 0;
  CHECK(nonzero);
  CHECK(mi.reference_ground_energy().has_value());
}

TEST_CASE("Jordan-Wigner ladder examples") {
  const auto a1 = jw_ladder(1, false, 1);
  CHECK(a1.size() == 2);
  CHECK(a1.coefficient("X") == Complex(0.5));
  CHECK(a1.coefficient("Y") == Complex(0, 0.5));
  const auto a12 = jw_ladder(1, false, 2);
  CHECK(a12.coefficient("XZ") == Complex(0.5));
  CHECK(a12.coefficient("YZ") == Complex(0, 0.5));
  const auto c2 = jw_ladder(2, true, 3);
  CHECK(c2.size() == 2);
  const auto d = to_dense(c2);
  CHECK(oracle::max_abs(d * d) < 1e-15);
}

TEST_CASE("Jordan-Wigner ladders match the oracle") {
  for (int m = 1; m <= 4; ++m) {
    for (int j = 1; j <= m; ++j) {
      const auto a = oracle::jw_annihilation(j, m);
      CHECK(oracle::max_abs(to_dense(jw_ladder(j, false, m)) - a) < 1e-15);
      CHECK(oracle::max_abs(to_dense(jw_ladder(j, true, m)) - a.adjoint()) < 1e-15);
    }
  }
}

TEST_CASE("canonical anticommutation relations") {
  for (int m = 1; m <= 4; ++m) {
    const int d = 1 << m;
    for (int p = 1; p <= m; ++p) {
      for (int q = 1; q <= m; ++q) {
        const auto ap = to_dense(jw_ladder(p, false, m));
        const auto aq = to_dense(jw_ladder(q, false, m));
        const auto aqd = to_dense(jw_ladder(q, true, m));
        const oracle::Mat expect = (p == q ? 1.0 : 0.0) * oracle::Mat::Identity(d, d);
        CHECK(oracle::max_abs(ap * aqd + aqd * ap - expect) < 1e-12);
        CHECK(oracle::max_abs(ap * aq + aq * ap) < 1e-12);
      }
    }
  }
}

TEST_CASE("one-mode and constant Hamiltonians") {
  auto j = minimal_integrals(1);
  j["h_pq"] = {{0.7}};
  j["V_nn"] = 0.25;
  const auto h = build_qubit_hamiltonian(integrals_from_json(j));
  CHECK(h.coefficient("I").real() == doctest::Approx(0.35 + 0.25).epsilon(1e-15));
  CHECK(h.coefficient("Z").real() == doctest::Approx(-0.35).epsilon(1e-15));
  auto k = minimal_integrals(3);
  k["V_nn"] = 1.5;
  const auto c = build_qubit_hamiltonian(integrals_from_json(k));
  CHECK(c.size() == 1);
  CHECK(c.coefficient("III") == Complex(1.5));
}

TEST_CASE("number operators") {
  const auto [up2, down2] = number_operators(2);
  CHECK(up2.size() == 2);
  CHECK(up2.coefficient("II") == Complex(0.5));
  CHECK(up2.coefficient("ZI") == Complex(-0.5));
  CHECK(down2.coefficient("II") == Complex(0.5));
  CHECK(down2.coefficient("IZ") == Complex(-0.5));
  const auto [up4, down4] = number_operators(4);
  CHECK(up4.size() == 3);
  CHECK(down4.size() == 3);
  CHECK(up4.coefficient("IIII") == Complex(1.0));
  CHECK(up4.coefficient("IIZI") == Complex(-0.5));
  CHECK(down4.coefficient("IIIZ") == Complex(-0.5));
  CHECK_THROWS_AS((void)number_operators(3), Error);
}

TEST_CASE("fixture Hamiltonians: oracle agreement, hermiticity, conservation, reference energy") {
  for (const char* name : {"h2_sto3g_0.735A.json", "lih_sto3g_1.595A.json"}) {
    CAPTURE(name);
    const auto mi = load_integrals(kData + "/" + name);
    const auto h = build_qubit_hamiltonian(mi);
    CHECK(h.is_hermitian());
    const auto dense = to_dense(h);
    CHECK(oracle::max_abs(dense - dense.adjoint()) < 1e-10);
    const auto [nu, nd] = number_operators(mi.num_spin_orbitals());
    const auto du = to_dense(nu);
    const auto dd = to_dense(nd);
    CHECK(oracle::max_abs(dense * du - du * dense) < 1e-10);
    CHECK(oracle::max_abs(dense * dd - dd * dense) < 1e-10);
    if (mi.num_spin_orbitals() <= 4) CHECK(oracle::max_abs(dense - dense_hamiltonian(mi)) < 1e-12);
    CHECK(std::abs(ground_energy(h).ground_energy - *mi.reference_ground_energy()) < 1e-8);
  }
}

TEST_CASE("sweep fixtures reproduce their reference energies") {
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kData + "/h2_sweep")) {
    const auto mi = load_integrals(entry.path());
    CHECK(std::abs(ground_energy(build_qubit_hamiltonian(mi)).ground_energy - *mi.reference_ground_energy()) < 1e-8);
    ++count;
  }
  CHECK(count == 12);
}
