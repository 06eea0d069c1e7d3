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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "oracles.hpp"
#include "tapering_helpers.hpp"
#include "vqe/error.hpp"
#include "vqe/exact_solver.hpp"
#include "vqe/experiment.hpp"
#include "vqe/fermion.hpp"
#include "vqe/optimizer.hpp"
#include "vqe/simulator.hpp"
#include "vqe/tapering.hpp"

using namespace vqe;
namespace fs = std::filesystem;

namespace {

const std::string kData = VQE_DATA_DIR;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> check;
};

// ---------------------------------------------------------------------------
// 1. symplectic vs dense commutation

Outcome commutation_equivalence() {
  int agree = 0;
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 0; b < 16; ++b) {
      const auto sa = oracle::axes_of_index(a, 2);
      const auto sb = oracle::axes_of_index(b, 2);
      const auto da = oracle::kron_string(sa);
      const auto db = oracle::kron_string(sb);
      const bool dense_commute = oracle::max_abs(da * db - db * da) == 0.0;
      const bool dense_anti = oracle::max_abs(da * db + db * da) == 0.0;
      const int bit = symplectic_product(encode_symplectic(PauliTerm(sa)), encode_symplectic(PauliTerm(sb)));
      if ((bit == 0 && dense_commute && !dense_anti) || (bit == 1 && dense_anti && !dense_commute)) ++agree;
    }
  }
  return {agree == 256, fmt::format("{}/256 ordered pairs agree", agree)};
}

// ---------------------------------------------------------------------------
// 2. decompose / reconstruct

Outcome decompose_round_trip() {
  std::mt19937_64 rng(2);
  double worst = 0;
  for (int k = 0; k < 50; ++k) {
    const int m = 1 + k % 4;
    const auto h = oracle::random_hermitian(m, rng);
    const auto sum = decompose_dense(h, m);
    // Reconstruct with independent Kronecker products, not to_dense.
    oracle::Mat back = oracle::Mat::Zero(h.rows(), h.cols());
    for (const auto& [p, c] : sum.terms()) back += c * p.phase() * oracle::kron_string(p.axes());
    worst = std::max(worst, oracle::max_abs(back - h));
  }
  return {worst < 1e-10, fmt::format("max residual {:.3e} over 50 matrices (bound 1e-10)", worst)};
}

// ---------------------------------------------------------------------------
// 3. canonical anticommutation relations

Outcome car_relations() {
  double worst = 0;
  for (int m = 1; m <= 4; ++m) {
    std::vector<oracle::Mat> a;
    for (int j = 1; j <= m; ++j) a.push_back(to_dense(jw_ladder(j, false, m)));
    const int d = 1 << m;
    const oracle::Mat id = oracle::Mat::Identity(d, d);
    for (int p = 0; p < m; ++p) {
      for (int q = 0; q < m; ++q) {
        const oracle::Mat ad = a[q].adjoint();
        const oracle::Mat anti = a[p] * ad + ad * a[p];
        worst = std::max(worst, oracle::max_abs(anti - (p == q ? id : oracle::Mat::Zero(d, d))));
        worst = std::max(worst, oracle::max_abs(a[p] * a[q] + a[q] * a[p]));
      }
      // the ladder matches the textbook sigma^+ Z...Z form
      worst = std::max(worst, oracle::max_abs(a[p] - oracle::jw_annihilation(p + 1, m)));
    }
  }
  return {worst <= 1e-12, fmt::format("max deviation {:.3e} for m = 1..4 (bound 1e-12)", worst)};
}

// ---------------------------------------------------------------------------
// 4. molecular tapering

Outcome h2_maximal_tapering() {
  const auto h = build_qubit_hamiltonian(load_integrals(kData + "/h2_sto3g_0.735A.json"));
  const double full = oracle::eigenvalues(to_dense(h)).front();
  const auto t = tapering::build_taper_triple(tapering::find_symmetries(h));
  const auto scan = tapering::select_ground_sector(h, t);
  const int mq = scan.tapered.hamiltonian.num_qubits();
  const double err = std::abs(scan.best_energy - full);
  const bool pass = t.size() == 2 && mq == 2 && err < 1e-9;
  return {pass, fmt::format("H2 maximal symmetry search: r = {}, 4 -> {} qubits, |E_sector - E_full| = {:.2e} "
                            "(expected r = 2, 4 -> 2)",
                            t.size(), mq, err)};
}

Outcome h2_parity_tapering() {
  const auto h = build_qubit_hamiltonian(load_integrals(kData + "/h2_sto3g_0.735A.json"));
  const double full = oracle::eigenvalues(to_dense(h)).front();
  const auto t = tapering::build_taper_triple(tapering::symmetries(h, tapering::SymmetryMode::NumberParity));
  const auto scan = tapering::select_ground_sector(h, t);
  const int mq = scan.tapered.hamiltonian.num_qubits();
  const double err = std::abs(scan.best_energy - full);
  return {t.size() == 2 && mq == 2 && err < 1e-9,
          fmt::format("H2 spin-number parities: r = {}, 4 -> {} qubits, |E_sector - E_full| = {:.2e} (bound 1e-9)",
                      t.size(), mq, err)};
}

Outcome lih_tapering() {
  const auto h = build_qubit_hamiltonian(load_integrals(kData + "/lih_sto3g_1.595A.json"));
  const double full = oracle::eigenvalues(to_dense(h)).front();
  const auto t = tapering::build_taper_triple(tapering::find_symmetries(h));
  const auto scan = tapering::select_ground_sector(h, t);
  const int mq = scan.tapered.hamiltonian.num_qubits();
  const double err = std::abs(scan.best_energy - full);
  return {h.num_qubits() == 8 && mq == 6 && err < 1e-9,
          fmt::format("LiH: {} -> {} qubits (r = {}), |E_sector - E_full| = {:.2e}", h.num_qubits(), mq, t.size(),
                      err)};
}

// ---------------------------------------------------------------------------
// 5. spectrum preservation

Outcome spectrum_preservation() {
  std::mt19937_64 rng(5);
  double worst = 0;
  int size_mismatch = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 1 + trial % 4;
    const auto planted = testing_support::random_abelian_group(m, 1 + static_cast<int>(rng() % m), rng);
    const auto h = testing_support::random_symmetric_hamiltonian(planted, 10, rng);
    const auto full = oracle::eigenvalues(to_dense(h));
    const auto t = tapering::build_taper_triple(tapering::find_symmetries(h));
    const auto transformed = tapering::transform(h, t);
    const int r = static_cast<int>(t.size());
    std::vector<double> unioned;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << r); ++code) {
      std::vector<int> sector;
      for (int i = 0; i < r; ++i) sector.push_back((code >> i) & 1 ? -1 : 1);
      const auto part = tapering::restrict_to_sector(transformed, t, sector);
      const auto e = oracle::eigenvalues(to_dense(part.hamiltonian));
      unioned.insert(unioned.end(), e.begin(), e.end());
    }
    std::sort(unioned.begin(), unioned.end());
    if (unioned.size() != full.size()) {
      ++size_mismatch;
      continue;
    }
    for (std::size_t k = 0; k < full.size(); ++k) worst = std::max(worst, std::abs(unioned[k] - full[k]));
  }
  return {size_mismatch == 0 && worst < 1e-9,
          fmt::format("20 Hamiltonians: max eigenvalue deviation {:.3e} (bound 1e-9), {} size mismatches", worst,
                      size_mismatch)};
}

// ---------------------------------------------------------------------------
// 6. predicate on taper triples

Outcome predicate_on_random_groups() {
  std::mt19937_64 rng(6);
  int ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + trial % 6;
    const auto s = testing_support::random_abelian_group(m, 1 + static_cast<int>(rng() % m), rng);
    const auto t = tapering::build_taper_triple(s);
    bool good = t.size() == s.size();
    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto pivot = PauliTerm::single(m, t.qubits[i], t.labels[i] == tapering::Label::X ? Axis::X : Axis::Z);
      for (std::size_t j = 0; j < t.size(); ++j) {
        // the pivot anticommutes with its own generator only (dense check)
        const auto dp = oracle::kron_string(pivot.axes());
        const auto dg = oracle::kron_string(t.generators[j].axes());
        const bool anti = oracle::max_abs(dp * dg + dg * dp) == 0.0;
        good = good && anti == (i == j);
        good = good && symplectic_product(encode_symplectic(pivot), encode_symplectic(t.generators[j])) ==
                           (i == j ? 1 : 0);
      }
    }
    if (good) ++ok;
  }
  return {ok == 100, fmt::format("{}/100 random groups (m <= 6) satisfy the pivot predicate", ok)};
}

// ---------------------------------------------------------------------------
// 7. entanglers

oracle::Mat entangler_matrix(EntanglerKind kind, int m) {
  const std::size_t d = std::size_t{1} << m;
  oracle::Mat u(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t b = 0; b < d; ++b) {
    std::vector<Complex> amps(d, 0.0);
    amps[b] = 1.0;
    StateVector s(m, std::move(amps));
    apply_entangler(s, kind);
    for (std::size_t i = 0; i < d; ++i) u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(b)) = s[i];
  }
  return u;
}

Outcome entangler_unitarity() {
  double worst = 0;
  for (auto kind : {EntanglerKind::CnotChain, EntanglerKind::CnotPairs, EntanglerKind::CmNot, EntanglerKind::PstM,
                    EntanglerKind::Iswap2}) {
    for (int m = 2; m <= 6; ++m) {
      const auto u = entangler_matrix(kind, m);
      const oracle::Mat id = oracle::Mat::Identity(u.rows(), u.cols());
      worst = std::max(worst, oracle::max_abs(u.adjoint() * u - id));
    }
  }
  // |01101> -> i |10110>
  std::vector<Complex> amps(32, 0.0);
  amps[0b01101] = 1.0;
  StateVector s(5, std::move(amps));
  apply_entangler(s, EntanglerKind::PstM);
  bool pst = s[0b10110] == Complex(0, 1);
  for (std::size_t i = 0; i < 32; ++i) pst = pst && (i == 0b10110 || s[i] == Complex(0, 0));
  return {worst <= 1e-12 && pst,
          fmt::format("max |U^dagger U - I| = {:.3e} over 5 entanglers, m = 2..6 (bound 1e-12); PST example {}",
                      worst, pst ? "exact" : "wrong")};
}

// ---------------------------------------------------------------------------
// 8. SPSA

double bowl(std::span<const double> t) {
  double s = 0;
  for (double x : t) s += x * x;
  return s;
}

Outcome spsa_bowl() {
  int below = 0;
  std::vector<double> finals;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SpsaConfig cfg;
    cfg.iterations = 1000;
    cfg.seed = seed;
    cfg.wrap_angles = false;  // the bowl is not periodic
    const double f = spsa_run(bowl, initial_parameters(12, seed), cfg).energy;
    finals.push_back(f);
    if (f < 1e-3) ++below;
  }
  return {below >= 16, fmt::format("{}/20 seeds reach f < 1e-3 (need >= 16); median final f = {:.3e}", below,
                                   median(finals))};
}

Outcome spsa_linear_calibration() {
  SpsaConfig cfg;
  Rng rng(8);
  const std::vector<double> theta{1.3};
  const double a = calibrate_a([](std::span<const double> t) { return t[0]; }, theta, cfg, rng);
  const double err = std::abs(a - std::numbers::pi / 5);
  return {err <= 1e-12, fmt::format("a = {:.15f}, |a - pi/5| = {:.2e} (bound 1e-12)", a, err)};
}

// ---------------------------------------------------------------------------
// 9. end-to-end H2

Outcome end_to_end_h2() {
  const auto h = build_qubit_hamiltonian(load_integrals(kData + "/h2_sto3g_0.735A.json"));
  const double exact = oracle::eigenvalues(to_dense(h)).front();
  bool pass = true;
  std::string detail;
  for (int depth : {1, 2}) {
    RunConfig cfg;
    cfg.integrals = {kData + "/h2_sto3g_0.735A.json"};
    cfg.symmetries = tapering::SymmetryMode::NumberParity;
    cfg.entangler = EntanglerKind::CnotChain;
    cfg.depth = depth;
    cfg.iterations = 1000;
    cfg.seeds = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    const auto result = run_experiment(cfg, false);
    std::vector<double> finals;
    double lowest = std::numeric_limits<double>::infinity();
    int qubits = -1;
    for (const auto& run : result.runs) {
      if (!run.ok) {
        pass = false;
        continue;
      }
      qubits = run.tapered_qubits;
      finals.push_back(run.energies.back() - exact);
      for (double e : run.energies) lowest = std::min(lowest, e - exact);
    }
    const double med = finals.empty() ? std::numeric_limits<double>::infinity() : median(finals);
    pass = pass && qubits == 2 && finals.size() == 10 && med <= 5e-2 && lowest >= -1e-9;
    detail += fmt::format("{}d={}: {} qubits, median final dE = {:.3e} (bound 5e-2), min recorded dE = {:.2e}",
                          detail.empty() ? "" : "; ", depth, qubits, med, lowest);
  }
  return {pass, detail};
}

// ---------------------------------------------------------------------------
// 10. determinism

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  const auto root = fs::temp_directory_path() / "vqe_acceptance_determinism";
  fs::remove_all(root);
  RunConfig cfg;
  cfg.integrals = {kData + "/h2_sto3g_0.735A.json"};
  cfg.symmetries = tapering::SymmetryMode::NumberParity;
  cfg.depth = 2;
  cfg.iterations = 300;
  cfg.seeds = {11, 12, 13};
  cfg.output_dir = root / "a";
  (void)run_experiment(cfg);
  cfg.output_dir = root / "b";
  (void)run_experiment(cfg);
  int identical = 0;
  int files = 0;
  for (const auto& entry : fs::directory_iterator(root / "a")) {
    if (entry.path().extension() != ".csv") continue;
    ++files;
    const auto other = root / "b" / entry.path().filename();
    if (fs::exists(other) && slurp(entry.path()) == slurp(other)) ++identical;
  }
  return {files == 4 && identical == files,
          fmt::format("{}/{} CSV files byte-identical across two invocations", identical, files)};
}

// ---------------------------------------------------------------------------
// 11. parameter count contract

Outcome parameter_contract() {
  int ok = 0;
  int total = 0;
  for (int m = 1; m <= 5; ++m) {
    for (int d = 0; d <= 4; ++d) {
      ++total;
      const std::size_t expected = static_cast<std::size_t>((3 * d + 2) * m);
      bool good = parameter_count(m, d) == expected;
      const std::vector<double> theta(expected + 1, 0.1);
      try {
        const auto s = prepare_trial_state(std::span(theta).first(expected), d, EntanglerKind::CnotChain, m);
        good = good && std::abs(s.norm() - 1) < 1e-12;
      } catch (const std::exception&) {
        good = false;
      }
      for (std::size_t len : {expected - 1, expected + 1}) {
        try {
          (void)prepare_trial_state(std::span(theta).first(len), d, EntanglerKind::CnotChain, m);
          good = false;
        } catch (const Error&) {
        }
      }
      if (good) ++ok;
    }
  }
  return {ok == total, fmt::format("{}/{} (m, d) pairs enforce D = (3d+2)m", ok, total)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "symplectic product matches dense commutation", 1, commutation_equivalence},
      {2, "Pauli decomposition round trip", 5, decompose_round_trip},
      {3, "Jordan-Wigner anticommutation relations", 5, car_relations},
      {4, "H2 maximal symmetries taper 4 -> 2 qubits", 10, h2_maximal_tapering},
      {4, "H2 spin-number parities taper 4 -> 2 qubits", 10, h2_parity_tapering},
      {4, "LiH tapers 8 -> 6 qubits", 10, lih_tapering},
      {5, "sector spectra union equals full spectrum", 30, spectrum_preservation},
      {6, "taper triple pivot predicate", 10, predicate_on_random_groups},
      {7, "entangler unitarity and PST example", 10, entangler_unitarity},
      {8, "SPSA on a 12-dimensional bowl", 30, spsa_bowl},
      {8, "SPSA calibration on a linear objective", 30, spsa_linear_calibration},
      {9, "end-to-end tapered H2 VQE", 120, end_to_end_h2},
      {10, "byte-identical traces", 60, determinism},
      {11, "parameter-count contract", 1, parameter_contract},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.check();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_seconds;
    const bool pass = out.pass && in_time;
    if (!pass) ++failures;
    std::printf("%s criterion %d: %s -- %s [%.2f s, budget %.0f s%s]\n", pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), out.detail.c_str(), secs, c.budget_seconds, in_time ? "" : ", over budget");
    std::fflush(stdout);
  }
  std::printf("%d of %zu checks failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
