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
#include "vqe/vqe.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "vqe/error.hpp"
#include "vqe/exact_solver.hpp"
#include "vqe/experiment.hpp"
#include "vqe/fermion.hpp"
#include "vqe/pauli_io.hpp"
#include "vqe/simulator.hpp"
#include "vqe/tapering.hpp"

struct vqe_pauli_sum {
  vqe::PauliSum value;
};

struct vqe_integrals {
  vqe::MolecularIntegrals value;
};

struct vqe_taper_result {
  vqe::tapering::TaperTriple triple;
  vqe::tapering::TaperedHamiltonian tapered;
  std::optional<vqe::tapering::SectorScan> scan;
  vqe::tapering::SymmetryMode mode;
  double full_ground_energy;
  std::optional<double> sector_ground_energy;
};

namespace {

thread_local std::string g_last_error;

vqe_status status_of(vqe::ErrorCode code) { return static_cast<vqe_status>(static_cast<int>(code)); }

// Runs fn, translating exceptions into a status and the thread's last error.
template <typename Fn>
vqe_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return VQE_OK;
  } catch (const vqe::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return VQE_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return VQE_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return VQE_ERR_INTERNAL;
  }
}

template <typename... Ptrs>
void require(Ptrs... ptrs) {
  if (((ptrs == nullptr) || ...)) vqe::fail(vqe::ErrorCode::InvalidArgument, "null pointer argument");
}

char* copy_string(const std::string& s) {
  auto* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

vqe::tapering::SymmetryMode mode_of(vqe_symmetry_mode mode) {
  switch (mode) {
    case VQE_SYMMETRIES_MAXIMAL: return vqe::tapering::SymmetryMode::Maximal;
    case VQE_SYMMETRIES_NUMBER_PARITY: return vqe::tapering::SymmetryMode::NumberParity;
  }
  vqe::fail(vqe::ErrorCode::InvalidArgument, "unknown symmetry mode");
}

vqe::EntanglerKind entangler_of(vqe_entangler kind) {
  const int k = static_cast<int>(kind);
  if (k < 0 || k >= static_cast<int>(std::size(vqe::kAllEntanglers))) {
    vqe::fail(vqe::ErrorCode::InvalidArgument, "unknown entangler");
  }
  return vqe::kAllEntanglers[k];
}

}  // namespace

extern "C" {

const char* vqe_version(void) { return "1.0.0"; }

const char* vqe_last_error(void) { return g_last_error.c_str(); }

const char* vqe_status_name(vqe_status status) {
  switch (status) {
    case VQE_OK: return "ok";
    case VQE_ERR_INVALID_ARGUMENT: return "invalid argument";
    case VQE_ERR_DIMENSION: return "dimension";
    case VQE_ERR_PARSE: return "parse";
    case VQE_ERR_IO: return "io";
    case VQE_ERR_NOT_HERMITIAN: return "not hermitian";
    case VQE_ERR_NOT_SYMMETRY: return "not a symmetry";
    case VQE_ERR_NUMERICAL: return "numerical";
    case VQE_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void vqe_string_free(char* s) { delete[] s; }

vqe_status vqe_pauli_sum_load(const char* path, vqe_pauli_sum** out) {
  return guarded([&] {
    require(path, out);
    *out = new vqe_pauli_sum{vqe::load_pauli_sum(path)};
  });
}

vqe_status vqe_pauli_sum_parse(const char* content, vqe_pauli_sum** out) {
  return guarded([&] {
    require(content, out);
    *out = new vqe_pauli_sum{vqe::parse_pauli_sum(content)};
  });
}

void vqe_pauli_sum_free(vqe_pauli_sum* h) { delete h; }

vqe_status vqe_pauli_sum_num_qubits(const vqe_pauli_sum* h, int* out) {
  return guarded([&] {
    require(h, out);
    *out = h->value.num_qubits();
  });
}

vqe_status vqe_pauli_sum_num_terms(const vqe_pauli_sum* h, size_t* out) {
  return guarded([&] {
    require(h, out);
    *out = h->value.size();
  });
}

vqe_status vqe_pauli_sum_to_json(const vqe_pauli_sum* h, char** out) {
  return guarded([&] {
    require(h, out);
    *out = copy_string(vqe::to_json(h->value).dump(2));
  });
}

vqe_status vqe_pauli_sum_to_text(const vqe_pauli_sum* h, char** out) {
  return guarded([&] {
    require(h, out);
    *out = copy_string(vqe::to_text(h->value));
  });
}

vqe_status vqe_integrals_load(const char* path, vqe_integrals** out) {
  return guarded([&] {
    require(path, out);
    *out = new vqe_integrals{vqe::load_integrals(path)};
  });
}

void vqe_integrals_free(vqe_integrals* mi) { delete mi; }

vqe_status vqe_integrals_num_spin_orbitals(const vqe_integrals* mi, int* out) {
  return guarded([&] {
    require(mi, out);
    *out = mi->value.num_spin_orbitals();
  });
}

vqe_status vqe_integrals_reference_energy(const vqe_integrals* mi, double* out, int* has_value) {
  return guarded([&] {
    require(mi, out, has_value);
    const auto ref = mi->value.reference_ground_energy();
    *has_value = ref.has_value() ? 1 : 0;
    if (ref) *out = *ref;
  });
}

vqe_status vqe_qubit_hamiltonian(const vqe_integrals* mi, vqe_pauli_sum** out) {
  return guarded([&] {
    require(mi, out);
    *out = new vqe_pauli_sum{vqe::build_qubit_hamiltonian(mi->value)};
  });
}

vqe_status vqe_ground_energy(const vqe_pauli_sum* h, double* out) {
  return guarded([&] {
    require(h, out);
    *out = vqe::ground_energy(h->value).ground_energy;
  });
}

vqe_status vqe_spectrum(const vqe_pauli_sum* h, double* eigenvalues, size_t capacity, size_t* count) {
  return guarded([&] {
    require(h, count);
    if (capacity > 0) require(eigenvalues);
    const auto result = vqe::ground_energy(h->value);
    const auto n = std::min(capacity, result.eigenvalues.size());
    std::copy_n(result.eigenvalues.begin(), n, eigenvalues);
    *count = result.eigenvalues.size();
  });
}

vqe_status vqe_taper(const vqe_pauli_sum* h, vqe_symmetry_mode mode, const char* sector,
                     vqe_taper_result** out) {
  return guarded([&] {
    require(h, out);
    namespace tp = vqe::tapering;
    const auto m = mode_of(mode);
    const auto group = tp::symmetries(h->value, m);
    auto triple = tp::build_taper_triple(group);
    const double full = vqe::ground_energy(h->value).ground_energy;
    if (sector == nullptr) {
      auto scan = tp::select_ground_sector(h->value, triple);
      auto tapered = scan.tapered;
      *out = new vqe_taper_result{std::move(triple), std::move(tapered), std::move(scan), m, full,
                                  std::nullopt};
      (*out)->sector_ground_energy = (*out)->scan->best_energy;
    } else {
      auto tapered = tp::taper(h->value, triple, tp::parse_sector(sector));
      std::optional<double> e;
      if (tapered.hamiltonian.num_qubits() <= vqe::kMaxExactQubits) {
        e = vqe::ground_energy(tapered.hamiltonian).ground_energy;
      }
      *out = new vqe_taper_result{std::move(triple), std::move(tapered), std::nullopt, m, full, e};
    }
  });
}

void vqe_taper_result_free(vqe_taper_result* t) { delete t; }

vqe_status vqe_taper_result_hamiltonian(const vqe_taper_result* t, vqe_pauli_sum** out) {
  return guarded([&] {
    require(t, out);
    *out = new vqe_pauli_sum{t->tapered.hamiltonian};
  });
}

vqe_status vqe_taper_result_report(const vqe_taper_result* t, char** out) {
  return guarded([&] {
    require(t, out);
    namespace tp = vqe::tapering;
    nlohmann::json j;
    j["symmetries"] = std::string(tp::symmetry_mode_name(t->mode));
    j["qubits"] = t->triple.m;
    j["r"] = t->triple.size();
    j["tapered_qubits"] = t->tapered.hamiltonian.num_qubits();
    nlohmann::json gens = nlohmann::json::array();
    for (std::size_t i = 0; i < t->triple.size(); ++i) {
      gens.push_back({{"generator", t->triple.generators[i].to_string()},
                      {"qubit", t->triple.qubits[i]},
                      {"label", t->triple.labels[i] == tp::Label::X ? "X" : "Z"}});
    }
    j["generators"] = gens;
    j["permutation"] = t->tapered.permutation;
    j["sector"] = tp::sector_string(t->tapered.sector);
    j["full_ground_energy"] = t->full_ground_energy;
    if (t->sector_ground_energy) j["sector_ground_energy"] = *t->sector_ground_energy;
    if (t->scan) {
      nlohmann::json sectors = nlohmann::json::array();
      for (std::size_t i = 0; i < t->scan->sectors.size(); ++i) {
        sectors.push_back({{"sector", tp::sector_string(t->scan->sectors[i])}, {"ground_energy", t->scan->energies[i]}});
      }
      j["sector_scan"] = sectors;
    }
    *out = copy_string(j.dump(2));
  });
}

vqe_status vqe_taper_result_unitary(const vqe_taper_result* t, char** out) {
  return guarded([&] {
    require(t, out);
    namespace tp = vqe::tapering;
    nlohmann::json j;
    j["clifford"] = vqe::to_json(tp::build_clifford(t->triple));
    j["permutation"] = tp::tapering_permutation(t->triple);
    if (t->triple.m <= 12) {
      const auto u = tp::build_unitary(t->triple);
      nlohmann::json rows = nlohmann::json::array();
      for (Eigen::Index r = 0; r < u.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < u.cols(); ++c) row.push_back({u(r, c).real(), u(r, c).imag()});
        rows.push_back(std::move(row));
      }
      j["dense"] = std::move(rows);
    }
    *out = copy_string(j.dump());
  });
}

vqe_status vqe_entangler_from_name(const char* name, vqe_entangler* out) {
  return guarded([&] {
    require(name, out);
    const auto kind = vqe::parse_entangler(name);
    for (std::size_t i = 0; i < std::size(vqe::kAllEntanglers); ++i) {
      if (vqe::kAllEntanglers[i] == kind) *out = static_cast<vqe_entangler>(i);
    }
  });
}

vqe_status vqe_parameter_count(int m, int depth, size_t* out) {
  return guarded([&] {
    require(out);
    *out = vqe::parameter_count(m, depth);
  });
}

vqe_status vqe_energy(const vqe_pauli_sum* h, const double* theta, size_t theta_len, int depth,
                      vqe_entangler entangler, double* out) {
  return guarded([&] {
    require(h, out);
    if (theta_len > 0) require(theta);
    const int m = h->value.num_qubits();
    const auto state = vqe::prepare_trial_state(std::span<const double>(theta, theta_len), depth,
                                                entangler_of(entangler), m);
    *out = vqe::expectation(state, h->value);
  });
}

vqe_status vqe_run_experiment(const char* config_path, const char* output_dir_override, size_t* failed_runs,
                              char** report) {
  return guarded([&] {
    require(config_path);
    auto cfg = vqe::load_run_config(config_path);
    if (output_dir_override != nullptr) cfg.output_dir = output_dir_override;
    const auto result = vqe::run_experiment(cfg);
    if (failed_runs != nullptr) *failed_runs = result.failures();
    if (report != nullptr) *report = copy_string(result.report.dump(2));
  });
}

}  // extern "C"
