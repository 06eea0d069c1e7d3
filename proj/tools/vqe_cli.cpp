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

// Command-line front end. Talks to the library exclusively through the C API.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "vqe/vqe.h"

namespace {

constexpr int kExitRunFailures = 1;
constexpr int kExitError = 2;

struct Failure {
  vqe_status status;
};

void check(vqe_status status) {
  if (status != VQE_OK) throw Failure{status};
}

struct StringDeleter {
  void operator()(char* s) const { vqe_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct PauliSumDeleter {
  void operator()(vqe_pauli_sum* h) const { vqe_pauli_sum_free(h); }
};
using PauliSumHandle = std::unique_ptr<vqe_pauli_sum, PauliSumDeleter>;

struct IntegralsDeleter {
  void operator()(vqe_integrals* mi) const { vqe_integrals_free(mi); }
};
using IntegralsHandle = std::unique_ptr<vqe_integrals, IntegralsDeleter>;

struct TaperDeleter {
  void operator()(vqe_taper_result* t) const { vqe_taper_result_free(t); }
};
using TaperHandle = std::unique_ptr<vqe_taper_result, TaperDeleter>;

OwnedString take(char* s) { return OwnedString(s); }

void emit(const std::string& path, const char* content) {
  if (path.empty() || path == "-") {
    std::fputs(content, stdout);
    std::fputc('\n', stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << content << '\n';
  if (!out) {
    std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
    throw Failure{VQE_ERR_IO};
  }
}

// A Hamiltonian from either a Pauli-sum file or a molecular-integrals file.
PauliSumHandle load_hamiltonian(const std::string& pauli_path, const std::string& integrals_path) {
  vqe_pauli_sum* h = nullptr;
  if (!integrals_path.empty()) {
    vqe_integrals* raw = nullptr;
    check(vqe_integrals_load(integrals_path.c_str(), &raw));
    IntegralsHandle mi(raw);
    check(vqe_qubit_hamiltonian(mi.get(), &h));
  } else {
    check(vqe_pauli_sum_load(pauli_path.c_str(), &h));
  }
  return PauliSumHandle(h);
}

void add_hamiltonian_inputs(CLI::App* cmd, std::string& pauli, std::string& integrals) {
  auto* in = cmd->add_option("-i,--input", pauli, "Pauli-sum file (JSON or text)")->check(CLI::ExistingFile);
  auto* mol = cmd->add_option("--integrals", integrals, "molecular integrals JSON; builds the JW Hamiltonian")
                  ->check(CLI::ExistingFile);
  in->excludes(mol);
  mol->excludes(in);
}

void require_one_input(const std::string& pauli, const std::string& integrals) {
  if (pauli.empty() && integrals.empty()) throw CLI::ValidationError("one of --input or --integrals is required");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational quantum eigensolver with Z2 qubit tapering"};
  app.set_version_flag("--version", std::string(vqe_version()));
  app.require_subcommand(1);

  // run
  std::string config_path, output_dir;
  auto* run = app.add_subcommand("run", "run an experiment sweep from a YAML/JSON config");
  run->add_option("-c,--config", config_path, "config file")->required()->check(CLI::ExistingFile);
  run->add_option("-o,--output-dir", output_dir, "override the config's output_dir");

  // taper
  std::string taper_input, taper_integrals, sector, symmetries = "maximal", taper_output, unitary_output;
  auto* taper = app.add_subcommand("taper", "find Z2 symmetries and taper qubits");
  add_hamiltonian_inputs(taper, taper_input, taper_integrals);
  taper->add_option("-s,--sector", sector, "sector signs, e.g. +-; default: ground sector search");
  taper->add_option("--symmetries", symmetries, "maximal | number_parity")
      ->check(CLI::IsMember({"maximal", "number_parity"}));
  taper->add_option("-o,--output", taper_output, "write the tapered Hamiltonian JSON here");
  auto* emit_unitary = taper->add_option("--emit-unitary", unitary_output,
                                          "write the tapering Clifford/permutation/dense U JSON here");
  emit_unitary->expected(0, 1);

  // solve
  std::string solve_input, solve_integrals;
  bool spectrum = false;
  auto* solve = app.add_subcommand("solve", "exact ground energy by dense diagonalization");
  add_hamiltonian_inputs(solve, solve_input, solve_integrals);
  solve->add_flag("--spectrum", spectrum, "print every eigenvalue");

  // hamiltonian
  std::string ham_integrals, ham_output, ham_format = "json";
  auto* ham = app.add_subcommand("hamiltonian", "Jordan-Wigner qubit Hamiltonian from molecular integrals");
  ham->add_option("--integrals", ham_integrals, "molecular integrals JSON")->required()->check(CLI::ExistingFile);
  ham->add_option("-o,--output", ham_output, "output file (default stdout)");
  ham->add_option("--format", ham_format, "json | text")->check(CLI::IsMember({"json", "text"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      size_t failed = 0;
      char* report = nullptr;
      check(vqe_run_experiment(config_path.c_str(), output_dir.empty() ? nullptr : output_dir.c_str(), &failed,
                               &report));
      auto owned = take(report);
      const auto j = nlohmann::json::parse(owned.get());
      for (const auto& g : j["geometries"]) {
        if (g.contains("error")) {
          std::printf("%-28s FAILED: %s\n", g["label"].get<std::string>().c_str(),
                      g["error"].get<std::string>().c_str());
        } else {
          std::printf("%-28s m=%d -> %d  sector %-4s E_g=%.10f  median final dE=%.3e\n",
                      g["label"].get<std::string>().c_str(), g["qubits"].get<int>(), g["tapered_qubits"].get<int>(),
                      g["sector"].get<std::string>().c_str(), g["ground_energy"].get<double>(),
                      g.value("median_final_delta", std::nan("")));
        }
      }
      for (const auto& r : j["runs"]) {
        if (!r["ok"].get<bool>()) {
          std::printf("run %s seed %llu failed: %s\n", r["geometry"].get<std::string>().c_str(),
                      static_cast<unsigned long long>(r["seed"].get<std::uint64_t>()),
                      r["error"].get<std::string>().c_str());
        }
      }
      std::printf("%zu of %zu runs failed\n", failed, j["runs"].size());
      return failed == 0 ? 0 : kExitRunFailures;
    }

    if (*taper) {
      require_one_input(taper_input, taper_integrals);
      const auto h = load_hamiltonian(taper_input, taper_integrals);
      const auto mode = symmetries == "maximal" ? VQE_SYMMETRIES_MAXIMAL : VQE_SYMMETRIES_NUMBER_PARITY;
      vqe_taper_result* raw = nullptr;
      check(vqe_taper(h.get(), mode, sector.empty() ? nullptr : sector.c_str(), &raw));
      TaperHandle result(raw);
      char* report = nullptr;
      check(vqe_taper_result_report(result.get(), &report));
      emit("", take(report).get());
      if (!taper_output.empty()) {
        vqe_pauli_sum* tapered = nullptr;
        check(vqe_taper_result_hamiltonian(result.get(), &tapered));
        PauliSumHandle owned(tapered);
        char* json = nullptr;
        check(vqe_pauli_sum_to_json(owned.get(), &json));
        emit(taper_output, take(json).get());
      }
      if (*emit_unitary) {
        char* json = nullptr;
        check(vqe_taper_result_unitary(result.get(), &json));
        emit(unitary_output, take(json).get());
      }
      return 0;
    }

    if (*solve) {
      require_one_input(solve_input, solve_integrals);
      const auto h = load_hamiltonian(solve_input, solve_integrals);
      double e = 0;
      check(vqe_ground_energy(h.get(), &e));
      std::printf("ground_energy %.12f\n", e);
      if (spectrum) {
        size_t count = 0;
        check(vqe_spectrum(h.get(), nullptr, 0, &count));
        std::vector<double> values(count);
        check(vqe_spectrum(h.get(), values.data(), values.size(), &count));
        for (double v : values) std::printf("%.12f\n", v);
      }
      return 0;
    }

    if (*ham) {
      const auto h = load_hamiltonian("", ham_integrals);
      char* out = nullptr;
      check(ham_format == "json" ? vqe_pauli_sum_to_json(h.get(), &out) : vqe_pauli_sum_to_text(h.get(), &out));
      emit(ham_output, take(out).get());
      return 0;
    }
  } catch (const Failure& f) {
    std::fprintf(stderr, "error (%s): %s\n", vqe_status_name(f.status), vqe_last_error());
    return kExitError;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  }
  return 0;
}
