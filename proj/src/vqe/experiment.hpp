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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vqe/optimizer.hpp"
#include "vqe/simulator.hpp"
#include "vqe/tapering.hpp"

namespace vqe {

/// A sweep: every geometry file x every seed, one SPSA run each.
struct RunConfig {
  std::vector<std::filesystem::path> integrals;
  bool taper = true;
  tapering::SymmetryMode symmetries = tapering::SymmetryMode::Maximal;
  EntanglerKind entangler = EntanglerKind::CnotChain;
  int depth = 1;
  int iterations = 1000;
  std::vector<std::uint64_t> seeds = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  std::filesystem::path output_dir = "vqe_out";
  /// Gains and calibration; iterations and seed are overwritten per run.
  SpsaConfig spsa;
  /// Pool size; 0 means hardware concurrency. VQE_THREADS caps it further.
  int threads = 0;
};

void validate(const RunConfig& cfg);

/// Reads the keys integrals, taper, symmetries, entangler, depth,
/// iterations, seeds, output_dir, threads and spsa{a_exponent, c,
/// gamma_exponent, calibration_samples}. Relative integrals paths are
/// resolved against `base_dir`.
RunConfig run_config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});

/// JSON (.json) or YAML (anything else).
RunConfig load_run_config(const std::filesystem::path& path);

/// Converts a YAML document to the equivalent JSON value.
nlohmann::json yaml_to_json(const std::string& yaml_text);

struct RunResult {
  std::string geometry;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  int qubits = 0;          // before tapering
  int tapered_qubits = 0;  // after tapering (== qubits when not tapering)
  std::vector<int> sector;
  double ground_energy = 0;  // exact E_g of the Hamiltonian being minimized
  std::size_t parameters = 0;
  double spsa_a = 0;
  std::vector<double> energies;  // E(theta_{k+1}), k = 1..K
  [[nodiscard]] double final_delta() const { return energies.back() - ground_energy; }
};

struct AggregatePoint {
  int iteration = 0;
  double geo_mean = 0;
  double geo_std = 0;
};

struct ExperimentResult {
  std::vector<RunResult> runs;  // geometry-major, seeds in config order
  std::vector<AggregatePoint> aggregate;
  nlohmann::json report;
  [[nodiscard]] std::size_t failures() const;
};

inline constexpr double kDeltaFloor = 1e-12;

/// exp(mean(ln max(v, 1e-12))).
double geometric_mean(const std::vector<double>& values);
/// exp(population stddev(ln max(v, 1e-12))).
double geometric_std(const std::vector<double>& values);
double median(std::vector<double> values);

/// Uniform angles in [0, 2 pi) from a stream independent of the SPSA one.
std::vector<double> initial_parameters(std::size_t dim, std::uint64_t seed);

/// Runs the sweep. Failures are recorded per run and do not stop the rest.
/// When `write_outputs` is set, writes trace_<geom>_<seed>.csv,
/// aggregate.csv and report.json into cfg.output_dir.
ExperimentResult run_experiment(const RunConfig& cfg, bool write_outputs = true);

/// Byte-stable CSV renderings.
std::string trace_csv(const RunResult& run);
std::string aggregate_csv(const std::vector<AggregatePoint>& curve);

}  // namespace vqe
