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
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace vqe {

/// Simultaneous perturbation stochastic approximation.
///
///   theta_{k,+/-} = theta_k +/- c_k Delta_k,   Delta_k Rademacher
///   g_k = [E(theta_{k,+}) - E(theta_{k,-})] / (2 c_k) * Delta_k
///   theta_{k+1} = theta_k - a_k g_k
///   a_k = a / k^A,  c_k = c / k^Gamma,  k = 1, 2, ...
///
/// The gain a is calibrated from the mean slope around theta_0:
///   a = (2 pi / 5) c / < |E(theta_0 + c Delta) - E(theta_0 - c Delta)| >
struct SpsaConfig {
  double a_exponent = 0.602;
  double c = 0.01;
  double gamma_exponent = 0.101;
  int calibration_samples = 25;
  int iterations = 1000;
  std::uint64_t seed = 0;
  /// Wrap angles into [0, 2 pi) after every update. Off for objectives that
  /// are not periodic.
  bool wrap_angles = true;
};

void validate(const SpsaConfig& cfg);

struct SpsaRecord {
  int iteration = 0;
  /// E(theta_{k+1}), i.e. the energy after the k-th update.
  double energy = 0;
  double gradient_norm = 0;
};

struct SpsaTrace {
  std::vector<SpsaRecord> records;
  std::vector<double> theta;  // final parameters
  double energy = 0;          // E(final theta)
  double a = 0;               // calibrated gain
  std::size_t objective_evaluations = 0;
};

using Objective = std::function<double(std::span<const double>)>;

/// The generator behind every random draw: std::mt19937_64 seeded with the
/// configured 64-bit seed.
using Rng = std::mt19937_64;

/// Independent +/-1 entries, one generator output (top bit) per entry.
std::vector<double> rademacher(std::size_t dim, Rng& rng);

double calibrate_a(const Objective& objective, std::span<const double> theta, const SpsaConfig& cfg,
                   Rng& rng);

/// Runs cfg.iterations SPSA steps from theta0. The optimizer itself calls
/// `objective` exactly 2 * (calibration_samples + iterations) times; the
/// per-iteration energies go through `monitor` (defaults to `objective`).
SpsaTrace spsa_run(const Objective& objective, std::span<const double> theta0, const SpsaConfig& cfg,
                   const Objective& monitor = {});

}  // namespace vqe
