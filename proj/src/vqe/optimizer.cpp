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
#include "vqe/optimizer.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "vqe/error.hpp"

namespace vqe {
namespace {

constexpr double kFlatSlope = 1e-12;
constexpr double kTwoPi = 2 * std::numbers::pi;

double checked(double e, const char* where) {
  if (!std::isfinite(e)) fail(ErrorCode::Numerical, std::string("non-finite objective value during ") + where);
  return e;
}

std::vector<double> shifted(std::span<const double> theta, const std::vector<double>& delta, double step) {
  std::vector<double> out(theta.begin(), theta.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += step * delta[i];
  return out;
}

}  // namespace

void validate(const SpsaConfig& cfg) {
  if (!(cfg.c > 0)) fail(ErrorCode::InvalidArgument, "SPSA c must be positive");
  if (!(cfg.a_exponent > 0) || !(cfg.gamma_exponent > 0)) {
    fail(ErrorCode::InvalidArgument, "SPSA exponents must be positive");
  }
  if (cfg.iterations < 1) fail(ErrorCode::InvalidArgument, "SPSA needs at least one iteration");
  if (cfg.calibration_samples < 1) fail(ErrorCode::InvalidArgument, "SPSA needs calibration samples");
}

std::vector<double> rademacher(std::size_t dim, Rng& rng) {
  std::vector<double> out(dim);
  for (auto& v : out) v = (rng() >> 63) ? 1.0 : -1.0;
  return out;
}

double calibrate_a(const Objective& objective, std::span<const double> theta, const SpsaConfig& cfg,
                   Rng& rng) {
  validate(cfg);
  double total = 0;
  for (int i = 0; i < cfg.calibration_samples; ++i) {
    const auto delta = rademacher(theta.size(), rng);
    const double plus = checked(objective(shifted(theta, delta, cfg.c)), "calibration");
    const double minus = checked(objective(shifted(theta, delta, -cfg.c)), "calibration");
    total += std::abs(plus - minus);
  }
  const double mean = total / cfg.calibration_samples;
  if (mean < kFlatSlope) fail(ErrorCode::Numerical, "flat landscape: mean calibration slope below 1e-12");
  return (kTwoPi / 5) * cfg.c / mean;
}

SpsaTrace spsa_run(const Objective& objective, std::span<const double> theta0, const SpsaConfig& cfg,
                   const Objective& monitor) {
  validate(cfg);
  if (theta0.empty()) fail(ErrorCode::InvalidArgument, "empty parameter vector");
  std::size_t evaluations = 0;
  const Objective counted = [&](std::span<const double> t) {
    ++evaluations;
    return objective(t);
  };
  const Objective& record = monitor ? monitor : objective;

  Rng rng(cfg.seed);
  SpsaTrace trace;
  trace.a = calibrate_a(counted, theta0, cfg, rng);
  std::vector<double> theta(theta0.begin(), theta0.end());
  const double dim_norm = std::sqrt(static_cast<double>(theta.size()));
  trace.records.reserve(static_cast<std::size_t>(cfg.iterations));

  for (int k = 1; k <= cfg.iterations; ++k) {
    const double ak = trace.a / std::pow(k, cfg.a_exponent);
    const double ck = cfg.c / std::pow(k, cfg.gamma_exponent);
    const auto delta = rademacher(theta.size(), rng);
    const double plus = checked(counted(shifted(theta, delta, ck)), "iteration");
    const double minus = checked(counted(shifted(theta, delta, -ck)), "iteration");
    const double slope = (plus - minus) / (2 * ck);
    for (std::size_t i = 0; i < theta.size(); ++i) {
      theta[i] -= ak * slope * delta[i];
      if (cfg.wrap_angles) {
        theta[i] = std::fmod(theta[i], kTwoPi);
        if (theta[i] < 0) theta[i] += kTwoPi;
        if (theta[i] >= kTwoPi) theta[i] = 0;
      }
    }
    const double energy = checked(record(theta), "monitoring");
    trace.records.push_back({k, energy, std::abs(slope) * dim_norm});
  }
  trace.theta = theta;
  trace.energy = trace.records.back().energy;
  trace.objective_evaluations = evaluations;
  return trace;
}

}  // namespace vqe
