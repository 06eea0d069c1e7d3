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
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "vqe/error.hpp"
#include "vqe/experiment.hpp"
#include "vqe/optimizer.hpp"

using namespace vqe;

namespace {

constexpr double kPi = std::numbers::pi;

double bowl(std::span<const double> t) {
  double s = 0;
  for (double x : t) s += x * x;
  return s;
}

double first_coordinate(std::span<const double> t) { return t[0]; }

}  // namespace

TEST_CASE("rademacher vectors are deterministic signs") {
  Rng a(5), b(5);
  const auto va = rademacher(4, a);
  CHECK(va == rademacher(4, b));
  for (double v : va) CHECK((v == 1.0 || v == -1.0));
}

TEST_CASE("rademacher coordinates have mean close to zero") {
  Rng rng(9);
  std::vector<double> sums(6, 0.0);
  const int draws = 10000;
  for (int k = 0; k < draws; ++k) {
    const auto v = rademacher(6, rng);
    for (std::size_t i = 0; i < v.size(); ++i) sums[i] += v[i];
  }
  for (double s : sums) CHECK(std::abs(s / draws) < 0.05);
}

TEST_CASE("calibration on a linear objective") {
  SpsaConfig cfg;
  Rng rng(1);
  const std::vector<double> theta{0.3};
  CHECK(std::abs(calibrate_a(first_coordinate, theta, cfg, rng) - kPi / 5) < 1e-12);
}

TEST_CASE("calibration rejects flat landscapes") {
  SpsaConfig cfg;
  Rng rng(1);
  const std::vector<double> zero(12, 0.0);
  CHECK_THROWS_AS((void)calibrate_a([](std::span<const double>) { return 4.0; }, zero, cfg, rng), Error);
  CHECK_THROWS_AS((void)calibrate_a(bowl, zero, cfg, rng), Error);
}

TEST_CASE("single step on a linear objective") {
  SpsaConfig cfg;
  cfg.iterations = 1;
  cfg.wrap_angles = false;
  const std::vector<double> theta0{0.3};
  const auto trace = spsa_run(first_coordinate, theta0, cfg);
  // g_1 = (c_1 Delta + c_1 Delta) / (2 c_1) * Delta = 1, a_1 = a = pi/5
  CHECK(std::abs(trace.theta[0] - (0.3 - kPi / 5)) < 1e-12);
  cfg.wrap_angles = true;
  const auto wrapped = spsa_run(first_coordinate, theta0, cfg);
  CHECK(std::abs(wrapped.theta[0] - (0.3 - kPi / 5 + 2 * kPi)) < 1e-12);
}

TEST_CASE("evaluation counts and perturbation magnitude") {
  SpsaConfig cfg;
  cfg.iterations = 40;
  cfg.calibration_samples = 7;
  cfg.wrap_angles = false;
  std::vector<std::vector<double>> points;
  const Objective recorder = [&](std::span<const double> t) {
    points.emplace_back(t.begin(), t.end());
    return bowl(t);
  };
  int monitored = 0;
  const Objective monitor = [&](std::span<const double> t) {
    ++monitored;
    return bowl(t);
  };
  const std::vector<double> theta0{1.0, -2.0, 0.5};
  const auto trace = spsa_run(recorder, theta0, cfg, monitor);
  CHECK(points.size() == 2 * (7 + 40));
  CHECK(trace.objective_evaluations == points.size());
  CHECK(monitored == 40);
  CHECK(trace.records.size() == 40);
  for (int k = 1; k <= 40; ++k) {
    const auto& plus = points[static_cast<std::size_t>(2 * (7 + k - 1))];
    const auto& minus = points[static_cast<std::size_t>(2 * (7 + k - 1) + 1)];
    const double ck = cfg.c / std::pow(k, cfg.gamma_exponent);
    for (std::size_t i = 0; i < plus.size(); ++i) {
      CHECK(std::abs(std::abs(plus[i] - minus[i]) / 2 - ck) < 1e-15);
    }
  }
  // calibration perturbs by exactly c around theta0
  for (int s = 0; s < 7; ++s) {
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(std::abs(points[2 * s][i] - theta0[i]) - cfg.c) < 1e-15);
  }
}

TEST_CASE("same seed gives identical traces") {
  SpsaConfig cfg;
  cfg.iterations = 100;
  cfg.seed = 1234;
  const auto theta0 = initial_parameters(5, 3);
  const auto a = spsa_run(bowl, theta0, cfg);
  const auto b = spsa_run(bowl, theta0, cfg);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t k = 0; k < a.records.size(); ++k) CHECK(a.records[k].energy == b.records[k].energy);
  CHECK(a.theta == b.theta);
  cfg.seed = 1235;
  CHECK(spsa_run(bowl, theta0, cfg).theta != a.theta);
}

TEST_CASE("wrapped angles stay in [0, 2 pi)") {
  SpsaConfig cfg;
  cfg.iterations = 200;
  const auto trace = spsa_run([](std::span<const double> t) { return std::cos(t[0]) + std::sin(3 * t[1]); },
                              initial_parameters(2, 0), cfg);
  for (double v : trace.theta) {
    CHECK(v >= 0);
    CHECK(v < 2 * kPi);
  }
}

TEST_CASE("median bowl objective decreases as the budget doubles") {
  double previous = std::numeric_limits<double>::infinity();
  for (int k : {125, 250, 500, 1000}) {
    std::vector<double> finals;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      SpsaConfig cfg;
      cfg.iterations = k;
      cfg.seed = seed;
      cfg.wrap_angles = false;
      finals.push_back(spsa_run(bowl, initial_parameters(12, seed), cfg).energy);
    }
    const double med = median(finals);
    CAPTURE(k);
    CHECK(med < previous);
    previous = med;
  }
}

TEST_CASE("invalid configurations and non-finite energies") {
  SpsaConfig cfg;
  cfg.c = 0;
  CHECK_THROWS_AS(validate(cfg), Error);
  cfg = SpsaConfig{};
  cfg.iterations = 0;
  CHECK_THROWS_AS(validate(cfg), Error);
  cfg = SpsaConfig{};
  cfg.gamma_exponent = -1;
  CHECK_THROWS_AS(validate(cfg), Error);
  cfg = SpsaConfig{};
  int calls = 0;
  const Objective blows_up = [&](std::span<const double> t) {
    return ++calls > 60 ? std::numeric_limits<double>::quiet_NaN() : t[0];
  };
  CHECK_THROWS_AS((void)spsa_run(blows_up, std::vector<double>{0.2}, cfg), Error);
  CHECK_THROWS_AS((void)spsa_run(bowl, std::vector<double>{}, cfg), Error);
}
