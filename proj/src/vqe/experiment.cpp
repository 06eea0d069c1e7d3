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
#include "vqe/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include <yaml-cpp/yaml.h>

#include "vqe/error.hpp"
#include "vqe/exact_solver.hpp"
#include "vqe/fermion.hpp"

namespace vqe {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Stream tag that keeps the initial-angle generator apart from SPSA's.
constexpr std::uint64_t kInitStream = 0x696e6974;  // "init"

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json yaml_node_to_json(const YAML::Node& node) {
  switch (node.Type()) {
    case YAML::NodeType::Null:
    case YAML::NodeType::Undefined:
      return nullptr;
    case YAML::NodeType::Sequence: {
      json out = json::array();
      for (const auto& item : node) out.push_back(yaml_node_to_json(item));
      return out;
    }
    case YAML::NodeType::Map: {
      json out = json::object();
      for (const auto& kv : node) out[kv.first.as<std::string>()] = yaml_node_to_json(kv.second);
      return out;
    }
    case YAML::NodeType::Scalar:
      break;
  }
  const auto& text = node.Scalar();
  if (node.Tag() == "!") return text;  // quoted
  long long i = 0;
  if (YAML::convert<long long>::decode(node, i)) return i;
  double d = 0;
  if (YAML::convert<double>::decode(node, d)) return d;
  bool b = false;
  if (YAML::convert<bool>::decode(node, b)) return b;
  return text;
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key) || j[key].is_null()) return fallback;
  try {
    return j[key].get<T>();
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("config key '") + key + "': " + e.what());
  }
}

struct Geometry {
  std::string label;
  PauliSum hamiltonian{1};
  int qubits = 0;
  std::vector<int> sector;
  double ground_energy = 0;
  std::size_t symmetry_count = 0;
  std::string error;
};

Geometry prepare_geometry(const fs::path& path, const RunConfig& cfg) {
  Geometry g;
  g.label = path.stem().string();
  try {
    const auto h = build_qubit_hamiltonian(load_integrals(path));
    g.qubits = h.num_qubits();
    if (cfg.taper) {
      const auto s = tapering::symmetries(h, cfg.symmetries);
      g.symmetry_count = s.size();
      auto scan = tapering::select_ground_sector(h, tapering::build_taper_triple(s));
      g.sector = scan.best_sector;
      g.ground_energy = scan.best_energy;
      g.hamiltonian = std::move(scan.tapered.hamiltonian);
    } else {
      g.ground_energy = ground_energy(h).ground_energy;
      g.hamiltonian = h;
    }
    if (g.hamiltonian.num_qubits() < 1) {
      fail(ErrorCode::Dimension, "tapering removed every qubit; nothing left to optimize");
    }
  } catch (const std::exception& e) {
    g.error = e.what();
  }
  return g;
}

RunResult run_one(const Geometry& g, std::uint64_t seed, const RunConfig& cfg) {
  RunResult r;
  r.geometry = g.label;
  r.seed = seed;
  r.qubits = g.qubits;
  r.sector = g.sector;
  r.ground_energy = g.ground_energy;
  if (!g.error.empty()) {
    r.error = g.error;
    return r;
  }
  try {
    const int m = g.hamiltonian.num_qubits();
    r.tapered_qubits = m;
    r.parameters = parameter_count(m, cfg.depth);
    const Objective energy = [&](std::span<const double> theta) {
      return expectation(prepare_trial_state(theta, cfg.depth, cfg.entangler, m), g.hamiltonian);
    };
    SpsaConfig spsa = cfg.spsa;
    spsa.iterations = cfg.iterations;
    spsa.seed = seed;
    const auto theta0 = initial_parameters(r.parameters, seed);
    const auto trace = spsa_run(energy, theta0, spsa, energy);
    r.spsa_a = trace.a;
    r.energies.reserve(trace.records.size());
    for (const auto& rec : trace.records) r.energies.push_back(rec.energy);
    r.ok = true;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

int pool_size(const RunConfig& cfg, std::size_t jobs) {
  int n = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("VQE_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, cap);
  }
  return std::clamp(n, 1, static_cast<int>(std::max<std::size_t>(jobs, 1)));
}

// Calls fn(i) for i in [0, n) on a pool; results are written by index, so the
// outcome does not depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) fn(i);
  };
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::Io, "cannot write " + path.string());
  out << content;
  if (!out) fail(ErrorCode::Io, "failed writing " + path.string());
}

std::vector<AggregatePoint> aggregate(const std::vector<RunResult>& runs, int iterations) {
  // Median over seeds per geometry, then geometric statistics across
  // geometries; geometries keep their first-seen (config) order.
  std::vector<std::string> order;
  std::vector<std::vector<const RunResult*>> groups;
  for (const auto& r : runs) {
    if (!r.ok) continue;
    auto it = std::find(order.begin(), order.end(), r.geometry);
    if (it == order.end()) {
      order.push_back(r.geometry);
      groups.emplace_back();
      it = order.end() - 1;
    }
    groups[static_cast<std::size_t>(it - order.begin())].push_back(&r);
  }
  std::vector<AggregatePoint> curve;
  if (groups.empty()) return curve;
  for (int k = 0; k < iterations; ++k) {
    std::vector<double> per_geometry;
    for (const auto& group : groups) {
      std::vector<double> deltas;
      for (const auto* r : group) deltas.push_back(r->energies[static_cast<std::size_t>(k)] - r->ground_energy);
      per_geometry.push_back(median(std::move(deltas)));
    }
    curve.push_back({k + 1, geometric_mean(per_geometry), geometric_std(per_geometry)});
  }
  return curve;
}

json build_report(const RunConfig& cfg, const std::vector<Geometry>& geometries,
                  const std::vector<RunResult>& runs) {
  json report;
  json conventions;
  conventions["qubit_order"] = "big-endian: qubit 1 is the most significant basis-index bit";
  conventions["rotation"] = "R_sigma(phi) = cos(phi/2) I - i sin(phi/2) sigma";
  conventions["ansatz"] =
      "vacuum -> layer 0 (X then Z per qubit) -> for each layer 1..d: entangler, then Z X Z per qubit";
  conventions["parameter_layout"] =
      "layer-major; layer 0: (theta_X, theta_Z) per qubit; layers 1..d: (theta_Z, theta_X, theta_Z) per qubit";
  json entanglers;
  for (auto k : kAllEntanglers) entanglers[std::string(entangler_name(k))] = std::string(entangler_convention(k));
  conventions["entanglers"] = entanglers;
  conventions["jordan_wigner"] = "a_j = sigma^+_j Z_{j+1} ... Z_m; odd modes spin up, even modes spin down";
  conventions["energy_record"] = "E(theta_{k+1}), the energy after the k-th update, one extra evaluation per iteration";
  conventions["spsa_perturbation"] = "two-sided, theta_k +/- c_k Delta_k, k starting at 1";
  conventions["spsa_calibration"] = "a from the mean slope at theta_0 over calibration_samples Rademacher draws";
  conventions["initial_parameters"] = "uniform in [0, 2 pi), mt19937_64 seeded by seed_seq{seed, stream tag}";
  conventions["rng"] = "std::mt19937_64 seeded with the run seed; Rademacher sign from the top output bit";
  conventions["angle_wrap"] = cfg.spsa.wrap_angles ? "[0, 2 pi) after each update" : "off";
  conventions["sector_selection"] = "exhaustive; ties within 1e-10 go to the lexicographically first sector, + before -";
  conventions["aggregation"] =
      "median over seeds per geometry, then geometric mean / population geometric std across geometries";
  conventions["delta_floor"] = kDeltaFloor;
  conventions["seeds_note"] = "default 10 seeds; summaries report medians over seeds";
  report["conventions"] = conventions;

  json config;
  json files = json::array();
  for (const auto& p : cfg.integrals) files.push_back(p.string());
  config["integrals"] = files;
  config["taper"] = cfg.taper;
  config["symmetries"] = std::string(tapering::symmetry_mode_name(cfg.symmetries));
  config["entangler"] = std::string(entangler_name(cfg.entangler));
  config["depth"] = cfg.depth;
  config["iterations"] = cfg.iterations;
  config["seeds"] = cfg.seeds;
  config["spsa"] = {{"a_exponent", cfg.spsa.a_exponent},
                    {"c", cfg.spsa.c},
                    {"gamma_exponent", cfg.spsa.gamma_exponent},
                    {"calibration_samples", cfg.spsa.calibration_samples}};
  report["config"] = config;

  json geoms = json::array();
  for (const auto& g : geometries) {
    json e;
    e["label"] = g.label;
    e["qubits"] = g.qubits;
    if (!g.error.empty()) {
      e["error"] = g.error;
    } else {
      const int m = g.hamiltonian.num_qubits();
      e["r"] = g.symmetry_count;
      e["tapered_qubits"] = m;
      e["sector"] = tapering::sector_string(g.sector);
      e["ground_energy"] = g.ground_energy;
      e["D"] = parameter_count(m, cfg.depth);
      std::vector<double> finals;
      for (const auto& r : runs) {
        if (r.ok && r.geometry == g.label) finals.push_back(r.final_delta());
      }
      if (!finals.empty()) e["median_final_delta"] = median(finals);
    }
    geoms.push_back(e);
  }
  report["geometries"] = geoms;

  json rs = json::array();
  std::size_t failed = 0;
  for (const auto& r : runs) {
    json e;
    e["geometry"] = r.geometry;
    e["seed"] = r.seed;
    e["ok"] = r.ok;
    if (r.ok) {
      e["final_energy"] = r.energies.back();
      e["final_delta"] = r.final_delta();
      e["spsa_a"] = r.spsa_a;
    } else {
      e["error"] = r.error;
      ++failed;
    }
    rs.push_back(e);
  }
  report["runs"] = rs;
  report["failed_runs"] = failed;
  return report;
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.integrals.empty()) fail(ErrorCode::InvalidArgument, "config needs at least one integrals file");
  if (cfg.depth < 0) fail(ErrorCode::InvalidArgument, "depth must be >= 0");
  if (cfg.iterations < 1) fail(ErrorCode::InvalidArgument, "iterations must be >= 1");
  if (cfg.seeds.empty()) fail(ErrorCode::InvalidArgument, "config needs at least one seed");
  std::vector<std::string> labels;
  for (const auto& p : cfg.integrals) labels.push_back(p.stem().string());
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    fail(ErrorCode::InvalidArgument, "integrals files must have distinct names");
  }
  auto seeds = cfg.seeds;
  std::sort(seeds.begin(), seeds.end());
  if (std::adjacent_find(seeds.begin(), seeds.end()) != seeds.end()) {
    fail(ErrorCode::InvalidArgument, "seeds must be distinct");
  }
  SpsaConfig spsa = cfg.spsa;
  spsa.iterations = cfg.iterations;
  validate(spsa);
}

RunConfig run_config_from_json(const json& j, const fs::path& base_dir) {
  if (!j.is_object()) fail(ErrorCode::Parse, "config must be a mapping");
  static const char* const kKeys[] = {"integrals", "taper",      "symmetries", "entangler", "depth",
                                      "iterations", "seeds",     "output_dir", "threads",   "spsa"};
  for (const auto& [key, value] : j.items()) {
    if (std::find_if(std::begin(kKeys), std::end(kKeys), [&](const char* k) { return key == k; }) ==
        std::end(kKeys)) {
      fail(ErrorCode::Parse, "unknown config key '" + key + "'");
    }
  }
  RunConfig cfg;
  if (!j.contains("integrals")) fail(ErrorCode::Parse, "config is missing 'integrals'");
  const json& files = j["integrals"];
  auto add_file = [&](const json& f) {
    if (!f.is_string()) fail(ErrorCode::Parse, "integrals entries must be paths");
    fs::path p = f.get<std::string>();
    cfg.integrals.push_back(p.is_relative() && !base_dir.empty() ? base_dir / p : p);
  };
  if (files.is_array()) {
    for (const auto& f : files) add_file(f);
  } else {
    add_file(files);
  }
  cfg.taper = get_or(j, "taper", cfg.taper);
  if (j.contains("symmetries")) cfg.symmetries = tapering::parse_symmetry_mode(get_or<std::string>(j, "symmetries", ""));
  if (j.contains("entangler")) cfg.entangler = parse_entangler(get_or<std::string>(j, "entangler", ""));
  cfg.depth = get_or(j, "depth", cfg.depth);
  cfg.iterations = get_or(j, "iterations", cfg.iterations);
  // YAML integers arrive signed; accept any non-negative integer.
  const auto non_negative = [](const json& v) { return v.is_number_integer() && v.get<long long>() >= 0; };
  if (j.contains("seeds")) {
    const json& s = j["seeds"];
    cfg.seeds.clear();
    if (s.is_array()) {
      for (const auto& v : s) {
        if (!non_negative(v)) fail(ErrorCode::Parse, "seeds must be non-negative integers");
        cfg.seeds.push_back(v.get<std::uint64_t>());
      }
    } else if (non_negative(s)) {
      // A bare count n means seeds 0..n-1.
      for (std::uint64_t i = 0; i < s.get<std::uint64_t>(); ++i) cfg.seeds.push_back(i);
    } else {
      fail(ErrorCode::Parse, "seeds must be a list or a count");
    }
  }
  if (j.contains("output_dir")) cfg.output_dir = get_or<std::string>(j, "output_dir", "");
  cfg.threads = get_or(j, "threads", cfg.threads);
  if (j.contains("spsa")) {
    const json& s = j["spsa"];
    if (!s.is_object()) fail(ErrorCode::Parse, "spsa must be a mapping");
    for (const auto& [key, value] : s.items()) {
      if (key != "a_exponent" && key != "c" && key != "gamma_exponent" && key != "calibration_samples") {
        fail(ErrorCode::Parse, "unknown spsa key '" + key + "'");
      }
    }
    cfg.spsa.a_exponent = get_or(s, "a_exponent", cfg.spsa.a_exponent);
    cfg.spsa.c = get_or(s, "c", cfg.spsa.c);
    cfg.spsa.gamma_exponent = get_or(s, "gamma_exponent", cfg.spsa.gamma_exponent);
    cfg.spsa.calibration_samples = get_or(s, "calibration_samples", cfg.spsa.calibration_samples);
  }
  validate(cfg);
  return cfg;
}

json yaml_to_json(const std::string& yaml_text) {
  try {
    return yaml_node_to_json(YAML::Load(yaml_text));
  } catch (const YAML::Exception& e) {
    fail(ErrorCode::Parse, std::string("YAML: ") + e.what());
  }
}

RunConfig load_run_config(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  json j;
  if (path.extension() == ".json") {
    try {
      j = json::parse(buf.str());
    } catch (const json::exception& e) {
      fail(ErrorCode::Parse, path.string() + ": " + e.what());
    }
  } else {
    j = yaml_to_json(buf.str());
  }
  return run_config_from_json(j, path.parent_path());
}

std::size_t ExperimentResult::failures() const {
  return static_cast<std::size_t>(std::count_if(runs.begin(), runs.end(), [](const auto& r) { return !r.ok; }));
}

double geometric_mean(const std::vector<double>& values) {
  if (values.empty()) fail(ErrorCode::InvalidArgument, "geometric mean of an empty list");
  double acc = 0;
  for (double v : values) acc += std::log(std::max(v, kDeltaFloor));
  return std::exp(acc / static_cast<double>(values.size()));
}

double geometric_std(const std::vector<double>& values) {
  if (values.empty()) fail(ErrorCode::InvalidArgument, "geometric std of an empty list");
  const double mu = std::log(geometric_mean(values));
  double acc = 0;
  for (double v : values) {
    const double d = std::log(std::max(v, kDeltaFloor)) - mu;
    acc += d * d;
  }
  return std::exp(std::sqrt(acc / static_cast<double>(values.size())));
}

double median(std::vector<double> values) {
  if (values.empty()) fail(ErrorCode::InvalidArgument, "median of an empty list");
  std::sort(values.begin(), values.end());
  const auto n = values.size();
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::vector<double> initial_parameters(std::size_t dim, std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(kInitStream)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::vector<double> out(dim);
  for (auto& v : out) v = angle(rng);
  return out;
}

std::string trace_csv(const RunResult& run) {
  std::string out = "iter,energy,energy_minus_ground\n";
  for (std::size_t k = 0; k < run.energies.size(); ++k) {
    out += std::to_string(k + 1) + ',' + format_double(run.energies[k]) + ',' +
           format_double(run.energies[k] - run.ground_energy) + '\n';
  }
  return out;
}

std::string aggregate_csv(const std::vector<AggregatePoint>& curve) {
  std::string out = "iter,geo_mean,geo_std\n";
  for (const auto& p : curve) {
    out += std::to_string(p.iteration) + ',' + format_double(p.geo_mean) + ',' + format_double(p.geo_std) + '\n';
  }
  return out;
}

ExperimentResult run_experiment(const RunConfig& cfg, bool write_outputs) {
  validate(cfg);
  std::vector<Geometry> geometries(cfg.integrals.size());
  parallel_for(geometries.size(), pool_size(cfg, geometries.size()),
               [&](std::size_t i) { geometries[i] = prepare_geometry(cfg.integrals[i], cfg); });

  ExperimentResult result;
  const std::size_t n_seeds = cfg.seeds.size();
  result.runs.resize(geometries.size() * n_seeds);
  parallel_for(result.runs.size(), pool_size(cfg, result.runs.size()), [&](std::size_t i) {
    result.runs[i] = run_one(geometries[i / n_seeds], cfg.seeds[i % n_seeds], cfg);
  });

  result.aggregate = aggregate(result.runs, cfg.iterations);
  result.report = build_report(cfg, geometries, result.runs);

  if (write_outputs) {
    std::error_code ec;
    fs::create_directories(cfg.output_dir, ec);
    if (ec) fail(ErrorCode::Io, "cannot create " + cfg.output_dir.string() + ": " + ec.message());
    for (const auto& r : result.runs) {
      if (r.ok) write_file(cfg.output_dir / ("trace_" + r.geometry + "_" + std::to_string(r.seed) + ".csv"), trace_csv(r));
    }
    write_file(cfg.output_dir / "aggregate.csv", aggregate_csv(result.aggregate));
    write_file(cfg.output_dir / "report.json", result.report.dump(2) + "\n");
  }
  return result;
}

}  // namespace vqe
