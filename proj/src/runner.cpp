// Copyright 2026 The Partisel Authors.
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

#include "partisel/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "partisel/objectives/aoptimal.hpp"
#include "partisel/objectives/coverage.hpp"
#include "partisel/objectives/dpp.hpp"
#include "partisel/objectives/libsvm.hpp"
#include "partisel/objectives/modular.hpp"
#include "partisel/rng.hpp"
#include "partisel/tracking.hpp"

namespace partisel {

namespace fs = std::filesystem;

namespace {

constexpr const char* kResultsHeader =
    "solver,instance,seed,obj,queries,wall_time,config_hash";

std::string join(const std::string& path, const std::string& key) {
  return path + "/" + key;
}

const Json& member(const Json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) throw ConfigError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(join(path, key), "missing required member");
  return *it;
}

template <typename T>
T as(const Json& value, const std::string& path) {
  try {
    if constexpr (std::is_integral_v<T>) {
      if (!value.is_number_integer()) throw ConfigError(path, "expected an integer");
      if constexpr (std::is_unsigned_v<T>) {
        if (value.is_number_integer() && !value.is_number_unsigned() &&
            value.get<std::int64_t>() < 0) {
          throw ConfigError(path, "expected a nonnegative integer");
        }
      }
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!value.is_number()) throw ConfigError(path, "expected a number");
    } else if constexpr (std::is_same_v<T, bool>) {
      if (!value.is_boolean()) throw ConfigError(path, "expected a boolean");
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!value.is_string()) throw ConfigError(path, "expected a string");
    }
    return value.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path, e.what());
  }
}

template <typename T>
T required(const Json& obj, const std::string& path, const char* key) {
  return as<T>(member(obj, path, key), join(path, key));
}

template <typename T>
std::optional<T> optional_member(const Json& obj, const std::string& path,
                                 const char* key) {
  if (!obj.is_object()) throw ConfigError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return as<T>(*it, join(path, key));
}

template <typename T>
T value_or(const Json& obj, const std::string& path, const char* key, T fallback) {
  return optional_member<T>(obj, path, key).value_or(fallback);
}

void allow_keys(const Json& obj, const std::string& path,
                std::initializer_list<const char*> keys) {
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw ConfigError(join(path, it.key()), "unknown member");
    }
  }
}

void check_schema(const Json& config) {
  if (!config.is_object()) throw ConfigError("", "config must be a JSON object");
  const int schema = required<int>(config, "", "schema");
  if (schema != kConfigSchema) {
    throw ConfigError("/schema", "unsupported schema " + std::to_string(schema) +
                                     " (expected " + std::to_string(kConfigSchema) + ")");
  }
}

Json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string(), "cannot open config file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string(), e.what());
  }
}

fs::path data_file(const Json& objective, const std::string& path,
                   const fs::path& base_dir) {
  fs::path file = required<std::string>(objective, path, "data");
  if (file.is_relative() && !base_dir.empty()) file = base_dir / file;
  if (!fs::exists(file)) {
    throw ConfigError(join(path, "data"), "data file not found: " + file.string());
  }
  return file;
}

int positive(int value, const std::string& path) {
  if (value < 1) throw ConfigError(path, "must be >= 1");
  return value;
}

Partition partition_from(const Json& spec, const std::string& path) {
  allow_keys(spec, path, {"communities", "budgets"});
  const Json& comms = member(spec, path, "communities");
  const Json& budgets = member(spec, path, "budgets");
  if (!comms.is_array() || !budgets.is_array() || comms.size() != budgets.size()) {
    throw ConfigError(path, "communities and budgets must be arrays of equal length");
  }
  std::vector<std::vector<Index>> communities;
  std::vector<int> b;
  for (std::size_t k = 0; k < comms.size(); ++k) {
    const std::string cpath = join(join(path, "communities"), std::to_string(k));
    if (!comms[k].is_array()) throw ConfigError(cpath, "expected an array of ids");
    std::vector<Index> ids;
    for (std::size_t m = 0; m < comms[k].size(); ++m) {
      ids.push_back(as<Index>(comms[k][m], join(cpath, std::to_string(m))));
    }
    communities.push_back(std::move(ids));
    b.push_back(as<int>(budgets[k], join(join(path, "budgets"), std::to_string(k))));
  }
  try {
    return Partition(std::move(communities), std::move(b));
  } catch (const InputError& e) {
    throw ConfigError(path, e.what());
  }
}

// Correlated Gaussian rows standing in for a regression dataset.
Eigen::MatrixXd synthetic_regression(int rows, int dims, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd g(rows, dims);
  Eigen::MatrixXd mix(dims, dims);
  for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = normal(rng);
  for (Eigen::Index i = 0; i < mix.size(); ++i) mix.data()[i] = normal(rng);
  return g * mix;
}

SolverSpec solver_from(const Json& spec, const std::string& path) {
  SolverSpec out;
  if (spec.is_string()) {
    out.name = spec.get<std::string>();
  } else if (spec.is_object()) {
    out.name = required<std::string>(spec, path, "name");
    out.params = spec;
    out.params.erase("name");
  } else {
    throw ConfigError(path, "expected a solver name or object");
  }
  const auto& names = solver_names();
  if (std::find(names.begin(), names.end(), out.name) == names.end()) {
    throw ConfigError(path, "unknown solver \"" + out.name + "\"");
  }
  return out;
}

// Checks member names and scalar types so errors point at the config entry.
void check_solver_params(const SolverSpec& spec, const std::string& path) {
  const Json& p = spec.params;
  if (spec.name == "multinoulli_scg") {
    allow_keys(p, path, {"T", "L", "retries"});
    optional_member<int>(p, path, "T");
    optional_member<int>(p, path, "L");
    optional_member<std::int64_t>(p, path, "retries");
  } else if (spec.name == "multinoulli_sga" || spec.name == "multinoulli_asga") {
    allow_keys(p, path, {"T", "L", "eta", "auxiliary", "initial"});
    optional_member<int>(p, path, "T");
    optional_member<int>(p, path, "L");
    optional_member<double>(p, path, "eta");
    optional_member<double>(p, path, "auxiliary");
  } else {
    allow_keys(p, path, {});
  }
}

Json subset_json(const Subset& s) {
  Json out = Json::array();
  for (Index v : s) out.push_back(v);
  return out;
}

Json run_json(const ResultRow& row, const SolveResult& result) {
  Json records = Json::array();
  for (const auto& r : result.trace.records) {
    Json rec = {{"t", r.t}, {"subset", subset_json(r.subset)}, {"queries", r.queries}};
    if (r.value) rec["value"] = *r.value;
    records.push_back(std::move(rec));
  }
  return {{"solver", row.solver},
          {"instance", row.instance},
          {"seed", row.seed},
          {"value", result.value},
          {"subset", subset_json(result.subset)},
          {"queries", result.trace.queries},
          {"records", std::move(records)}};
}

ResultRow timed_run(const SolverSpec& spec, const Problem& problem,
                    std::uint64_t seed, const std::string& hash,
                    SolveResult* result_out) {
  const auto start = std::chrono::steady_clock::now();
  SolveResult result = run_solver(spec, problem, seed);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  ResultRow row{spec.name, problem.instance, seed, result.value,
                queries_log10(result.trace.queries), elapsed.count(), hash};
  if (result_out) *result_out = std::move(result);
  return row;
}

fs::path resolve_out(const Json& config, std::optional<fs::path> out) {
  if (out) return *out;
  if (auto o = optional_member<std::string>(config, "", "out")) return *o;
  return ".";
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream os(path);
  if (!os) throw ConfigError(path.string(), "cannot open output file");
  return os;
}

std::string format_fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

}  // namespace

double queries_log10(std::int64_t count) {
  if (count <= 1) return 0.0;
  return std::round(std::log10(static_cast<double>(count)) * 100.0) / 100.0;
}

std::string config_hash(const Json& value) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : value.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

void write_results_csv(std::ostream& os, const std::vector<ResultRow>& rows) {
  os << kResultsHeader << '\n';
  for (const auto& r : rows) {
    os << r.solver << ',' << r.instance << ',' << r.seed << ',' << format_fixed(r.obj, 6)
       << ',' << format_fixed(r.queries, 2) << ',' << format_fixed(r.wall_time, 3) << ','
       << r.config_hash << '\n';
  }
}

std::vector<ResultRow> read_results_csv(std::istream& is) {
  std::string line;
  int lineno = 1;
  if (!std::getline(is, line) || line != kResultsHeader) {
    throw ParseError("expected header \"" + std::string(kResultsHeader) + "\"", lineno);
  }
  std::vector<ResultRow> rows;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 7) {
      throw ParseError("expected 7 fields, got " + std::to_string(cells.size()), lineno);
    }
    try {
      std::size_t used = 0;
      ResultRow r;
      r.solver = cells[0];
      r.instance = cells[1];
      r.seed = std::stoull(cells[2], &used);
      if (used != cells[2].size()) throw std::invalid_argument("seed");
      r.obj = std::stod(cells[3]);
      r.queries = std::stod(cells[4]);
      r.wall_time = std::stod(cells[5]);
      r.config_hash = cells[6];
      rows.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw ParseError("malformed numeric field", lineno);
    }
  }
  return rows;
}

Problem build_problem(const Json& config, const fs::path& base_dir) {
  const Json& objective = member(config, "", "objective");
  const std::string path = "/objective";
  const std::string kind = required<std::string>(objective, path, "kind");
  std::optional<Partition> default_partition;
  std::optional<SetFunctionHandle> handle;
  std::string instance;

  if (kind == "coverage") {
    allow_keys(objective, path, {"kind", "n", "k", "epsilon"});
    const int n = required<int>(objective, path, "n");
    const int k = required<int>(objective, path, "k");
    const double eps = value_or<double>(objective, path, "epsilon", 0.01);
    try {
      CoverageProblem p = coverage_build(n, k, eps);
      handle.emplace(std::move(p.handle));
      default_partition.emplace(std::move(p.partition));
    } catch (const InputError& e) {
      throw ConfigError(path, e.what());
    }
    instance = "coverage_n" + std::to_string(n) + "_k" + std::to_string(k);
  } else if (kind == "modular") {
    allow_keys(objective, path, {"kind", "weights"});
    const Json& w = member(objective, path, "weights");
    if (!w.is_array() || w.empty()) {
      throw ConfigError(join(path, "weights"), "expected a nonempty array");
    }
    std::vector<double> weights;
    for (std::size_t i = 0; i < w.size(); ++i) {
      weights.push_back(as<double>(w[i], join(join(path, "weights"), std::to_string(i))));
    }
    handle.emplace(modular_build(std::move(weights)));
    instance = "modular_n" + std::to_string(w.size());
  } else if (kind == "dpp") {
    allow_keys(objective, path, {"kind", "data", "frames", "dims", "scenes",
                                 "group_size", "budget", "bandwidth", "instance_seed"});
    const auto seed = value_or<std::uint64_t>(objective, path, "instance_seed", 0);
    Eigen::MatrixXd features;
    if (objective.contains("data")) {
      const fs::path file = data_file(objective, path, base_dir);
      features = read_feature_csv(file.string());
      instance = "dpp_" + file.stem().string();
    } else {
      Rng rng(substream_seed(seed, 2));
      features = synthetic_frames(
          positive(value_or<int>(objective, path, "frames", 200), join(path, "frames")),
          positive(value_or<int>(objective, path, "dims", 32), join(path, "dims")),
          positive(value_or<int>(objective, path, "scenes", 8), join(path, "scenes")), rng);
      instance = "dpp_synthetic";
    }
    handle.emplace(dpp_build(features, optional_member<double>(objective, path, "bandwidth")));
    default_partition.emplace(consecutive_groups(
        handle->ground_size(),
        positive(value_or<int>(objective, path, "group_size", 25), join(path, "group_size")),
        positive(value_or<int>(objective, path, "budget", 1), join(path, "budget"))));
  } else if (kind == "aoptimal") {
    allow_keys(objective, path, {"kind", "data", "rows", "dims", "groups", "budget",
                                 "instance_seed"});
    const auto seed = value_or<std::uint64_t>(objective, path, "instance_seed", 0);
    if (objective.contains("data")) {
      const fs::path file = data_file(objective, path, base_dir);
      handle.emplace(aoptimal_build(libsvm_parse(file.string()).features, seed));
      instance = "aoptimal_" + file.stem().string();
    } else {
      Rng rng(substream_seed(seed, 2));
      const Eigen::MatrixXd samples = synthetic_regression(
          positive(value_or<int>(objective, path, "rows", 200), join(path, "rows")),
          positive(value_or<int>(objective, path, "dims", 10), join(path, "dims")), rng);
      handle.emplace(aoptimal_build(samples, seed));
      instance = "aoptimal_synthetic";
    }
    const int groups =
        positive(value_or<int>(objective, path, "groups", 10), join(path, "groups"));
    if (groups > handle->ground_size()) {
      throw ConfigError(join(path, "groups"), "more groups than data points");
    }
    Rng rng(substream_seed(seed, 1));
    default_partition.emplace(random_groups(
        handle->ground_size(), groups,
        positive(value_or<int>(objective, path, "budget", 1), join(path, "budget")), rng));
  } else {
    throw ConfigError(join(path, "kind"), "unknown objective kind \"" + kind + "\"");
  }

  std::optional<Partition> partition;
  if (config.contains("partition")) {
    partition.emplace(partition_from(config["partition"], "/partition"));
  } else if (default_partition) {
    partition = std::move(default_partition);
  } else {
    throw ConfigError("/partition", "required for objective kind \"" + kind + "\"");
  }
  if (partition->ground_size() != handle->ground_size()) {
    throw ConfigError("/partition",
                      "covers " + std::to_string(partition->ground_size()) +
                          " elements but the objective has " +
                          std::to_string(handle->ground_size()));
  }
  return Problem{std::move(instance), std::move(*handle), std::move(*partition)};
}

const std::vector<std::string>& solver_names() {
  static const std::vector<std::string> names = {
      "standard_greedy", "residual_random_greedy", "multinoulli_scg",
      "multinoulli_sga", "multinoulli_asga"};
  return names;
}

SolveResult run_solver(const SolverSpec& spec, const Problem& problem,
                       std::uint64_t seed) {
  const SetFunctionHandle handle = problem.handle.fresh();
  const Json& p = spec.params;
  const std::string path = "/solver/" + spec.name;
  check_solver_params(spec, path);
  if (spec.name == "standard_greedy") return standard_greedy(handle, problem.partition);
  if (spec.name == "residual_random_greedy") {
    Rng rng(seed);
    return residual_random_greedy(handle, problem.partition, rng);
  }
  if (spec.name == "multinoulli_scg") {
    ScgConfig c;
    c.T = value_or<int>(p, path, "T", c.T);
    c.L = optional_member<int>(p, path, "L");
    c.retries = optional_member<std::int64_t>(p, path, "retries");
    c.seed = seed;
    return multinoulli_scg(handle, problem.partition, c);
  }
  if (spec.name == "multinoulli_sga" || spec.name == "multinoulli_asga") {
    SgaConfig c;
    c.T = value_or<int>(p, path, "T", c.T);
    c.L = value_or<int>(p, path, "L", c.L);
    c.eta = optional_member<double>(p, path, "eta");
    c.auxiliary = optional_member<double>(p, path, "auxiliary");
    if (spec.name == "multinoulli_asga" && !c.auxiliary) c.auxiliary = 1.0;
    if (p.contains("initial")) {
      const Json& init = p["initial"];
      if (!init.is_array() ||
          static_cast<Index>(init.size()) != problem.partition.ground_size()) {
        throw ConfigError(join(path, "initial"), "expected one number per element");
      }
      Eigen::VectorXd x(init.size());
      for (std::size_t i = 0; i < init.size(); ++i) {
        x[static_cast<Eigen::Index>(i)] =
            as<double>(init[i], join(join(path, "initial"), std::to_string(i)));
      }
      c.initial = std::move(x);
    }
    c.seed = seed;
    return multinoulli_sga(handle, problem.partition, c);
  }
  throw ConfigError(path, "unknown solver");
}

SolveOutput run_solve(const Json& config, std::optional<std::uint64_t> seed,
                      const fs::path& base_dir) {
  check_schema(config);
  allow_keys(config, "", {"schema", "objective", "partition", "solvers", "seeds", "out"});
  Problem problem = build_problem(config, base_dir);

  const Json& solvers = member(config, "", "solvers");
  if (!solvers.is_array() || solvers.empty()) {
    throw ConfigError("/solvers", "expected a nonempty array");
  }
  std::vector<SolverSpec> specs;
  for (std::size_t i = 0; i < solvers.size(); ++i) {
    const std::string path = "/solvers/" + std::to_string(i);
    specs.push_back(solver_from(solvers[i], path));
    check_solver_params(specs.back(), path);
  }

  std::vector<std::uint64_t> seeds;
  if (seed) {
    seeds.push_back(*seed);
  } else if (config.contains("seeds")) {
    const Json& s = config["seeds"];
    if (!s.is_array() || s.empty()) throw ConfigError("/seeds", "expected a nonempty array");
    for (std::size_t i = 0; i < s.size(); ++i) {
      seeds.push_back(as<std::uint64_t>(s[i], "/seeds/" + std::to_string(i)));
    }
  } else {
    seeds.push_back(0);
  }

  SolveOutput out;
  out.trace = {{"schema", kConfigSchema}, {"runs", Json::array()}};
  for (const auto& spec : specs) {
    Json key = {{"objective", config["objective"]},
                {"solver", {{"name", spec.name}, {"params", spec.params}}}};
    if (config.contains("partition")) key["partition"] = config["partition"];
    const std::string hash = config_hash(key);
    for (std::uint64_t s : seeds) {
      SolveResult result;
      ResultRow row = timed_run(spec, problem, s, hash, &result);
      out.trace["runs"].push_back(run_json(row, result));
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

void cmd_solve(const fs::path& config_path, std::optional<std::uint64_t> seed,
               std::optional<fs::path> out) {
  const Json config = read_json(config_path);
  SolveOutput result = run_solve(config, seed, config_path.parent_path());
  const fs::path dir = resolve_out(config, std::move(out));
  fs::create_directories(dir);
  auto csv = open_out(dir / "results.csv");
  write_results_csv(csv, result.rows);
  auto json = open_out(dir / "trace.json");
  json << result.trace.dump(1) << '\n';
}

void cmd_online(const fs::path& config_path, std::optional<fs::path> out) {
  const Json config = read_json(config_path);
  check_schema(config);
  allow_keys(config, "", {"schema", "scenario", "policies", "include_random", "osga",
                          "oscg", "seeds", "out"});

  Scenario scenario;
  const Json& sc = member(config, "", "scenario");
  const std::string sp = "/scenario";
  allow_keys(sc, sp, {"agents", "targets", "mix", "T", "horizon", "speeds",
                      "spawn_radius", "trigger_radius", "evasion_speed", "mode"});
  scenario.num_agents = value_or<int>(sc, sp, "agents", scenario.num_agents);
  scenario.num_targets = value_or<int>(sc, sp, "targets", scenario.num_targets);
  if (auto mix = optional_member<std::string>(sc, sp, "mix")) {
    try {
      scenario.mix = parse_mix(*mix);
    } catch (const InputError& e) {
      throw ConfigError(join(sp, "mix"), e.what());
    }
  }
  scenario.T = value_or<int>(sc, sp, "T", scenario.T);
  scenario.horizon = value_or<double>(sc, sp, "horizon", scenario.horizon);
  if (sc.contains("speeds")) {
    const Json& s = sc["speeds"];
    if (!s.is_array()) throw ConfigError(join(sp, "speeds"), "expected an array");
    for (std::size_t i = 0; i < s.size(); ++i) {
      scenario.speeds.push_back(as<double>(s[i], join(join(sp, "speeds"), std::to_string(i))));
    }
  }
  scenario.spawn_radius = value_or<double>(sc, sp, "spawn_radius", scenario.spawn_radius);
  scenario.trigger_radius =
      value_or<double>(sc, sp, "trigger_radius", scenario.trigger_radius);
  scenario.evasion_speed = value_or<double>(sc, sp, "evasion_speed", scenario.evasion_speed);
  const std::string mode = value_or<std::string>(sc, sp, "mode", "facility_location");
  if (mode == "facility_location") {
    scenario.mode = TrackingMode::FacilityLocation;
  } else if (mode == "ekf") {
    scenario.mode = TrackingMode::EkfAOptimal;
  } else {
    throw ConfigError(join(sp, "mode"), "expected \"facility_location\" or \"ekf\"");
  }
  try {
    scenario.validate();
  } catch (const InputError& e) {
    throw ConfigError(sp, e.what());
  }

  PolicyConfig pc;
  if (config.contains("osga")) {
    const Json& o = config["osga"];
    allow_keys(o, "/osga", {"eta", "adaptive_eta", "L", "auxiliary"});
    pc.osga_eta = optional_member<double>(o, "/osga", "eta");
    pc.osga_adaptive_eta = value_or<bool>(o, "/osga", "adaptive_eta", pc.osga_adaptive_eta);
    pc.osga_L = value_or<int>(o, "/osga", "L", pc.osga_L);
    if (o.contains("auxiliary")) pc.osga_auxiliary = optional_member<double>(o, "/osga", "auxiliary");
  }
  if (config.contains("oscg")) {
    const Json& o = config["oscg"];
    allow_keys(o, "/oscg", {"Q", "L", "eta"});
    pc.oscg_Q = optional_member<int>(o, "/oscg", "Q");
    pc.oscg_L = optional_member<int>(o, "/oscg", "L");
    pc.oscg_eta = optional_member<double>(o, "/oscg", "eta");
  }

  std::vector<Policy> policies;
  if (config.contains("policies")) {
    const Json& p = config["policies"];
    if (!p.is_array()) throw ConfigError("/policies", "expected an array");
    for (std::size_t i = 0; i < p.size(); ++i) {
      const std::string path = "/policies/" + std::to_string(i);
      try {
        policies.push_back(parse_policy(as<std::string>(p[i], path)));
      } catch (const InputError& e) {
        throw ConfigError(path, e.what());
      }
    }
  } else {
    policies = {Policy::OSGA, Policy::OSCG};
  }
  if (value_or<bool>(config, "", "include_random", true) &&
      std::find(policies.begin(), policies.end(), Policy::RANDOM) == policies.end()) {
    policies.push_back(Policy::RANDOM);
  }

  std::vector<std::uint64_t> seeds = {0};
  if (config.contains("seeds")) {
    seeds.clear();
    const Json& s = config["seeds"];
    if (!s.is_array() || s.empty()) throw ConfigError("/seeds", "expected a nonempty array");
    for (std::size_t i = 0; i < s.size(); ++i) {
      seeds.push_back(as<std::uint64_t>(s[i], "/seeds/" + std::to_string(i)));
    }
  }

  const fs::path dir = resolve_out(config, std::move(out));
  fs::create_directories(dir);
  Json summary = {{"schema", kConfigSchema},
                  {"config_hash", config_hash(config)},
                  {"runs", Json::array()}};
  std::map<std::string, std::vector<double>> finals;
  for (Policy policy : policies) {
    for (std::uint64_t seed : seeds) {
      Scenario s = scenario;
      s.seed = seed;
      const EpisodeTrace trace = run_episode(s, policy, pc);
      const std::string name = policy_name(policy);
      auto csv = open_out(dir / (name + "_seed" + std::to_string(seed) + ".csv"));
      csv << "t,reward,running_avg,queries_log10\n";
      for (const auto& row : trace.rows) {
        csv << row.t << ',' << format_fixed(row.reward, 8) << ','
            << format_fixed(row.running_average, 8) << ','
            << format_fixed(queries_log10(row.queries), 2) << '\n';
      }
      const std::int64_t queries = trace.rows.empty() ? 0 : trace.rows.back().queries;
      summary["runs"].push_back({{"policy", name},
                                 {"seed", seed},
                                 {"final_running_average", trace.final_running_average()},
                                 {"queries", queries}});
      finals[name].push_back(trace.final_running_average());
    }
  }
  Json means = Json::object();
  for (const auto& [name, values] : finals) {
    double sum = 0.0;
    for (double v : values) sum += v;
    means[name] = sum / static_cast<double>(values.size());
  }
  summary["mean_final_running_average"] = std::move(means);
  auto json = open_out(dir / "summary.json");
  json << summary.dump(1) << '\n';
}

std::vector<ResultRow> run_bench(const std::string& suite, const BenchOptions& options) {
  std::vector<Json> objectives;
  if (suite == "coverage") {
    if (options.data) throw ConfigError("--data", "the coverage suite takes no data file");
    for (auto [n, k] : {std::pair{20, 5}, {30, 6}, {40, 8}, {50, 10}}) {
      objectives.push_back({{"kind", "coverage"}, {"n", n}, {"k", k}, {"epsilon", 0.01}});
    }
  } else if (suite == "aoptimal" || suite == "dpp") {
    Json obj = {{"kind", suite}};
    if (options.data) obj["data"] = fs::absolute(*options.data).string();
    objectives.push_back(std::move(obj));
  } else {
    throw ConfigError("suite", "unknown suite \"" + suite +
                                   "\" (expected coverage, aoptimal or dpp)");
  }

  std::vector<SolverSpec> specs;
  if (options.quick) {
    specs = {{"standard_greedy", Json::object()},
             {"residual_random_greedy", Json::object()},
             {"multinoulli_scg", {{"T", 10}, {"L", 5}, {"retries", 100}}},
             {"multinoulli_sga", {{"T", 10}}},
             {"multinoulli_asga", {{"T", 10}}}};
  } else {
    for (const auto& name : solver_names()) specs.push_back({name, Json::object()});
  }
  const int num_seeds = options.seeds.value_or(options.quick ? 1 : 5);
  if (num_seeds < 1) throw ConfigError("--seeds", "must be >= 1");

  std::vector<ResultRow> rows;
  for (const Json& objective : objectives) {
    const Json config = {{"schema", kConfigSchema}, {"objective", objective}};
    const Problem problem = build_problem(config);
    for (const auto& spec : specs) {
      const std::string hash = config_hash(
          {{"objective", objective},
           {"solver", {{"name", spec.name}, {"params", spec.params}}}});
      for (int s = 0; s < num_seeds; ++s) {
        rows.push_back(timed_run(spec, problem, static_cast<std::uint64_t>(s), hash, nullptr));
        std::fprintf(stderr, "%s %s seed %d obj %.4f\n", problem.instance.c_str(),
                     spec.name.c_str(), s, rows.back().obj);
      }
    }
  }
  return rows;
}

void cmd_bench(const std::string& suite, const BenchOptions& options) {
  const std::vector<ResultRow> rows = run_bench(suite, options);
  fs::create_directories(options.out);
  auto runs = open_out(options.out / (suite + "_runs.csv"));
  write_results_csv(runs, rows);

  struct Cell {
    std::vector<double> obj;
    std::vector<double> queries;
  };
  std::vector<std::pair<std::string, std::string>> order;
  std::map<std::pair<std::string, std::string>, Cell> cells;
  for (const auto& r : rows) {
    const auto key = std::make_pair(r.instance, r.solver);
    if (!cells.count(key)) order.push_back(key);
    cells[key].obj.push_back(r.obj);
    cells[key].queries.push_back(r.queries);
  }
  auto table = open_out(options.out / (suite + "_table.csv"));
  table << "instance,solver,runs,obj_mean,obj_std,queries_mean\n";
  for (const auto& key : order) {
    const Cell& c = cells[key];
    const double m = static_cast<double>(c.obj.size());
    double mean = 0.0, q = 0.0, var = 0.0;
    for (std::size_t i = 0; i < c.obj.size(); ++i) {
      mean += c.obj[i];
      q += c.queries[i];
    }
    mean /= m;
    q /= m;
    for (double v : c.obj) var += (v - mean) * (v - mean);
    const double sd = c.obj.size() > 1 ? std::sqrt(var / (m - 1.0)) : 0.0;
    table << key.first << ',' << key.second << ',' << c.obj.size() << ','
          << format_fixed(mean, 4) << ',' << format_fixed(sd, 4) << ','
          << format_fixed(q, 2) << '\n';
  }
}

}  // namespace partisel
