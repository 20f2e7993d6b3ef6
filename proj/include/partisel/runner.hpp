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

#ifndef PARTISEL_RUNNER_HPP_
#define PARTISEL_RUNNER_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "partisel/errors.hpp"
#include "partisel/offline.hpp"
#include "partisel/partition.hpp"
#include "partisel/set_function.hpp"

namespace partisel {

using Json = nlohmann::json;

inline constexpr int kConfigSchema = 1;

// Bad or inconsistent configuration. `path` is a JSON pointer into the
// config ("/solvers/1/T") or the offending file name.
class ConfigError : public InputError {
 public:
  ConfigError(const std::string& path, const std::string& what)
      : InputError(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct ResultRow {
  std::string solver;
  std::string instance;
  std::uint64_t seed = 0;
  double obj = 0.0;
  double queries = 0.0;  // log10 of the evaluation count, 2 decimals
  double wall_time = 0.0;  // seconds
  std::string config_hash;
};

// log10(count) rounded to 2 decimals; 0 for count <= 1.
double queries_log10(std::int64_t count);

// FNV-1a 64 over the compact dump of `value`, as 16 hex digits. Object
// keys dump in sorted order, so equal configs hash equally.
std::string config_hash(const Json& value);

// Header "solver,instance,seed,obj,queries,wall_time,config_hash".
void write_results_csv(std::ostream& os, const std::vector<ResultRow>& rows);
// Throws ParseError on a wrong header or malformed row.
std::vector<ResultRow> read_results_csv(std::istream& is);

struct Problem {
  std::string instance;
  SetFunctionHandle handle;
  Partition partition;
};

// Builds the objective and its partition from the "objective" (and
// optional "partition") members of `config`. Data paths are resolved
// against `base_dir`. Throws ConfigError naming the member or file.
Problem build_problem(const Json& config,
                      const std::filesystem::path& base_dir = {});

struct SolverSpec {
  std::string name;
  Json params = Json::object();
};

// Registered names: standard_greedy, residual_random_greedy,
// multinoulli_scg, multinoulli_sga, multinoulli_asga.
const std::vector<std::string>& solver_names();

// Runs one solver on a fresh handle view so the query count covers this
// run only.
SolveResult run_solver(const SolverSpec& spec, const Problem& problem,
                       std::uint64_t seed);

struct SolveOutput {
  std::vector<ResultRow> rows;
  Json trace;  // {"schema": 1, "runs": [...]}
};

// Every (solver, seed) pair of a solve config.
SolveOutput run_solve(const Json& config, std::optional<std::uint64_t> seed,
                      const std::filesystem::path& base_dir = {});

// Reads the config, writes <out>/results.csv and <out>/trace.json. `out`
// falls back to the config's "out" member, then to ".".
void cmd_solve(const std::filesystem::path& config_path,
               std::optional<std::uint64_t> seed,
               std::optional<std::filesystem::path> out);

// Writes <out>/<policy>_seed<s>.csv (t,reward,running_avg,queries_log10)
// per run and <out>/summary.json. RANDOM is added unless the config sets
// "include_random": false.
void cmd_online(const std::filesystem::path& config_path,
                std::optional<std::filesystem::path> out);

struct BenchOptions {
  std::optional<std::filesystem::path> data;
  std::filesystem::path out = "bench_out";
  std::optional<int> seeds;  // suite default when unset
  bool quick = false;        // short horizons for smoke and golden runs
};

// One row per (instance, solver, seed). `suite` is coverage, aoptimal or
// dpp.
std::vector<ResultRow> run_bench(const std::string& suite,
                                 const BenchOptions& options);

// Writes <out>/<suite>_runs.csv and <out>/<suite>_table.csv, the latter
// holding per (instance, solver) means.
void cmd_bench(const std::string& suite, const BenchOptions& options);

}  // namespace partisel

#endif  // PARTISEL_RUNNER_HPP_
