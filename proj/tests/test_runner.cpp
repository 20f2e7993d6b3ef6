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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "partisel/runner.hpp"

using namespace partisel;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("partisel_runner_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write(const fs::path& path, const std::string& body) { std::ofstream(path) << body; }

int run_cli(const std::string& args) {
  const std::string cmd = std::string(PARTISEL_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string expect_config_error(const Json& config) {
  try {
    run_solve(config, std::nullopt);
  } catch (const ConfigError& e) {
    return e.path();
  }
  ADD_FAILURE() << "no ConfigError for " << config.dump();
  return {};
}

}  // namespace

TEST(Runner, QueriesLog10) {
  EXPECT_DOUBLE_EQ(queries_log10(1), 0.0);
  EXPECT_DOUBLE_EQ(queries_log10(1000), 3.0);
  EXPECT_DOUBLE_EQ(queries_log10(363'078), 5.56);
  EXPECT_DOUBLE_EQ(queries_log10(0), 0.0);
}

TEST(Runner, ConfigHashIgnoresKeyOrder) {
  const Json a = Json::parse(R"({"x": 1, "y": [1, 2], "z": {"b": 2, "a": 1}})");
  const Json b = Json::parse(R"({"z": {"a": 1, "b": 2}, "y": [1, 2], "x": 1})");
  EXPECT_EQ(config_hash(a), config_hash(b));
  EXPECT_EQ(config_hash(a).size(), 16u);
  EXPECT_NE(config_hash(a), config_hash(Json::parse(R"({"x": 2})")));
  // FNV-1a 64 of the empty object "{}".
  EXPECT_EQ(config_hash(Json::object()), "08f44b07b5901a25");
}

TEST(Runner, CsvRoundTrip) {
  std::vector<ResultRow> rows = {
      {"standard_greedy", "coverage_n20_k5", 3, 19.19, 2.62, 0.125, "00ff00ff00ff00ff"},
      {"multinoulli_scg", "dpp_synthetic", 0, 4.5, 7.25, 12.5, "0123456789abcdef"}};
  std::stringstream ss;
  write_results_csv(ss, rows);
  const auto back = read_results_csv(ss);
  ASSERT_EQ(back.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(back[i].solver, rows[i].solver);
    EXPECT_EQ(back[i].instance, rows[i].instance);
    EXPECT_EQ(back[i].seed, rows[i].seed);
    EXPECT_DOUBLE_EQ(back[i].obj, rows[i].obj);
    EXPECT_DOUBLE_EQ(back[i].queries, rows[i].queries);
    EXPECT_DOUBLE_EQ(back[i].wall_time, rows[i].wall_time);
    EXPECT_EQ(back[i].config_hash, rows[i].config_hash);
  }
  std::stringstream again;
  write_results_csv(again, back);
  std::stringstream first;
  write_results_csv(first, rows);
  EXPECT_EQ(again.str(), first.str());

  std::istringstream bad_header("solver,obj\n");
  EXPECT_THROW(read_results_csv(bad_header), ParseError);
  std::istringstream bad_row(
      "solver,instance,seed,obj,queries,wall_time,config_hash\na,b,x,1,2,3,h\n");
  try {
    read_results_csv(bad_row);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(Runner, SolveCoverageGreedy) {
  const Json config = Json::parse(R"({
    "schema": 1,
    "objective": {"kind": "coverage", "n": 20, "k": 5, "epsilon": 0.01},
    "solvers": ["standard_greedy", {"name": "multinoulli_sga", "T": 5, "L": 2}],
    "seeds": [0, 1]
  })");
  const SolveOutput out = run_solve(config, std::nullopt);
  ASSERT_EQ(out.rows.size(), 4u);
  EXPECT_EQ(out.rows[0].instance, "coverage_n20_k5");
  EXPECT_NEAR(out.rows[0].obj, 19.19, 1e-9);
  EXPECT_EQ(out.rows[0].config_hash, out.rows[1].config_hash);
  EXPECT_NE(out.rows[0].config_hash, out.rows[2].config_hash);
  EXPECT_EQ(out.trace["runs"].size(), 4u);
  EXPECT_EQ(out.trace["schema"], 1);

  const SolveOutput one = run_solve(config, 7);
  ASSERT_EQ(one.rows.size(), 2u);
  EXPECT_EQ(one.rows[1].seed, 7u);
}

TEST(Runner, SolveWithExplicitPartition) {
  const Json config = Json::parse(R"({
    "schema": 1,
    "objective": {"kind": "modular", "weights": [1, 5, 2, 4]},
    "partition": {"communities": [[0, 1], [2, 3]], "budgets": [1, 1]},
    "solvers": ["standard_greedy"]
  })");
  const SolveOutput out = run_solve(config, std::nullopt);
  EXPECT_DOUBLE_EQ(out.rows[0].obj, 9.0);
}

TEST(Runner, ConfigErrorsCarryPaths) {
  EXPECT_EQ(expect_config_error(Json::parse(R"({"objective": {}})")), "/schema");
  EXPECT_EQ(expect_config_error(Json::parse(R"({"schema": 2})")), "/schema");
  EXPECT_EQ(expect_config_error(Json::parse(
                R"({"schema": 1, "objective": {"kind": "coverage", "k": 5},
                    "solvers": ["standard_greedy"]})")),
            "/objective/n");
  EXPECT_EQ(expect_config_error(Json::parse(
                R"({"schema": 1, "objective": {"kind": "coverage", "n": 6, "k": 2},
                    "solvers": ["standard_greedy", "lazy_greedy"]})")),
            "/solvers/1");
  EXPECT_EQ(expect_config_error(Json::parse(
                R"({"schema": 1, "objective": {"kind": "coverage", "n": 6, "k": 2},
                    "solvers": [{"name": "multinoulli_scg", "T": "ten"}]})")),
            "/solvers/0/T");
  EXPECT_EQ(expect_config_error(Json::parse(
                R"({"schema": 1, "objective": {"kind": "coverage", "n": 6, "k": 2},
                    "solvers": [{"name": "multinoulli_scg", "steps": 3}]})")),
            "/solvers/0/steps");
  EXPECT_EQ(expect_config_error(Json::parse(
                R"({"schema": 1, "objective": {"kind": "modular", "weights": [1, 2]},
                    "solvers": ["standard_greedy"]})")),
            "/partition");
  EXPECT_EQ(expect_config_error(Json::parse(
                R"({"schema": 1, "objective": {"kind": "coverage", "n": 6, "k": 2},
                    "solvers": ["standard_greedy"], "seeds": [-1]})")),
            "/seeds/0");
}

TEST(Runner, MissingDataFileNamesThePath) {
  const Json config = Json::parse(R"({
    "schema": 1,
    "objective": {"kind": "aoptimal", "data": "/nonexistent/housing.libsvm"},
    "solvers": ["standard_greedy"]
  })");
  try {
    run_solve(config, std::nullopt);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.path(), "/objective/data");
    EXPECT_NE(std::string(e.what()).find("/nonexistent/housing.libsvm"), std::string::npos);
  }
}

TEST(Runner, CliExitCodes) {
  const fs::path dir = scratch("cli");
  write(dir / "missing.json", R"({"schema": 1,
    "objective": {"kind": "dpp", "data": "no_such_features.csv"},
    "solvers": ["standard_greedy"]})");
  EXPECT_EQ(run_cli("solve --config " + (dir / "missing.json").string()), 2);
  EXPECT_EQ(run_cli("solve --config " + (dir / "absent.json").string()), 2);

  write(dir / "ok.json", R"({"schema": 1,
    "objective": {"kind": "coverage", "n": 20, "k": 5},
    "solvers": ["standard_greedy"], "seeds": [0]})");
  const fs::path out = dir / "out";
  EXPECT_EQ(run_cli("solve --config " + (dir / "ok.json").string() + " --out " +
                    out.string()),
            0);
  std::ifstream csv(out / "results.csv");
  const auto rows = read_results_csv(csv);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_NEAR(rows[0].obj, 19.19, 1e-9);
  EXPECT_TRUE(fs::exists(out / "trace.json"));
}

TEST(Runner, DppSuiteAcceptsFeatureCsv) {
  const fs::path dir = scratch("dpp");
  std::string body = "f1,f2\n";
  for (int i = 0; i < 30; ++i) {
    body += std::to_string(i % 7) + "," + std::to_string((i * 3) % 5) + "\n";
  }
  write(dir / "frames.csv", body);
  BenchOptions options;
  options.data = dir / "frames.csv";
  options.quick = true;
  const auto rows = run_bench("dpp", options);
  ASSERT_EQ(rows.size(), solver_names().size());
  EXPECT_EQ(rows[0].instance, "dpp_frames");
  for (const auto& r : rows) EXPECT_GE(r.obj, 1.0);
}

TEST(Runner, CoverageQuickBenchMatchesGolden) {
  BenchOptions options;
  options.quick = true;
  const auto rows = run_bench("coverage", options);
  EXPECT_EQ(rows.size(), 4 * solver_names().size());
  std::ifstream golden(fs::path(PARTISEL_TEST_DATA_DIR) / "coverage_quick_golden.csv");
  ASSERT_TRUE(golden.good());
  const auto expect = read_results_csv(golden);
  ASSERT_EQ(rows.size(), expect.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].solver, expect[i].solver);
    EXPECT_EQ(rows[i].instance, expect[i].instance);
    EXPECT_EQ(rows[i].seed, expect[i].seed);
    EXPECT_NEAR(rows[i].obj, expect[i].obj, 5e-7);
    EXPECT_DOUBLE_EQ(rows[i].queries, expect[i].queries);
    EXPECT_EQ(rows[i].config_hash, expect[i].config_hash);
  }
}

TEST(Runner, OnlineOutputsAreReproducible) {
  const fs::path dir = scratch("online");
  write(dir / "scenario.json", R"({"schema": 1,
    "scenario": {"agents": 2, "targets": 5, "mix": "R:A:P=4:5:1", "T": 12},
    "policies": ["OSGA"], "seeds": [3],
    "oscg": {"Q": 2, "L": 2}})");
  cmd_online(dir / "scenario.json", dir / "a");
  cmd_online(dir / "scenario.json", dir / "b");
  for (const char* name : {"OSGA_seed3.csv", "RANDOM_seed3.csv", "summary.json"}) {
    ASSERT_TRUE(fs::exists(dir / "a" / name)) << name;
    EXPECT_EQ(slurp(dir / "a" / name), slurp(dir / "b" / name)) << name;
  }
  const std::string csv = slurp(dir / "a" / "RANDOM_seed3.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,reward,running_avg,queries_log10");
  const Json summary = Json::parse(slurp(dir / "a" / "summary.json"));
  EXPECT_EQ(summary["runs"].size(), 2u);
  EXPECT_TRUE(summary["mean_final_running_average"].contains("RANDOM"));

  write(dir / "bad.json", R"({"schema": 1, "scenario": {"mix": "4/5/1"}})");
  try {
    cmd_online(dir / "bad.json", dir / "c");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.path(), "/scenario/mix");
  }
}
