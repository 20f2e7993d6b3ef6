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

#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "partisel/errors.hpp"
#include "partisel/runner.hpp"

namespace fs = std::filesystem;

int main(int argc, char** argv) {
  CLI::App app{"partisel: partition-constrained subset selection"};
  app.require_subcommand(1);

  std::string solve_config;
  std::optional<std::uint64_t> solve_seed;
  std::optional<std::string> solve_out;
  auto* solve = app.add_subcommand("solve", "Run the offline solvers of a config");
  solve->add_option("--config", solve_config, "JSON config")->required();
  solve->add_option("--seed", solve_seed, "Run this seed only");
  solve->add_option("--out", solve_out, "Output directory");

  std::string online_config;
  std::optional<std::string> online_out;
  auto* online = app.add_subcommand("online", "Run tracking episodes");
  online->add_option("--config", online_config, "JSON scenario config")->required();
  online->add_option("--out", online_out, "Output directory");

  std::string suite;
  std::optional<std::string> bench_data;
  std::string bench_out = "bench_out";
  std::optional<int> bench_seeds;
  bool quick = false;
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  bench->add_option("suite", suite, "coverage, aoptimal or dpp")
      ->required()
      ->check(CLI::IsMember({"coverage", "aoptimal", "dpp"}));
  bench->add_option("--data", bench_data, "Dataset path (libsvm or features CSV)");
  bench->add_option("--out", bench_out, "Output directory");
  bench->add_option("--seeds", bench_seeds, "Seeds per solver");
  bench->add_flag("--quick", quick, "Short horizons");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      std::optional<fs::path> out;
      if (solve_out) out = *solve_out;
      partisel::cmd_solve(solve_config, solve_seed, out);
    } else if (online->parsed()) {
      std::optional<fs::path> out;
      if (online_out) out = *online_out;
      partisel::cmd_online(online_config, out);
    } else {
      partisel::BenchOptions options;
      if (bench_data) options.data = *bench_data;
      options.out = bench_out;
      options.seeds = bench_seeds;
      options.quick = quick;
      partisel::cmd_bench(suite, options);
    }
  } catch (const partisel::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
