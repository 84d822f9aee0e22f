// Copyright 2026 The isoqubit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// isoqubit: command-line front end for the experiment harness.
//
//   isoqubit <group> <name> [options]
//
// e.g. `isoqubit hiding pgm --n 10 --nb 3 --seeds 20`. Options may come
// from a TOML/INI file via --config. Exit codes: 0 ok, 2 bad configuration
// or refused precondition, 3 a check failed, 1 anything else.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "isoqubit/error.hpp"
#include "isoqubit/experiments.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitCheck = 3;

void write_to(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw isoqubit::Error(isoqubit::ErrorKind::ConfigError, "out: cannot open '" + path + "'");
  }
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  using isoqubit::ExperimentConfig;
  ExperimentConfig cfg;

  CLI::App app{"Isolated-qubit data hiding and one-time memory experiments", "isoqubit"};
  app.set_config("--config", "", "Read options from a TOML/INI file");
  app.require_subcommand(1);

  app.add_option("--n", cfg.n, "Number of qubits (or code length)");
  app.add_option("--nb", cfg.nb, "Hidden bits");
  app.add_option("--k", cfg.k, "OTM message bits (0 derives from n, theta, tau)");
  app.add_option("--q", cfg.q, "Outcomes per measurement");
  app.add_option("--m", cfg.m, "Collision subset size");
  app.add_option("--depth", cfg.depth, "Enumeration depth");
  app.add_option("--eps", cfg.eps, "Net resolution");
  app.add_option("--theta", cfg.theta, "Rate slack");
  app.add_option("--tau", cfg.tau, "Radius slack");
  app.add_option("--lambda", cfg.lambda, "Confidence parameter for the decode bound");
  app.add_option("--seed", cfg.seed, "Master seed");
  app.add_option("--trials", cfg.trials, "Monte Carlo trials");
  app.add_option("--seeds", cfg.seeds, "Independent instances");
  app.add_option("--cap", cfg.cap, "Work cap for enumerations and scans");
  app.add_option("--max-dim", cfg.max_dim, "Largest dense qubit count");
  app.add_option("--s", cfg.s, "S-side message");
  app.add_option("--t", cfg.t, "T-side message");
  app.add_option("--side", cfg.side, "Honest side, S or T");
  app.add_option("--workers", cfg.workers, "Worker threads (0: all cores)");
  app.add_option("--out", cfg.out, "Output file");
  app.add_option("--format", cfg.format, "csv or json");

  // One subcommand per group, one nested subcommand per experiment.
  std::map<std::string, CLI::App*> groups;
  for (const auto& name : isoqubit::experiment_names()) {
    const auto dash = name.find('-');
    const std::string group = name.substr(0, dash);
    const std::string leaf = name.substr(dash + 1);
    auto& g = groups[group];
    if (!g) {
      g = app.add_subcommand(group, group + " experiments");
      g->require_subcommand(1);
      g->fallthrough();
    }
    auto* sub = g->add_subcommand(leaf, name);
    sub->fallthrough();
    sub->callback([&cfg, name] { cfg.experiment = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    const isoqubit::ExperimentResult result = isoqubit::run(cfg);
    const std::string table = cfg.format == "json" ? isoqubit::format_json(cfg, result.table)
                                                   : isoqubit::format_csv(cfg, result.table);
    if (result.artifact) {
      if (cfg.out.empty()) {
        std::cout << *result.artifact;
      } else {
        write_to(cfg.out, *result.artifact);
        std::cout << table;
      }
    } else if (cfg.out.empty()) {
      std::cout << table;
    } else {
      write_to(cfg.out, table);
    }
    if (!result.ok) return kExitCheck;
  } catch (const isoqubit::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case isoqubit::ErrorKind::ConfigError:
      case isoqubit::ErrorKind::CapExceeded:
      case isoqubit::ErrorKind::DomainError:
      case isoqubit::ErrorKind::InvalidSlacks:
      case isoqubit::ErrorKind::RateTooLow:
      case isoqubit::ErrorKind::TooLarge:
      case isoqubit::ErrorKind::DimensionTooLarge:
      case isoqubit::ErrorKind::EpsilonTooLarge:
        return kExitConfig;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
