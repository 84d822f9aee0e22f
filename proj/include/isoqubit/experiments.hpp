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

#pragma once

// Deterministic experiment harness behind the command-line tool.
//
// Item i of every experiment (a seed, a code, a trial batch) draws all its
// randomness from derive_seed(config.seed, i), so results never depend on
// the worker count or on execution order. Rows are assembled by index.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace isoqubit {

inline constexpr const char* kVersion = "0.1.0";

struct ExperimentConfig {
  std::string experiment;
  int n = 10;
  int nb = 3;
  int k = 0;  // 0: derive from (n, theta, tau)
  int q = 2;
  int m = -1;      // collision subset size; -1 picks the experiment default
  int depth = -1;  // enumeration depth; -1 picks the experiment default
  double eps = 0.2;
  double theta = 0.05;
  double tau = 0.0;
  double lambda = 2.0;
  std::uint64_t seed = 1;
  int trials = 1000;
  int seeds = 1;
  double cap = 1e7;
  int max_dim = 14;
  std::uint64_t s = 0;
  std::uint64_t t = 0;
  std::string side = "S";
  int workers = 0;  // 0: hardware concurrency
  std::string out;
  std::string format = "csv";
};

// Every experiment name accepted by run().
const std::vector<std::string>& experiment_names();

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct ExperimentResult {
  Table table;
  // Primary file artifact (net, ensemble, device), if the experiment has one.
  std::optional<std::string> artifact;
  // False when a `check` experiment found a failing property.
  bool ok = true;
};

// Throws Error(ConfigError) naming the offending field before any work.
void validate_config(const ExperimentConfig& config);
ExperimentResult run(const ExperimentConfig& config);

std::string format_csv(const ExperimentConfig& config, const Table& table);
std::string format_json(const ExperimentConfig& config, const Table& table);
// 12 significant digits.
std::string format_number(double x);

}  // namespace isoqubit
