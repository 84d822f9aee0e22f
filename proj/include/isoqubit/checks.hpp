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

// The numbered property checks run by `isoqubit check all` and by the
// acceptance test binary.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace isoqubit {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCheckCount = 12;

// Runs check `id` (1..12); seed makes every sampled instance reproducible.
CheckResult run_check(int id, std::uint64_t seed);

// Runs all checks in order, reporting each as it finishes.
std::vector<CheckResult> run_all_checks(std::uint64_t seed,
                                        const std::function<void(const CheckResult&)>& on_done = {});

}  // namespace isoqubit
