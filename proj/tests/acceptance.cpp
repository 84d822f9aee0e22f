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

// Acceptance suite: one PASS/FAIL line per numbered property.

#include <cstdio>
#include <cstdlib>

#include "isoqubit/checks.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20260101;
  int failed = 0;
  isoqubit::run_all_checks(seed, [&](const isoqubit::CheckResult& r) {
    std::printf("[%s] %2d %-24s (%.1fs) %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds, r.detail.c_str());
    std::fflush(stdout);
    failed += r.passed ? 0 : 1;
  });
  std::printf("%d/%d criteria passed\n", isoqubit::kCheckCount - failed, isoqubit::kCheckCount);
  return failed == 0 ? 0 : 1;
}
