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

#include <stdexcept>
#include <string>
#include <string_view>

namespace isoqubit {

enum class ErrorKind {
  IndexOutOfRange,
  DimensionMismatch,
  DimensionTooLarge,
  InvalidState,
  InvalidProbability,
  NotAPovm,
  NotRank1,
  InvalidEpsilon,
  InvalidQ,
  DepthMismatch,
  CapExceeded,
  DomainError,
  EpsilonTooLarge,
  PreconditionViolated,
  InvalidSlacks,
  RateTooLow,
  TooLarge,
  InvalidH,
  ParseError,
  ConfigError,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Thrown by enumerate_strategies when the exact tree count exceeds the cap.
class CapExceededError : public Error {
 public:
  CapExceededError(double count, double cap)
      : Error(ErrorKind::CapExceeded,
              "enumeration would produce " + std::to_string(count) +
                  " trees, cap is " + std::to_string(cap)),
        count_(count) {}

  double count() const noexcept { return count_; }

 private:
  double count_;
};

}  // namespace isoqubit
