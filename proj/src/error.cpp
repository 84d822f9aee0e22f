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

#include "isoqubit/error.hpp"

namespace isoqubit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::InvalidProbability: return "InvalidProbability";
    case ErrorKind::NotAPovm: return "NotAPovm";
    case ErrorKind::NotRank1: return "NotRank1";
    case ErrorKind::InvalidEpsilon: return "InvalidEpsilon";
    case ErrorKind::InvalidQ: return "InvalidQ";
    case ErrorKind::DepthMismatch: return "DepthMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::EpsilonTooLarge: return "EpsilonTooLarge";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InvalidSlacks: return "InvalidSlacks";
    case ErrorKind::RateTooLow: return "RateTooLow";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidH: return "InvalidH";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace isoqubit
