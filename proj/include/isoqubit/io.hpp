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

// Text formats for nets, codes, ensembles and OTM devices. Every writer
// round-trips bit-exactly through its reader.
//
//   net      JSON {"q": q, "epsilon": eps, "members": [[[[re, im], [re, im]],
//            [[re, im], [re, im]]], ...], ...]}, one entry per member, each a
//            list of q row-major 2x2 matrices.
//   code     "k n seed", then 2^k hex rows (see BitVec::to_hex).
//   ensemble "nb n seed", then 2^nb rows of n space-separated two-bit codes.
//   device   "n k theta tau seedC seedD", then the C and D code files.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "isoqubit/codes.hpp"
#include "isoqubit/hiding.hpp"
#include "isoqubit/net.hpp"
#include "isoqubit/otm.hpp"

namespace isoqubit {

std::string net_to_json(const MeasurementNet& net);
MeasurementNet net_from_json(const std::string& text);

void write_code(std::ostream& os, const RandomCode& code, std::uint64_t seed);
RandomCode read_code(std::istream& is, std::uint64_t* seed = nullptr);

void write_ensemble(std::ostream& os, const HidingEnsemble& e, std::uint64_t seed);
HidingEnsemble read_ensemble(std::istream& is, std::uint64_t* seed = nullptr);

void write_device(std::ostream& os, const OtmDevice& device);
OtmDevice read_device(std::istream& is);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace isoqubit
