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

// Random codes C, D: {0,1}^k -> {0,1}^n and their decoders. Honest
// conjugate-coding measurement acts on codewords as a binary symmetric channel.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isoqubit/random.hpp"

namespace isoqubit {

// Fixed-length bit string packed into 64-bit limbs; bit i lives in limb
// i / 64 at position i % 64.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int n) : n_(n), limbs_(static_cast<std::size_t>((n + 63) / 64), 0) {}

  int size() const { return n_; }
  bool get(int i) const { return (limbs_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1U; }
  void set(int i, bool b) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    auto& w = limbs_[static_cast<std::size_t>(i >> 6)];
    w = b ? (w | bit) : (w & ~bit);
  }
  const std::vector<std::uint64_t>& limbs() const { return limbs_; }
  std::vector<std::uint64_t>& limbs() { return limbs_; }

  // Hex digits with bit 0 as the most significant bit of the first digit;
  // the final digit is padded with zero bits.
  std::string to_hex() const;
  static BitVec from_hex(const std::string& hex, int n);

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> limbs_;
};

int hamming_distance(const BitVec& a, const BitVec& b);

// sin^2(pi/8)
double channel_error_probability();

struct CodeParams {
  int n = 0;
  int k = 0;
  double theta = 0.0;
  double tau = 0.0;
  double r = 0.0;    // decoding radius n (p_e + tau), kept real
  double p_e = 0.0;  // sin^2(pi/8)

  int radius() const;  // floor(r), or -1 if r < 0
};

// k = floor(n (1 - h(p_e) - theta)), r = n (p_e + tau). Requires
// 0 <= tau <= 1/2 - p_e and theta > tau h'(p_e); InvalidSlacks otherwise,
// RateTooLow if k < 1.
CodeParams derive_params(int n, double theta, double tau);

inline constexpr int kMaxCodeBits = 20;

class RandomCode {
 public:
  RandomCode(int k, int n, std::vector<BitVec> table);

  int k() const { return k_; }
  int n() const { return n_; }
  std::size_t size() const { return table_.size(); }
  const BitVec& operator[](std::size_t message) const { return table_[message]; }
  const std::vector<BitVec>& table() const { return table_; }

 private:
  int k_;
  int n_;
  std::vector<BitVec> table_;
};

// 2^k independent uniform rows; TooLarge if k > 20.
RandomCode sample_code(int k, int n, Rng& rng);

BitVec bsc_channel(const BitVec& word, double p, Rng& rng);

// Smallest message whose codeword is within floor(r) of z; none if r < 0.
std::optional<std::uint64_t> bounded_distance_decode(const RandomCode& code, const BitVec& z,
                                                     double r);
// argmin_t d_H(C(t), z), smallest t on ties.
std::uint64_t nearest_codeword_decode(const RandomCode& code, const BitVec& z);

struct DecodeBound {
  double code_confidence;  // 1 - 1/lambda
  double success;          // 1 - lambda [e^{-2 tau^2 n} + 2^{-n (theta - tau h'(p_e))}], >= 0
};
// tau = 0 is accepted here (degenerate, success clamps to 0); other slack
// violations raise InvalidSlacks, lambda < 1 raises DomainError.
DecodeBound decode_success_bound(int n, double theta, double tau, double lambda);

struct MonteCarloResult {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t bits = 0;
  std::uint64_t flips = 0;

  double success_rate() const { return trials ? double(successes) / double(trials) : 0.0; }
  double flip_rate() const { return bits ? double(flips) / double(bits) : 0.0; }
};

// Samples `codes` codes with k, n from params, sends `trials` uniform
// messages through BSC(p_e) per code and decodes with the nearest-codeword
// rule. Code j uses derive_seed(seed, j).
MonteCarloResult decode_monte_carlo(const CodeParams& params, int codes, int trials,
                                    std::uint64_t seed);

}  // namespace isoqubit
