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

#include "isoqubit/codes.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "isoqubit/entropy.hpp"
#include "isoqubit/error.hpp"

namespace isoqubit {

std::string BitVec::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (int i = 0; i < n_; i += 4) {
    int d = 0;
    for (int j = 0; j < 4; ++j) {
      d = (d << 1) | ((i + j < n_ && get(i + j)) ? 1 : 0);
    }
    out.push_back(kDigits[d]);
  }
  return out;
}

BitVec BitVec::from_hex(const std::string& hex, int n) {
  if (static_cast<int>(hex.size()) != (n + 3) / 4) {
    throw Error(ErrorKind::ParseError, "hex word '" + hex + "' does not hold " +
                                           std::to_string(n) + " bits");
  }
  BitVec v(n);
  for (int i = 0; i < static_cast<int>(hex.size()); ++i) {
    const char c = hex[static_cast<std::size_t>(i)];
    int d;
    if (c >= '0' && c <= '9') {
      d = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      d = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      d = c - 'A' + 10;
    } else {
      throw Error(ErrorKind::ParseError, std::string("bad hex digit '") + c + "'");
    }
    for (int j = 0; j < 4; ++j) {
      const bool b = (d >> (3 - j)) & 1;
      const int bit = 4 * i + j;
      if (bit < n) {
        v.set(bit, b);
      } else if (b) {
        throw Error(ErrorKind::ParseError, "nonzero padding in '" + hex + "'");
      }
    }
  }
  return v;
}

int hamming_distance(const BitVec& a, const BitVec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "word lengths differ");
  int d = 0;
  for (std::size_t i = 0; i < a.limbs().size(); ++i) {
    d += std::popcount(a.limbs()[i] ^ b.limbs()[i]);
  }
  return d;
}

double channel_error_probability() {
  const double s = std::sin(std::numbers::pi / 8.0);
  return s * s;
}

int CodeParams::radius() const { return r < 0.0 ? -1 : static_cast<int>(std::floor(r)); }

namespace {

void check_slacks(double theta, double tau, bool allow_zero_tau_bound) {
  const double pe = channel_error_probability();
  if (!(tau >= 0.0) || tau > 0.5 - pe) {
    throw Error(ErrorKind::InvalidSlacks, "tau must lie in [0, 1/2 - p_e]");
  }
  const double need = tau * binary_entropy_derivative(pe);
  if (!(theta > need) && !(allow_zero_tau_bound && tau == 0.0 && theta >= 0.0)) {
    throw Error(ErrorKind::InvalidSlacks, "theta = " + std::to_string(theta) +
                                              " must exceed tau h'(p_e) = " + std::to_string(need));
  }
}

}  // namespace

CodeParams derive_params(int n, double theta, double tau) {
  if (n < 1) throw Error(ErrorKind::RateTooLow, "n must be positive");
  check_slacks(theta, tau, false);
  CodeParams p;
  p.n = n;
  p.theta = theta;
  p.tau = tau;
  p.p_e = channel_error_probability();
  p.k = static_cast<int>(std::floor(n * (1.0 - binary_entropy(p.p_e) - theta)));
  p.r = n * (p.p_e + tau);
  if (p.k < 1) {
    throw Error(ErrorKind::RateTooLow, "k = " + std::to_string(p.k) + " at n = " +
                                           std::to_string(n));
  }
  return p;
}

RandomCode::RandomCode(int k, int n, std::vector<BitVec> table)
    : k_(k), n_(n), table_(std::move(table)) {
  if (k < 0 || k > kMaxCodeBits) throw Error(ErrorKind::TooLarge, "k must lie in [0, 20]");
  if (n < 1) throw Error(ErrorKind::DimensionMismatch, "n must be positive");
  if (table_.size() != (std::size_t{1} << k)) {
    throw Error(ErrorKind::DimensionMismatch, "code table must have 2^k rows");
  }
  for (const auto& w : table_) {
    if (w.size() != n) throw Error(ErrorKind::DimensionMismatch, "codeword length differs from n");
  }
}

RandomCode sample_code(int k, int n, Rng& rng) {
  if (k < 0 || k > kMaxCodeBits) {
    throw Error(ErrorKind::TooLarge, "k = " + std::to_string(k) + " exceeds the table cap 20");
  }
  std::vector<BitVec> table;
  table.reserve(std::size_t{1} << k);
  for (std::size_t s = 0; s < (std::size_t{1} << k); ++s) {
    BitVec w(n);
    for (auto& limb : w.limbs()) limb = rng.next_u64();
    if (n % 64 != 0) w.limbs().back() &= (std::uint64_t{1} << (n % 64)) - 1;
    table.push_back(std::move(w));
  }
  return RandomCode(k, n, std::move(table));
}

BitVec bsc_channel(const BitVec& word, double p, Rng& rng) {
  BitVec out = word;
  for (int i = 0; i < word.size(); ++i) {
    if (rng.bernoulli(p)) out.set(i, !word.get(i));
  }
  return out;
}

std::optional<std::uint64_t> bounded_distance_decode(const RandomCode& code, const BitVec& z,
                                                     double r) {
  if (r < 0.0) return std::nullopt;
  const double radius = std::floor(r);
  for (std::size_t t = 0; t < code.size(); ++t) {
    if (hamming_distance(code[t], z) <= radius) return t;
  }
  return std::nullopt;
}

std::uint64_t nearest_codeword_decode(const RandomCode& code, const BitVec& z) {
  std::uint64_t best = 0;
  int best_d = z.size() + 1;
  for (std::size_t t = 0; t < code.size(); ++t) {
    const int d = hamming_distance(code[t], z);
    if (d < best_d) {
      best_d = d;
      best = t;
    }
  }
  return best;
}

DecodeBound decode_success_bound(int n, double theta, double tau, double lambda) {
  if (!(lambda >= 1.0)) throw Error(ErrorKind::DomainError, "lambda must be >= 1");
  check_slacks(theta, tau, true);
  const double pe = channel_error_probability();
  const double tail = std::exp(-2.0 * tau * tau * n) +
                      std::exp2(-n * (theta - tau * binary_entropy_derivative(pe)));
  return {1.0 - 1.0 / lambda, std::max(0.0, 1.0 - lambda * tail)};
}

MonteCarloResult decode_monte_carlo(const CodeParams& params, int codes, int trials,
                                    std::uint64_t seed) {
  MonteCarloResult res;
  for (int j = 0; j < codes; ++j) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(j)));
    const RandomCode code = sample_code(params.k, params.n, rng);
    for (int i = 0; i < trials; ++i) {
      const std::uint64_t s = rng.below(code.size());
      const BitVec z = bsc_channel(code[s], params.p_e, rng);
      res.flips += static_cast<std::uint64_t>(hamming_distance(z, code[s]));
      res.bits += static_cast<std::uint64_t>(params.n);
      res.successes += nearest_codeword_decode(code, z) == s ? 1 : 0;
      ++res.trials;
    }
  }
  return res;
}

}  // namespace isoqubit
