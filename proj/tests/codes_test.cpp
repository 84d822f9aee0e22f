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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "isoqubit/entropy.hpp"
#include "isoqubit/qubit.hpp"
#include "oracles.hpp"

using namespace isoqubit;

TEST(channel_error_probability, value) {
  const double p = channel_error_probability();
  EXPECT_NEAR(p, 0.14644661, 1e-8);
  EXPECT_NEAR(p, std::norm(beta_state(std::numbers::pi / 8).inner(QubitState::make(0.0, 1.0))),
              1e-15);
  EXPECT_NEAR(p, 1 - std::pow(std::cos(std::numbers::pi / 8), 2), 1e-15);
}

TEST(bitvec, hex_round_trip) {
  BitVec v(10);
  v.set(0, true);
  v.set(9, true);
  EXPECT_EQ(v.to_hex(), "804");
  EXPECT_EQ(BitVec::from_hex("804", 10), v);
  Rng rng(3);
  for (int n : {1, 63, 64, 65, 200}) {
    BitVec w(n);
    for (int i = 0; i < n; ++i) w.set(i, rng.bernoulli(0.5));
    EXPECT_EQ(BitVec::from_hex(w.to_hex(), n), w);
  }
  EXPECT_THROW(BitVec::from_hex("zz", 8), Error);
}

TEST(bitvec, hamming_matches_bitwise) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(150));
    BitVec a(n), b(n);
    for (int i = 0; i < n; ++i) {
      a.set(i, rng.bernoulli(0.5));
      b.set(i, rng.bernoulli(0.5));
    }
    ASSERT_EQ(hamming_distance(a, b), oracle::hamming(a, b));
  }
}

TEST(derive_params, examples) {
  const auto p = derive_params(64, 0.08, 0.02);
  EXPECT_EQ(p.k, 20);
  EXPECT_NEAR(p.r, 10.65, 5e-3);
  EXPECT_EQ(p.radius(), 10);
  EXPECT_NEAR(p.p_e, channel_error_probability(), 1e-12);
  EXPECT_NEAR(double(derive_params(100000, 1e-6, 0.0).k) / 100000, 0.3991, 1e-4);
  try {
    derive_params(64, 0.05, 0.02);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidSlacks);
  }
  try {
    derive_params(2, 0.05, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RateTooLow);
  }
  EXPECT_THROW(derive_params(64, 0.5, 0.4), Error);
}

TEST(sample_code, examples) {
  Rng a(9), b(9);
  const auto c0 = sample_code(0, 16, a);
  EXPECT_EQ(c0.size(), 1U);
  Rng r1(11), r2(11);
  EXPECT_EQ(sample_code(5, 40, r1).table(), sample_code(5, 40, r2).table());
  Rng big(1);
  EXPECT_THROW(sample_code(21, 8, big), Error);
}

TEST(sample_code, bits_are_fair) {
  Rng rng(13);
  long ones = 0, total = 0;
  for (int seed = 0; seed < 50; ++seed) {
    const auto c = sample_code(6, 50, rng);
    for (const auto& w : c.table()) {
      for (int i = 0; i < w.size(); ++i) ones += w.get(i);
      total += w.size();
    }
  }
  const double sigma = std::sqrt(0.25 / total);
  EXPECT_NEAR(double(ones) / total, 0.5, 3 * sigma);
}

TEST(bsc_channel, examples) {
  Rng rng(17);
  BitVec w(100);
  for (int i = 0; i < 100; i += 3) w.set(i, true);
  EXPECT_EQ(bsc_channel(w, 0.0, rng), w);
  const auto flipped = bsc_channel(w, 1.0, rng);
  EXPECT_EQ(hamming_distance(flipped, w), 100);

  const double p = channel_error_probability();
  long flips = 0;
  const int n = 1000;
  for (int t = 0; t < 100; ++t) {
    BitVec z(n);
    flips += hamming_distance(bsc_channel(z, p, rng), z);
  }
  const double sigma = std::sqrt(p * (1 - p) / 1e5);
  EXPECT_NEAR(flips / 1e5, p, 3 * sigma);
}

TEST(bounded_distance_decode, examples) {
  Rng rng(19);
  const auto code = sample_code(4, 40, rng);
  for (std::uint64_t s = 0; s < code.size(); ++s) {
    EXPECT_EQ(bounded_distance_decode(code, code[s], 3).value_or(99), s);
  }
  EXPECT_FALSE(bounded_distance_decode(code, code[0], -1).has_value());
}

TEST(bounded_distance_decode, matches_exhaustive_scan) {
  Rng rng(23);
  const auto code = sample_code(6, 30, rng);
  for (int trial = 0; trial < 300; ++trial) {
    const auto z = bsc_channel(code[rng.below(code.size())], 0.2, rng);
    const double r = 8.5;
    std::optional<std::uint64_t> ref;
    for (std::uint64_t t = 0; t < code.size() && !ref; ++t) {
      if (oracle::hamming(code[t], z) <= 8) ref = t;
    }
    ASSERT_EQ(bounded_distance_decode(code, z, r), ref);
  }
}

TEST(nearest_codeword_decode, examples) {
  Rng rng(29);
  const auto code = sample_code(5, 60, rng);
  for (std::uint64_t s = 0; s < code.size(); ++s) {
    EXPECT_EQ(nearest_codeword_decode(code, code[s]), s);
    BitVec z = code[s];
    z.set(7, !z.get(7));
    int min_gap = 1 << 20;
    for (std::uint64_t t = 0; t < code.size(); ++t) {
      if (t != s) min_gap = std::min(min_gap, hamming_distance(code[s], code[t]));
    }
    if (min_gap > 2) EXPECT_EQ(nearest_codeword_decode(code, z), s);
  }
  for (int trial = 0; trial < 300; ++trial) {
    const auto z = bsc_channel(code[rng.below(code.size())], 0.3, rng);
    ASSERT_EQ(nearest_codeword_decode(code, z), oracle::exhaustive_decode(code, z));
    const auto bdd = bounded_distance_decode(code, z, 5);
    int within = 0;
    for (const auto& w : code.table()) within += hamming_distance(w, z) <= 5;
    if (bdd && within == 1) EXPECT_EQ(*bdd, nearest_codeword_decode(code, z));
  }
}

TEST(decode_success_bound, examples) {
  const double hp = binary_entropy_derivative(channel_error_probability());
  const auto b = decode_success_bound(64, 0.08, 0.02, 2.0);
  const double formula =
      1 - 2 * (std::exp(-2 * 0.02 * 0.02 * 64) + std::pow(2.0, -64 * (0.08 - 0.02 * hp)));
  EXPECT_DOUBLE_EQ(b.code_confidence, 0.5);
  EXPECT_DOUBLE_EQ(b.success, std::max(0.0, formula));
  EXPECT_EQ(b.success, 0.0);

  EXPECT_GT(decode_success_bound(100000, 0.08, 0.02, 1.0).success, 0.999);
  EXPECT_EQ(decode_success_bound(64, 0.1, 0.0, 2.0).success, 0.0);
  EXPECT_THROW(decode_success_bound(64, 0.08, 0.02, 0.5), Error);
  EXPECT_THROW(decode_success_bound(64, 0.05, 0.02, 2.0), Error);
}

TEST(decode_success_bound, monotone) {
  for (int n = 1000; n < 20000; n += 1000) {
    EXPECT_LE(decode_success_bound(n, 0.08, 0.02, 2.0).success,
              decode_success_bound(n + 1000, 0.08, 0.02, 2.0).success);
    EXPECT_GE(decode_success_bound(n, 0.08, 0.02, 1.5).success,
              decode_success_bound(n, 0.08, 0.02, 3.0).success);
  }
}

TEST(decode_monte_carlo, success_grows_with_n) {
  double prev_lo = 0.0;
  for (int n : {32, 64, 128}) {
    CodeParams p = derive_params(n, 0.2, 0.0);
    p.k = std::min(p.k, 12);
    const auto mc = decode_monte_carlo(p, 1, 1000, 77);
    const double rate = mc.success_rate();
    const double sigma = std::sqrt(std::max(rate * (1 - rate), 1e-4) / 1000);
    EXPECT_GE(rate + 3 * sigma, prev_lo);
    prev_lo = rate - 3 * sigma;
    EXPECT_NEAR(mc.flip_rate(), channel_error_probability(), 0.02);
  }
  const auto p = derive_params(64, 0.2, 0.0);
  EXPECT_EQ(decode_monte_carlo(p, 2, 100, 5).successes, decode_monte_carlo(p, 2, 100, 5).successes);
}
