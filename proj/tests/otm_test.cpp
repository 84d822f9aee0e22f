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

#include "isoqubit/otm.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"

using namespace isoqubit;

namespace {

constexpr double kPi = std::numbers::pi;

BitVec bits(std::initializer_list<int> b) {
  BitVec v(static_cast<int>(b.size()));
  int i = 0;
  for (int x : b) v.set(i++, x != 0);
  return v;
}

// n=2, k=1 device with hand-picked codes.
OtmDevice tiny_device(BitVec c0, BitVec c1, BitVec d0, BitVec d1) {
  CodeParams p;
  p.n = 2;
  p.k = 1;
  p.p_e = channel_error_probability();
  p.r = 2 * p.p_e;
  return OtmDevice{p, RandomCode(1, 2, {c0, c1}), RandomCode(1, 2, {d0, d1}), 0, 0};
}

}  // namespace

TEST(otm_encode, examples) {
  const auto d = tiny_device(bits({0, 0}), bits({0, 1}), bits({0, 0}), bits({1, 1}));
  const auto zero = otm_encode(d, 0, 0);
  EXPECT_NEAR(std::abs(zero.dense()(0) - 1.0), 0.0, 1e-15);
  // (C_a, D_a) = (0,0), (1,0): |0> (x) |->.
  const auto s = otm_encode(d, 1, 0);
  EXPECT_NEAR(std::abs(s[0].inner(alpha_state(AlphaCode::k00))), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(s[1].inner(alpha_state(AlphaCode::k10))), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(s.inner(s)), 1.0, 1e-15);
  EXPECT_THROW(otm_encode(d, 2, 0), Error);
}

TEST(sample_device, reproducible_and_validated) {
  const auto a = sample_device(16, 3, 0.05, 0.0, 1, 2);
  const auto b = sample_device(16, 3, 0.05, 0.0, 1, 2);
  EXPECT_EQ(a.code_c.table(), b.code_c.table());
  EXPECT_EQ(a.code_d.table(), b.code_d.table());
  EXPECT_NO_THROW(validate_device(a));
  const auto derived = sample_device(32, 0, 0.05, 0.0, 1, 2);
  EXPECT_EQ(derived.params.k, derive_params(32, 0.05, 0.0).k);
}

TEST(honest_strategy, examples) {
  const auto s_side = honest_strategy(Side::S, 4);
  EXPECT_TRUE(s_side.is_one_pass());
  EXPECT_EQ(s_side.depth(), 4);
  const double pe = channel_error_probability();
  // |alpha_00> should read 0 on the S side; the wrong bit has prob p_e.
  const auto s_basis = honest_basis(Side::S);
  EXPECT_NEAR(s_basis.probability(alpha_state(AlphaCode::k00), 1), pe, 1e-12);
  EXPECT_NEAR(s_basis.probability(alpha_state(AlphaCode::k11), 0), pe, 1e-12);
  // |+> = alpha_01 carries D bit 1; the T side reads 1 with prob cos^2(pi/8).
  const auto t_basis = honest_basis(Side::T);
  EXPECT_NEAR(t_basis.probability(alpha_state(AlphaCode::k01), 1), std::pow(std::cos(kPi / 8), 2),
              1e-12);
  EXPECT_NEAR(t_basis.probability(alpha_state(AlphaCode::k10), 0), 1 - pe, 1e-12);
  // Same branch structure at every node.
  for (const auto& c : s_side.children()) EXPECT_TRUE(c.same_node(s_side.children()[0]));
}

TEST(honest_recover, noiseless_always_succeeds) {
  const auto d = sample_device(40, 4, 0.05, 0.0, 3, 4);
  Rng rng(5);
  for (std::uint64_t s = 0; s < 16; ++s) {
    EXPECT_TRUE(honest_recover(d, s, 15 - s, Side::S, rng, true).success);
    EXPECT_TRUE(honest_recover(d, s, 15 - s, Side::T, rng, true).success);
  }
}

TEST(honest_recover, per_qubit_error_matches_channel) {
  const auto st = honest_monte_carlo(100, 4, 10, 100, Side::S, 17);
  const double pe = channel_error_probability();
  EXPECT_EQ(st.qubits, 100000U);
  EXPECT_NEAR(st.error_rate(), pe, 3 * std::sqrt(pe * (1 - pe) / 1e5));
  const auto tt = honest_monte_carlo(100, 4, 10, 100, Side::T, 17);
  EXPECT_NEAR(tt.error_rate(), pe, 3 * std::sqrt(pe * (1 - pe) / 1e5));
}

TEST(honest_recover, t_side_unbiased_after_s_measurement) {
  // An S-basis outcome on |alpha_{c d}> does not depend on d, and a T-basis
  // outcome does not depend on c: each side sees only its own bit.
  const auto sb = honest_basis(Side::S);
  const auto tb = honest_basis(Side::T);
  for (int c = 0; c < 2; ++c) {
    EXPECT_NEAR(sb.probability(alpha_state(alpha_code(c, 0)), 0),
                sb.probability(alpha_state(alpha_code(c, 1)), 0), 1e-12);
    EXPECT_NEAR(tb.probability(alpha_state(alpha_code(0, c)), 0),
                tb.probability(alpha_state(alpha_code(1, c)), 0), 1e-12);
  }
}

TEST(honest_recover, n64_k8_success) {
  const auto st = honest_monte_carlo(64, 8, 20, 1000, Side::S, 2026);
  EXPECT_GE(st.success_rate(), 0.95);
}

TEST(leak, per_qubit_half_bit) {
  // Four equiprobable (c, d) cases: 00 and 11 are read deterministically,
  // 01 and 10 give a fair coin.
  std::vector<double> joint(8, 0.0);
  const auto basis = Povm::projective(alpha_state(AlphaCode::k00));
  for (int x = 0; x < 4; ++x) {
    for (int z = 0; z < 2; ++z) {
      joint[x * 2 + z] = 0.25 * basis.probability(alpha_state(static_cast<AlphaCode>(x)), z);
    }
  }
  EXPECT_NEAR(oracle::mutual_info(joint, 4, 2), 0.5, 1e-12);
  EXPECT_NEAR(std::abs(alpha_state(AlphaCode::k00).inner(alpha_state(AlphaCode::k11))), 0.0,
              1e-15);
  EXPECT_NEAR(std::abs(alpha_state(AlphaCode::k01).inner(alpha_state(AlphaCode::k10))), 0.0,
              1e-15);
}

TEST(leak, n8_k3_information) {
  int above = 0;
  for (int seed = 0; seed < 50; ++seed) {
    const auto d = sample_device(8, 3, 0.05, 0.0, derive_seed(seed, 0), derive_seed(seed, 1));
    const auto r = leak_eval(d, 1.0);
    EXPECT_GE(r.mutual_info, -1e-9);
    EXPECT_LE(r.mutual_info, 6 + 1e-9);
    EXPECT_NEAR(r.mutual_info + r.conditional_entropy, 6.0, 1e-9);
    EXPECT_NEAR(r.epsilon, 0.5, 1e-15);
    above += r.mutual_info >= 2.5;
  }
  EXPECT_GE(above, 45);
  EXPECT_THROW(leak_eval(sample_device(13, 2, 0.05, 0.0, 1, 2)), Error);
}

TEST(otm_information, examples) {
  const auto d = sample_device(6, 2, 0.05, 0.0, 9, 10);
  EXPECT_NEAR(otm_information(d, StrategyTree()), 0.0, 1e-12);
  const double honest = otm_information(d, honest_strategy(Side::S, 6));
  EXPECT_GT(honest, 0.0);
  EXPECT_LE(honest, 4.0 + 1e-9);
  // Against a direct joint-table computation.
  const auto fam = otm_family(d);
  const auto j = joint_distribution(honest_strategy(Side::S, 6), fam,
                                    Distribution::uniform(fam.size()));
  std::vector<double> p(j.probs().begin(), j.probs().end());
  EXPECT_NEAR(honest, oracle::mutual_info(p, j.rows(), j.cols()), 1e-10);
}

TEST(otm_information, enumerated_n4_k2_below_2k) {
  const auto d = sample_device(4, 2, 0.05, 0.0, 21, 22);
  const auto net = build_net_2outcome(1.0);
  double best = 0.0;
  enumerate_strategies(4, net, 2, 1e7, [&](const StrategyTree& t) {
    const double i = otm_information(d, t);
    EXPECT_LE(i, 4.0 + 1e-9);
    best = std::max(best, i);
  });
  EXPECT_GT(best, 0.0);
}

TEST(conditional_collision_otm, examples) {
  const auto d = sample_device(8, 2, 0.05, 0.0, 5, 6);
  EXPECT_NEAR(conditional_collision_otm(d, OutcomeRecord()).h2, 4.0, 1e-12);
  const OutcomeRecord rec({3}, {alpha_state(AlphaCode::k11).projector()});
  const auto r = conditional_collision_otm(d, rec);
  EXPECT_LT(r.identity_residual, 1e-9);
  EXPECT_NEAR(r.trace, 1.0, 1e-12);
}

TEST(split_points, examples) {
  EXPECT_NEAR(lg_eight_thirds(), 1.41504, 1e-5);
  EXPECT_EQ(split_points(20, 100, 20).m, 14);
  EXPECT_EQ(split_points(20, 100, 40).mt, 20);
  EXPECT_NEAR(double(split_points(100000, 1 << 30, 100000).m) / 100000, 0.7067, 1e-4);
  const auto tight = split_points(20, 16, 40);
  EXPECT_LE(tight.m + tight.mt, 16);
  try {
    split_points(5, 10, 4.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidH);
  }
}

TEST(phase_decomposition, chain_rule) {
  Rng rng(29);
  for (int trial = 0; trial < 5; ++trial) {
    const auto d = sample_device(8, 3, 0.05, 0.0, rng.next_u64(), rng.next_u64());
    const auto strat = random_strategy(8, 8, rng);
    const auto pd = phase_decomposition(d, strat, split_points(3, 8, 5.0));
    EXPECT_NEAR(pd.first + pd.second + pd.remainder, pd.total, 1e-9);
    EXPECT_NEAR(pd.total, otm_information(d, strat), 1e-9);
    EXPECT_LE(pd.remainder, pd.holevo_cap + 1e-9);
  }
}

TEST(phase_decomposition, degenerate_splits) {
  const auto d = sample_device(6, 2, 0.05, 0.0, 1, 2);
  const auto strat = honest_strategy(Side::T, 6);
  SplitPoints all;
  all.m = 6;
  const auto whole = phase_decomposition(d, strat, all);
  EXPECT_NEAR(whole.first, whole.total, 1e-10);
  const auto none = phase_decomposition(d, strat, SplitPoints{});
  EXPECT_DOUBLE_EQ(none.holevo_cap, 6.0);
}
