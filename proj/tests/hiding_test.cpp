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

#include "isoqubit/hiding.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"

using namespace isoqubit;

namespace {

// H_2(U | M_A) from likelihoods computed by dense contraction.
double collision_oracle(std::span<const ProductState> family, const OutcomeRecord& rec) {
  std::vector<double> post;
  double total = 0.0;
  for (const auto& s : family) {
    post.push_back(oracle::dense_expectation(s, rec));
    total += post.back();
  }
  double sq = 0.0;
  for (double p : post) sq += (p / total) * (p / total);
  return -std::log2(sq);
}

}  // namespace

TEST(sample_ensemble, examples) {
  Rng a(1), b(1);
  const auto e0 = sample_ensemble(0, 5, a);
  EXPECT_EQ(e0.rows(), 1U);
  Rng c(2), d(2);
  EXPECT_EQ(sample_ensemble(4, 6, c), sample_ensemble(4, 6, d));
  EXPECT_THROW(sample_ensemble(15, 3, b), Error);
  EXPECT_THROW(sample_ensemble(3, 15, b), Error);
}

TEST(sample_ensemble, codes_uniform) {
  Rng rng(3);
  std::vector<long> counts(4, 0);
  long total = 0;
  for (int s = 0; s < 20; ++s) {
    const auto e = sample_ensemble(6, 10, rng);
    for (auto code : e.codes()) {
      ++counts[static_cast<int>(code)];
      ++total;
    }
  }
  const double sigma = std::sqrt(0.25 * 0.75 / total);
  for (long c : counts) EXPECT_NEAR(double(c) / total, 0.25, 3 * sigma);
}

TEST(encode_hiding, examples) {
  const HidingEnsemble e(1, 2, {AlphaCode::k00, AlphaCode::k00, AlphaCode::k00, AlphaCode::k01});
  const auto zero = encode_hiding(e, 0);
  EXPECT_NEAR(std::abs(zero.dense()(0) - 1.0), 0.0, 1e-15);
  const auto v = encode_hiding(e, 1).dense();
  EXPECT_NEAR(v(0).real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(v(1).real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::abs(encode_hiding(e, 1).inner(encode_hiding(e, 1))), 1.0, 1e-15);
  EXPECT_THROW(encode_hiding(e, 2), Error);
}

TEST(pgm, orthonormal_is_projective) {
  const HidingEnsemble e(2, 2, {AlphaCode::k00, AlphaCode::k00, AlphaCode::k00, AlphaCode::k11,
                                AlphaCode::k11, AlphaCode::k00, AlphaCode::k11, AlphaCode::k11});
  const auto states = ensemble_states(e);
  const auto pgm = pgm_build(states);
  EXPECT_LT((pgm.completeness() - MatrixC::Identity(4, 4)).norm(), 1e-10);
  const auto ps = pgm_success(e);
  EXPECT_NEAR(ps.probability, 1.0, 1e-12);
  EXPECT_LE(ps.gram_bound, 1.0);
}

TEST(pgm, helstrom_pair) {
  const std::vector<ProductState> pair = {ProductState({alpha_state(AlphaCode::k00)}),
                                          ProductState({alpha_state(AlphaCode::k01)})};
  const double h = oracle::helstrom(alpha_state(AlphaCode::k00), alpha_state(AlphaCode::k01));
  EXPECT_NEAR(h, 0.85355, 1e-5);
  EXPECT_NEAR(pgm_success(pair).probability, h, 1e-12);
  // The dense PGM agrees with the Gram route.
  const auto pgm = pgm_build(pair);
  double p = 0.0;
  for (int z = 0; z < 2; ++z) {
    p += 0.5 * std::norm(pgm.vectors.col(z).dot(pair[z].dense()));
  }
  EXPECT_NEAR(p, h, 1e-12);
}

TEST(pgm, completeness_and_routes_agree) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto states = ensemble_states(sample_ensemble(3, 5, rng));
    const auto pgm = pgm_build(states);
    // Projector onto the span: idempotent and fixes every state.
    const MatrixC pi = pgm.completeness();
    EXPECT_LT((pi * pi - pi).norm(), 1e-8);
    for (const auto& s : states) EXPECT_LT((pi * s.dense() - s.dense()).norm(), 1e-8);
    double dense = 0.0;
    for (std::size_t u = 0; u < states.size(); ++u) {
      dense += std::norm(pgm.vectors.col(static_cast<Eigen::Index>(u)).dot(states[u].dense()));
    }
    dense /= static_cast<double>(states.size());
    const auto ps = pgm_success(states);
    EXPECT_NEAR(ps.probability, dense, 1e-10);
    EXPECT_GE(ps.probability, ps.gram_bound);
  }
}

TEST(pgm, mean_success_at_n10_nb3) {
  double total = 0.0;
  for (int seed = 0; seed < 100; ++seed) {
    Rng rng(derive_seed(99, seed));
    const auto ps = pgm_success(sample_ensemble(3, 10, rng));
    EXPECT_GE(ps.probability, ps.gram_bound);
    total += ps.probability;
  }
  EXPECT_GE(total / 100, 0.9);
}

TEST(pgm, info_bound_when_precondition_holds) {
  for (int seed = 0; seed < 30; ++seed) {
    Rng rng(derive_seed(7, seed));
    const auto states = ensemble_states(sample_ensemble(4, 12, rng));
    const double eps = std::max(0.0, 1.0 - pgm_success(states).probability);
    if (!success_to_info_precondition(eps, 4)) continue;
    EXPECT_GE(mutual_information(pgm_joint(states)), success_to_info_bound(eps, 4) - 1e-9);
  }
}

TEST(pgm, dimension_cap) {
  Rng rng(1);
  const auto states = ensemble_states(sample_ensemble(11, 14, rng));
  EXPECT_THROW(pgm_build(states), Error);
}

TEST(gram, mean_squared_frobenius) {
  std::vector<double> xs;
  for (int seed = 0; seed < 200; ++seed) {
    Rng rng(derive_seed(2026, seed));
    const double f = gram_frobenius(ensemble_states(sample_ensemble(4, 10, rng)));
    xs.push_back(f * f);
  }
  double mean = 0.0, var = 0.0;
  for (double x : xs) mean += x / xs.size();
  for (double x : xs) var += (x - mean) * (x - mean) / (xs.size() - 1);
  EXPECT_NEAR(mean, 16.0 * 15.0 / 1024.0, 3 * std::sqrt(var / xs.size()));
}

TEST(discrimination_game, computational_oracle) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto e = sample_ensemble(3, 6, rng);
    double mixed = 0.0;
    for (auto c : e.codes()) mixed += (c == AlphaCode::k01 || c == AlphaCode::k10);
    const auto g = discrimination_game(e, computational_strategy(6));
    EXPECT_NEAR(g.conditional_entropy, mixed / e.rows(), 1e-12);
    EXPECT_LE(g.information, 6 - g.conditional_entropy + 1e-12);
  }
  EXPECT_NEAR(discrimination_game(sample_ensemble(3, 6, rng), StrategyTree()).information, 0.0,
              1e-15);
}

TEST(discrimination_game, conditional_entropy_mean_half_n) {
  std::vector<double> xs;
  for (int seed = 0; seed < 50; ++seed) {
    Rng rng(derive_seed(31, seed));
    xs.push_back(
        discrimination_game(sample_ensemble(6, 10, rng), computational_strategy(10))
            .conditional_entropy);
  }
  double mean = 0.0, var = 0.0;
  for (double x : xs) mean += x / xs.size();
  for (double x : xs) var += (x - mean) * (x - mean) / (xs.size() - 1);
  EXPECT_NEAR(mean, 5.0, 3 * std::sqrt(var / xs.size()) + 1e-9);
}

TEST(conditional_collision, examples) {
  Rng rng(13);
  const auto e = sample_ensemble(4, 6, rng);
  const auto empty = conditional_collision(e, OutcomeRecord());
  EXPECT_NEAR(empty.h2, 4.0, 1e-12);

  const auto states = ensemble_states(e);
  const Mat2 zero = alpha_state(AlphaCode::k00).projector();
  const OutcomeRecord rec({2}, {zero});
  const auto r = conditional_collision(e, rec);
  EXPECT_NEAR(r.h2, collision_oracle(states, rec), 1e-10);
  EXPECT_NEAR(r.probability, r.dense_probability, 1e-12);
  EXPECT_LT(r.identity_residual, 1e-9);
}

TEST(conditional_collision, random_outcomes_match_oracle) {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto e = sample_ensemble(3, 5, rng);
    const auto states = ensemble_states(e);
    std::vector<int> qs = {static_cast<int>(rng.below(5))};
    int other = static_cast<int>(rng.below(5));
    if (other != qs[0]) qs.push_back(other);
    std::vector<Mat2> ops;
    for (std::size_t i = 0; i < qs.size(); ++i) {
      ops.push_back((0.2 + 0.8 * rng.uniform01()) * random_qubit_state(rng).projector());
    }
    const OutcomeRecord rec(qs, ops);
    const auto r = conditional_collision(e, rec);
    EXPECT_NEAR(r.h2, collision_oracle(states, rec), 1e-9);
    EXPECT_LT(r.identity_residual, 1e-9);
  }
}

TEST(collision_scan, small_scan_consistent) {
  Rng rng(19);
  const auto states = ensemble_states(sample_ensemble(5, 6, rng));
  const auto net = build_net_2outcome(1.0);
  const auto scan = collision_scan(states, net, 2, 1e7);
  // 15 subsets, 10 factors per qubit.
  EXPECT_LE(scan.outcomes, 15U * 100U);
  EXPECT_GT(scan.outcomes, 0U);
  EXPECT_LT(scan.max_identity_residual, 1e-9);
  EXPECT_NEAR(scan.min_h2, collision_oracle(states, scan.argmin), 1e-9);
  EXPECT_THROW(collision_scan(states, net, 2, 10), CapExceededError);
}
