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

#include "isoqubit/strategy.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "isoqubit/hiding.hpp"
#include "isoqubit/net.hpp"
#include "oracles.hpp"

using namespace isoqubit;

namespace {

Povm computational() { return Povm::projective(alpha_state(AlphaCode::k00)); }
Povm hadamard() { return Povm::projective(alpha_state(AlphaCode::k01)); }

ProductState product(std::initializer_list<AlphaCode> codes) {
  std::vector<QubitState> q;
  for (auto c : codes) q.push_back(alpha_state(c));
  return ProductState(q);
}

// Haar-random q-outcome rank-1 POVM: rows of a random isometry C^2 -> C^q.
Povm random_rank1_povm(int q, Rng& rng) {
  MatrixC g(q, 2);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < 2; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  }
  const MatrixC v = Eigen::HouseholderQR<MatrixC>(g).householderQ() * MatrixC::Identity(q, 2);
  std::vector<Mat2> els;
  for (int i = 0; i < q; ++i) {
    const Eigen::Vector2cd w = v.row(i).adjoint();
    els.push_back(w * w.adjoint());
  }
  return Povm(els);
}

// Structural fingerprint: (qubit, member index) in depth-first order.
std::string fingerprint(const StrategyTree& t, const MeasurementNet& net) {
  if (t.is_leaf()) return ".";
  std::ostringstream os;
  os << '(' << t.qubit() << ':' << nearest_member(net, t.measurement());
  for (const auto& c : t.children()) os << fingerprint(c, net);
  os << ')';
  return os.str();
}

}  // namespace

TEST(povm, rejects_incomplete) {
  EXPECT_THROW(Povm({Mat2::Identity() * 0.5}), Error);
  EXPECT_NO_THROW(Povm({Mat2::Identity() * 0.5, Mat2::Identity() * 0.5}));
}

TEST(rank1_reduce, examples) {
  const auto unchanged = rank1_reduce(computational());
  EXPECT_TRUE(structurally_equal(unchanged.refined, computational()));
  EXPECT_EQ(unchanged.parent, (std::vector<int>{0, 1}));

  const auto halves = rank1_reduce(Povm({Mat2::Identity() * 0.5, Mat2::Identity() * 0.5}));
  ASSERT_EQ(halves.refined.outcomes(), 2U);
  EXPECT_TRUE(halves.refined[0].isApprox(Mat2::Identity() * 0.5));
  EXPECT_TRUE(halves.refined[1].isApprox(Mat2::Identity() * 0.5));

  Mat2 a = Mat2::Zero(), b = Mat2::Zero();
  a(0, 0) = 1.0;
  a(1, 1) = 0.3;
  b(1, 1) = 0.7;
  const auto r = rank1_reduce(Povm({a, b}));
  ASSERT_EQ(r.refined.outcomes(), 3U);
  EXPECT_EQ(r.parent, (std::vector<int>{0, 0, 1}));
  Mat2 p0 = Mat2::Zero(), p1 = Mat2::Zero();
  p0(0, 0) = 0.7;
  p1(1, 1) = 0.7;
  EXPECT_TRUE(r.refined[0].isApprox(Mat2::Identity() * 0.3, 1e-12));
  EXPECT_LT((r.refined[1] - p0).norm(), 1e-12);
  EXPECT_LT((r.refined[2] - p1).norm(), 1e-12);
}

TEST(net_2outcome, coarsest_has_computational_basis) {
  const auto net = build_net_2outcome(1.0);
  EXPECT_TRUE(structurally_equal(net.members[0], computational()));
  EXPECT_THROW(build_net_2outcome(0.0), Error);
  EXPECT_THROW(build_net_2outcome(1.5), Error);
}

TEST(net_2outcome, growth_rate) {
  for (double eps : {0.4, 0.2, 0.1}) {
    const double ratio = double(build_net_2outcome(eps / 2).size()) / build_net_2outcome(eps).size();
    EXPECT_GT(ratio, 2.0);
    EXPECT_LT(ratio, 8.0);
    EXPECT_LE(double(build_net_2outcome(eps).size()), kNet2Constant / (eps * eps));
  }
}

TEST(net_2outcome, covers_random_projectors) {
  const double eps = 0.3;
  const auto net = build_net_2outcome(eps);
  Rng rng(31);
  for (int i = 0; i < 10000; ++i) {
    const Povm m = Povm::projective(random_qubit_state(rng));
    ASSERT_LE(povm_distance(m, net.members[nearest_member(net, m)]), eps);
  }
}

TEST(net_qoutcome, q2_matches_two_outcome) {
  const auto a = build_net_qoutcome(2, 0.3);
  const auto b = build_net_2outcome(0.3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_TRUE(structurally_equal(a.members[i], b.members[i]));
  }
  EXPECT_THROW(build_net_qoutcome(1, 0.3), Error);
}

TEST(net_qoutcome, q3_members_valid_and_cover) {
  const double eps = 0.5;
  const auto net = build_net_qoutcome(3, eps);
  for (const auto& m : net.members) {
    ASSERT_EQ(m.outcomes(), 3U);
    ASSERT_TRUE(m.is_rank1());
    Mat2 sum = Mat2::Zero();
    for (const auto& e : m.elements()) sum += e;
    ASSERT_LT((sum - Mat2::Identity()).cwiseAbs().maxCoeff(), 1e-10);
  }
  Rng rng(37);
  for (int i = 0; i < 100; ++i) {
    const Povm m = random_rank1_povm(3, rng);
    ASSERT_LE(povm_distance(m, net.members[nearest_member(net, m)]), eps);
  }
}

TEST(strategy_tree, one_pass_enforced) {
  const auto leafs = std::vector<StrategyTree>(2);
  const auto child = StrategyTree::node(0, computational(), leafs);
  EXPECT_THROW(StrategyTree::node(0, computational(), {child, child}), Error);
  EXPECT_THROW(StrategyTree::node(1, computational(), {child}), Error);
  const auto ok = StrategyTree::node(1, computational(), {child, child});
  EXPECT_TRUE(ok.is_one_pass());
  EXPECT_EQ(ok.depth(), 2);
  EXPECT_DOUBLE_EQ(ok.leaf_count(), 4.0);
}

TEST(execute_strategy, examples) {
  const auto s = product({AlphaCode::k00, AlphaCode::k01});
  const auto d = execute_strategy(nonadaptive_strategy(2, computational()), s);
  ASSERT_EQ(d.probs.size(), 4U);
  EXPECT_NEAR(d.probs[0], 0.5, 1e-15);
  EXPECT_NEAR(d.probs[1], 0.5, 1e-15);
  EXPECT_NEAR(d.probs[2], 0.0, 1e-15);
  EXPECT_NEAR(d.probs[3], 0.0, 1e-15);
  EXPECT_EQ(d.paths[2], (std::vector<int>{1, 0}));

  const auto empty = execute_strategy(StrategyTree(), s);
  ASSERT_EQ(empty.probs.size(), 1U);
  EXPECT_DOUBLE_EQ(empty.probs[0], 1.0);
  EXPECT_TRUE(empty.paths[0].empty());

  EXPECT_THROW(execute_strategy(nonadaptive_strategy(3, computational()), s), Error);
}

TEST(execute_strategy, matches_sequential_collapse) {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<QubitState> q;
    for (int a = 0; a < 3; ++a) q.push_back(random_qubit_state(rng));
    const ProductState s(q);
    const auto tree = random_strategy(3, 3, rng);
    const auto d = execute_strategy(tree, s);
    const auto ref = oracle::sequential_collapse(tree, s);
    ASSERT_EQ(d.probs.size(), ref.size());
    double total = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
      ASSERT_NEAR(d.probs[i], ref[i], 1e-10);
      total += d.probs[i];
    }
    ASSERT_NEAR(total, 1.0, 1e-9);
  }
}

TEST(execute_strategy, three_outcome_tree_matches_collapse) {
  Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const Povm m0 = random_rank1_povm(3, rng);
    std::vector<StrategyTree> kids;
    for (int z = 0; z < 3; ++z) {
      kids.push_back(StrategyTree::node(z % 2, random_rank1_povm(3, rng),
                                        std::vector<StrategyTree>(3)));
    }
    const auto tree = StrategyTree::node(2, m0, kids);
    std::vector<QubitState> q;
    for (int a = 0; a < 3; ++a) q.push_back(random_qubit_state(rng));
    const ProductState s(q);
    const auto d = execute_strategy(tree, s);
    const auto ref = oracle::sequential_collapse(tree, s);
    for (std::size_t i = 0; i < ref.size(); ++i) ASSERT_NEAR(d.probs[i], ref[i], 1e-10);
  }
}

TEST(refine_strategy, coarse_grain_reproduces_output) {
  Rng rng(47);
  Mat2 a = Mat2::Zero();
  a(0, 0) = 0.8;
  a(1, 1) = 0.25;
  const Povm noisy({a, Mat2::Identity() - a});
  for (int trial = 0; trial < 20; ++trial) {
    const auto tree =
        StrategyTree::node(1, noisy, {nonadaptive_strategy(1, hadamard()),
                                      StrategyTree::node(0, noisy, std::vector<StrategyTree>(2))});
    const auto refined = refine_strategy(tree);
    std::vector<QubitState> q = {random_qubit_state(rng), random_qubit_state(rng)};
    const ProductState s(q);
    const auto coarse = coarse_grain(execute_strategy(refined, s));
    const auto orig = execute_strategy(tree, s);
    ASSERT_EQ(coarse.probs.size(), orig.probs.size());
    for (std::size_t i = 0; i < orig.probs.size(); ++i) {
      EXPECT_EQ(coarse.labeled[i], orig.labeled[i]);
      EXPECT_NEAR(coarse.probs[i], orig.probs[i], 1e-10);
    }
  }
}

TEST(refine_strategy, information_does_not_drop) {
  Rng rng(53);
  Mat2 a = Mat2::Zero();
  a(0, 0) = 0.9;
  a(1, 1) = 0.2;
  const Povm noisy({a, Mat2::Identity() - a});
  const auto tree = nonadaptive_strategy(2, noisy);
  for (int trial = 0; trial < 20; ++trial) {
    const auto e = sample_ensemble(2, 2, rng);
    const auto states = ensemble_states(e);
    const auto prior = Distribution::uniform(states.size());
    const double before = game_information(tree, states, prior).information;
    const double after = game_information(refine_strategy(tree), states, prior).information;
    EXPECT_GE(after, before - 1e-10);
  }
}

TEST(joint_distribution, examples) {
  const auto s = product({AlphaCode::k00, AlphaCode::k01});
  const std::vector<ProductState> one = {s};
  const auto tree = nonadaptive_strategy(2, computational());
  const auto j = joint_distribution(tree, one, Distribution::uniform(1));
  const auto d = execute_strategy(tree, s);
  for (std::size_t z = 0; z < d.probs.size(); ++z) EXPECT_NEAR(j.at(0, z), d.probs[z], 1e-15);

  const std::vector<ProductState> ortho = {product({AlphaCode::k00}), product({AlphaCode::k11})};
  const std::vector<double> prior = {0.3, 0.7};
  const auto jo = joint_distribution(nonadaptive_strategy(1, computational()), ortho,
                                     Distribution(prior));
  EXPECT_NEAR(mutual_information(jo), shannon_entropy(prior), 1e-12);
}

TEST(joint_distribution, two_qubit_hiding_by_hand) {
  // Rows (00,01) and (01,00): |0+> and |+0>. Computational readout gives
  // z = 00 w.p. 1/2, 01 and 10 w.p. 1/4 each, and H(Z|U) = 1, so I = 1/2.
  const HidingEnsemble e(1, 2, {AlphaCode::k00, AlphaCode::k01, AlphaCode::k01, AlphaCode::k00});
  const auto g = discrimination_game(e, computational_strategy(2));
  EXPECT_NEAR(g.information, 0.5, 1e-12);
  EXPECT_NEAR(g.conditional_entropy, 1.0, 1e-12);
  EXPECT_NEAR(g.output_entropy, 1.5, 1e-12);
}

TEST(strategy_distance, examples) {
  const auto a = nonadaptive_strategy(4, computational());
  const auto b = nonadaptive_strategy(4, hadamard());
  EXPECT_DOUBLE_EQ(strategy_distance(a, a, 4), 0.0);
  EXPECT_NEAR(strategy_distance(a, b, 4), std::sqrt(2.0), 1e-15);
  EXPECT_THROW(strategy_distance(a, nonadaptive_strategy(3, computational()), 4), Error);
}

TEST(strategy_distance, metric_axioms) {
  // Non-adaptive depth-4 trees over two measurement choices per step, so
  // shared prefixes of every length occur.
  const std::vector<int> order = {0, 1, 2, 3};
  Rng rng(59);
  auto sample = [&] {
    std::vector<Povm> ms;
    for (int i = 0; i < 4; ++i) ms.push_back(rng.bernoulli(0.8) ? computational() : hadamard());
    return nonadaptive_strategy(order, ms);
  };
  for (int i = 0; i < 1000; ++i) {
    const auto x = sample(), y = sample(), z = sample();
    const double xy = strategy_distance(x, y, 4);
    EXPECT_DOUBLE_EQ(xy, strategy_distance(y, x, 4));
    EXPECT_LE(strategy_distance(x, z, 4), xy + strategy_distance(y, z, 4) + 1e-12);
  }
}

TEST(count_strategies, closed_form) {
  EXPECT_DOUBLE_EQ(count_strategies(1, 7, 2, 1), 7.0);
  EXPECT_DOUBLE_EQ(count_strategies(2, 12, 2, 2), 3456.0);
  EXPECT_DOUBLE_EQ(count_strategies(3, 5, 2, 0), 1.0);
}

TEST(enumerate_strategies, counts_and_uniqueness) {
  const auto net12 = build_net_2outcome(0.5);
  ASSERT_EQ(net12.size(), 12U);
  std::uint64_t seen = 0;
  enumerate_strategies(2, net12, 2, 1e6, [&](const StrategyTree&) { ++seen; });
  EXPECT_EQ(seen, 3456U);

  const auto net = build_net_2outcome(1.0);
  std::set<std::string> keys;
  enumerate_strategies(2, net, 2, 1e6, [&](const StrategyTree& t) {
    EXPECT_TRUE(t.is_one_pass());
    EXPECT_TRUE(t.is_uniform_depth());
    keys.insert(fingerprint(t, net));
  });
  EXPECT_EQ(keys.size(), static_cast<std::size_t>(count_strategies(2, net.size(), 2, 2)));

  std::uint64_t one = 0;
  enumerate_strategies(1, net, 1, 1e6, [&](const StrategyTree&) { ++one; });
  EXPECT_EQ(one, net.size());
}

TEST(enumerate_strategies, root_ranges_partition) {
  const auto net = build_net_2outcome(1.0);
  std::vector<std::string> full, parts;
  enumerate_strategies(3, net, 2, 1e7,
                       [&](const StrategyTree& t) { full.push_back(fingerprint(t, net)); });
  for (std::size_t r = 0; r < 3 * net.size(); r += 4) {
    enumerate_strategies(
        3, net, 2, 1e7, [&](const StrategyTree& t) { parts.push_back(fingerprint(t, net)); },
        RootRange{r, r + 4});
  }
  EXPECT_EQ(full, parts);
}

TEST(enumerate_strategies, cap_reports_count) {
  const auto net = build_net_2outcome(0.5);
  try {
    enumerate_strategies(2, net, 2, 100, [](const StrategyTree&) {});
    FAIL() << "expected CapExceededError";
  } catch (const CapExceededError& e) {
    EXPECT_DOUBLE_EQ(e.count(), 3456.0);
  }
}

TEST(greedy_strategy, distinguishes_orthogonal_pair) {
  const std::vector<ProductState> pair = {product({AlphaCode::k00}), product({AlphaCode::k11})};
  const auto prior = Distribution::uniform(2);
  const auto net = build_net_2outcome(0.5);
  const auto g = greedy_strategy(pair, prior, net);
  EXPECT_TRUE(structurally_equal(g.measurement(), computational()));
  EXPECT_NEAR(game_information(g, pair, prior).information, 1.0, 1e-12);
}

TEST(greedy_strategy, below_exhaustive_and_deterministic) {
  const auto net = build_net_2outcome(0.5);
  Rng rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const auto states = ensemble_states(sample_ensemble(2, 2, rng));
    const auto prior = Distribution::uniform(states.size());
    double best = 0.0;
    enumerate_strategies(2, net, 2, 1e6, [&](const StrategyTree& t) {
      best = std::max(best, game_information(t, states, prior).information);
    });
    const auto g1 = greedy_strategy(states, prior, net);
    const auto g2 = greedy_strategy(states, prior, net);
    const double gi = game_information(g1, states, prior).information;
    EXPECT_LE(gi, best + 1e-12);
    EXPECT_EQ(fingerprint(g1, net), fingerprint(g2, net));
  }
}

TEST(discretize_strategy, within_penalty) {
  Rng rng(67);
  for (double eps : {0.05, 0.01}) {
    const auto net = build_net_2outcome(eps);
    const double penalty = discretization_penalty(2, 2, eps);
    for (int trial = 0; trial < 20; ++trial) {
      const auto states = ensemble_states(sample_ensemble(2, 2, rng));
      const auto prior = Distribution::uniform(states.size());
      const auto tree = random_strategy(2, 2, rng);
      const auto disc = discretize_strategy(tree, net);
      EXPECT_EQ(disc.qubit(), tree.qubit());
      const double di = game_information(tree, states, prior).information -
                        game_information(disc, states, prior).information;
      EXPECT_LE(std::abs(di), penalty);
    }
  }
}

TEST(game_information, matches_joint_table) {
  Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const auto states = ensemble_states(sample_ensemble(3, 4, rng));
    const auto prior = Distribution::uniform(states.size());
    const auto tree = random_strategy(4, 3, rng);
    const auto j = joint_distribution(tree, states, prior);
    const auto g = game_information(tree, states, prior);
    std::vector<double> p(j.probs().begin(), j.probs().end());
    EXPECT_NEAR(g.information, oracle::mutual_info(p, j.rows(), j.cols()), 1e-10);
  }
}

TEST(outcome_along, records_path_factors) {
  const auto tree = nonadaptive_strategy(3, hadamard());
  const std::vector<int> path = {1, 0};
  const auto rec = outcome_along(tree, path);
  ASSERT_EQ(rec.size(), 2U);
  EXPECT_EQ(rec.qubits()[0], 0);
  EXPECT_EQ(rec.qubits()[1], 1);
  EXPECT_TRUE(rec.ops()[0].isApprox(hadamard()[1]));
  EXPECT_TRUE(rec.ops()[1].isApprox(hadamard()[0]));
}
