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

// 1-pass LOCC measurement strategies in the isolated-qubits model.
//
// A strategy is a decision tree: each internal node names the qubit to
// measure and the single-qubit POVM to apply, and has one child per
// outcome. Along every root-to-leaf path no qubit repeats. Trees are
// immutable and share subtrees, so a depth-n non-adaptive tree costs O(n)
// memory even though it has q^n leaves.

#include <bitset>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "isoqubit/entropy.hpp"
#include "isoqubit/net.hpp"
#include "isoqubit/povm.hpp"

namespace isoqubit {

inline constexpr int kMaxStrategyQubits = 256;
using QubitMask = std::bitset<kMaxStrategyQubits>;

class StrategyTree {
 public:
  // The empty (depth-0) strategy; also the leaf marker.
  StrategyTree() = default;

  // Throws InvalidState if a child already measures `qubit` or if the child
  // count differs from the POVM's outcome count. `labels` (default
  // 0..q-1) are the outcome symbols reported for each child; refinements
  // reuse a label to coarse-grain.
  static StrategyTree node(int qubit, Povm measurement, std::vector<StrategyTree> children,
                           std::vector<int> labels = {});

  bool is_leaf() const { return !node_; }
  int qubit() const { return node_->qubit; }
  const Povm& measurement() const { return node_->measurement; }
  const std::vector<StrategyTree>& children() const { return node_->children; }
  const std::vector<int>& labels() const { return node_->labels; }

  // Longest root-to-leaf path.
  int depth() const { return node_ ? node_->depth : 0; }
  // Every root-to-leaf path has length depth().
  bool is_uniform_depth() const;
  const QubitMask& used_qubits() const;
  // Number of root-to-leaf paths, as a double (can exceed 2^64).
  double leaf_count() const { return node_ ? node_->leaves : 1.0; }

  // Re-validates the 1-pass property over the whole tree.
  bool is_one_pass() const;

  bool same_node(const StrategyTree& other) const { return node_ == other.node_; }

 private:
  struct Node {
    int qubit;
    Povm measurement;
    std::vector<StrategyTree> children;
    std::vector<int> labels;
    int depth;
    double leaves;
    QubitMask mask;
  };
  std::shared_ptr<const Node> node_;
};

// Leaf paths in depth-first order (child 0 first). `paths` hold child
// indices; `labeled` hold the reported outcome symbols.
struct OutcomeDistribution {
  std::vector<std::vector<int>> paths;
  std::vector<std::vector<int>> labeled;
  std::vector<double> probs;
};

OutcomeDistribution execute_strategy(const StrategyTree& tree, const ProductState& state);
// Same leaf order as execute_strategy, probabilities only.
void leaf_probabilities(const StrategyTree& tree, const ProductState& state,
                        std::vector<double>& out);
// Leaf paths only (child indices, depth-first).
std::vector<std::vector<int>> leaf_paths(const StrategyTree& tree);
// Merges leaves whose labeled paths coincide (first-occurrence order).
OutcomeDistribution coarse_grain(const OutcomeDistribution& fine);

// Pr[u, z] = prior(u) Pr[z | u]; rows are family indices, columns the
// leaves of the tree in depth-first order.
JointTable joint_distribution(const StrategyTree& tree, std::span<const ProductState> family,
                              const Distribution& prior);

struct GameStats {
  double information = 0.0;          // I(Z;U)
  double conditional_entropy = 0.0;  // H(Z|U)
  double output_entropy = 0.0;       // H(Z)
};
// Streaming I(Z;U): memory proportional to the leaf count, not
// family size x leaf count.
GameStats game_information(const StrategyTree& tree, std::span<const ProductState> family,
                           const Distribution& prior);

// Longest prefix depth on which the two trees agree everywhere (same qubit
// and structurally equal measurement at every node reached).
int common_prefix_depth(const StrategyTree& a, const StrategyTree& b);
// sqrt(2) 2^(-nb/2) (nb - l); both trees must have depth nb.
double strategy_distance(const StrategyTree& a, const StrategyTree& b, int nb);

// Exact number of 1-pass trees of the given depth over `available` qubits
// with `members` choices of q-outcome measurement at each node.
double count_strategies(int available, std::size_t members, int q, int depth);

// Half-open range of root choices (qubit-major: root index = qubit_rank *
// |net| + member) to enumerate, for splitting work across workers.
struct RootRange {
  std::size_t begin = 0;
  std::size_t end = static_cast<std::size_t>(-1);
};

// Visits every 1-pass tree of the given depth over qubits [0, n) using
// members of `net`, each exactly once: depth-first, qubit ascending, net
// index ascending, child 0's subtree varying slowest. Throws
// CapExceededError (with the exact count) when the count exceeds `cap`.
void enumerate_strategies(int n, const MeasurementNet& net, int depth, double cap,
                          const std::function<void(const StrategyTree&)>& visit,
                          RootRange roots = {});

// Greedy one-step information maximization over (unmeasured qubit, net
// member); ties go to the lowest qubit index, then the lowest member index.
// max_depth < 0 means measure every qubit.
StrategyTree greedy_strategy(std::span<const ProductState> family, const Distribution& prior,
                             const MeasurementNet& net, int max_depth = -1);

// Measures qubits 0..n-1 in order with the given POVM (same at every
// node), non-adaptively.
StrategyTree nonadaptive_strategy(int n, const Povm& measurement);
StrategyTree nonadaptive_strategy(std::span<const int> order, std::span<const Povm> measurements);

// Random adaptive tree of uniform depth: every node picks a uniformly
// random unmeasured qubit and a Haar-random projective measurement.
StrategyTree random_strategy(int n, int depth, Rng& rng);

// Replaces every node's POVM by its rank1_reduce refinement; each new child
// carries the original outcome as its label, so coarse_grain of the
// refined output reproduces the original output distribution.
StrategyTree refine_strategy(const StrategyTree& tree);

// Replaces every node's measurement by its nearest member of `net`
// (same qubit choices, same tree shape).
StrategyTree discretize_strategy(const StrategyTree& tree, const MeasurementNet& net);

// The outcome record M_A reached by following `path` (child indices) from
// the root for path.size() steps.
OutcomeRecord outcome_along(const StrategyTree& tree, std::span<const int> path);

}  // namespace isoqubit
