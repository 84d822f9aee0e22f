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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

namespace isoqubit {

StrategyTree StrategyTree::node(int qubit, Povm measurement, std::vector<StrategyTree> children,
                                std::vector<int> labels) {
  if (qubit < 0 || qubit >= kMaxStrategyQubits) {
    throw Error(ErrorKind::IndexOutOfRange, "qubit " + std::to_string(qubit) + " out of range");
  }
  if (children.size() != measurement.outcomes()) {
    throw Error(ErrorKind::InvalidState, "child count differs from outcome count");
  }
  if (labels.empty()) {
    labels.resize(children.size());
    std::iota(labels.begin(), labels.end(), 0);
  } else if (labels.size() != children.size()) {
    throw Error(ErrorKind::InvalidState, "label count differs from outcome count");
  }
  QubitMask mask;
  int depth = 0;
  double leaves = 0.0;
  for (const auto& c : children) {
    if (!c.is_leaf()) {
      if (c.node_->mask.test(static_cast<std::size_t>(qubit))) {
        throw Error(ErrorKind::InvalidState,
                    "qubit " + std::to_string(qubit) + " measured twice on one path");
      }
      mask |= c.node_->mask;
    }
    depth = std::max(depth, c.depth());
    leaves += c.leaf_count();
  }
  mask.set(static_cast<std::size_t>(qubit));
  StrategyTree t;
  t.node_ = std::make_shared<const Node>(Node{qubit, std::move(measurement), std::move(children),
                                              std::move(labels), depth + 1, leaves, mask});
  return t;
}

bool StrategyTree::is_uniform_depth() const {
  if (!node_) return true;
  for (const auto& c : node_->children) {
    if (c.depth() != node_->depth - 1 || !c.is_uniform_depth()) return false;
  }
  return true;
}

const QubitMask& StrategyTree::used_qubits() const {
  static const QubitMask kEmpty;
  return node_ ? node_->mask : kEmpty;
}

bool StrategyTree::is_one_pass() const {
  if (!node_) return true;
  for (const auto& c : node_->children) {
    if (c.used_qubits().test(static_cast<std::size_t>(node_->qubit)) || !c.is_one_pass()) {
      return false;
    }
  }
  return true;
}

namespace {

void check_qubits(const StrategyTree& tree, std::size_t n) {
  const auto& mask = tree.used_qubits();
  for (std::size_t i = n; i < mask.size(); ++i) {
    if (mask.test(i)) {
      throw Error(ErrorKind::IndexOutOfRange, "strategy measures qubit " + std::to_string(i) +
                                                  " of a " + std::to_string(n) + "-qubit state");
    }
  }
}

void probs_rec(const StrategyTree& t, const ProductState& s, double mass, std::vector<double>& out) {
  if (t.is_leaf()) {
    out.push_back(mass);
    return;
  }
  const auto& m = t.measurement();
  const auto& psi = s[static_cast<std::size_t>(t.qubit())];
  for (std::size_t i = 0; i < m.outcomes(); ++i) {
    probs_rec(t.children()[i], s, mass * m.probability(psi, i), out);
  }
}

void paths_rec(const StrategyTree& t, std::vector<int>& raw, std::vector<int>& lab,
               std::vector<std::vector<int>>* raws, std::vector<std::vector<int>>* labs) {
  if (t.is_leaf()) {
    if (raws) raws->push_back(raw);
    if (labs) labs->push_back(lab);
    return;
  }
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    raw.push_back(static_cast<int>(i));
    lab.push_back(t.labels()[i]);
    paths_rec(t.children()[i], raw, lab, raws, labs);
    raw.pop_back();
    lab.pop_back();
  }
}

double xlog2x(double p) { return p > kEntropyFloor ? p * std::log2(p) : 0.0; }

}  // namespace

void leaf_probabilities(const StrategyTree& tree, const ProductState& state,
                        std::vector<double>& out) {
  check_qubits(tree, state.size());
  out.clear();
  probs_rec(tree, state, 1.0, out);
}

std::vector<std::vector<int>> leaf_paths(const StrategyTree& tree) {
  std::vector<std::vector<int>> out;
  std::vector<int> raw, lab;
  paths_rec(tree, raw, lab, &out, nullptr);
  return out;
}

OutcomeDistribution execute_strategy(const StrategyTree& tree, const ProductState& state) {
  OutcomeDistribution d;
  leaf_probabilities(tree, state, d.probs);
  std::vector<int> raw, lab;
  paths_rec(tree, raw, lab, &d.paths, &d.labeled);
  return d;
}

OutcomeDistribution coarse_grain(const OutcomeDistribution& fine) {
  OutcomeDistribution out;
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < fine.labeled.size(); ++i) {
    auto [it, fresh] = index.try_emplace(fine.labeled[i], out.probs.size());
    if (fresh) {
      out.paths.push_back(fine.labeled[i]);
      out.labeled.push_back(fine.labeled[i]);
      out.probs.push_back(0.0);
    }
    out.probs[it->second] += fine.probs[i];
  }
  return out;
}

JointTable joint_distribution(const StrategyTree& tree, std::span<const ProductState> family,
                              const Distribution& prior) {
  if (family.size() != prior.size()) {
    throw Error(ErrorKind::DimensionMismatch, "family and prior sizes differ");
  }
  const auto leaves = static_cast<std::size_t>(tree.leaf_count());
  JointTable joint(family.size(), leaves);
  std::vector<double> p;
  for (std::size_t u = 0; u < family.size(); ++u) {
    leaf_probabilities(tree, family[u], p);
    for (std::size_t z = 0; z < leaves; ++z) joint.at(u, z) = prior[u] * p[z];
  }
  return joint;
}

GameStats game_information(const StrategyTree& tree, std::span<const ProductState> family,
                           const Distribution& prior) {
  if (family.size() != prior.size()) {
    throw Error(ErrorKind::DimensionMismatch, "family and prior sizes differ");
  }
  std::vector<double> marginal;
  std::vector<double> p;
  double cond = 0.0;
  for (std::size_t u = 0; u < family.size(); ++u) {
    leaf_probabilities(tree, family[u], p);
    if (marginal.empty()) marginal.assign(p.size(), 0.0);
    double h = 0.0;
    for (std::size_t z = 0; z < p.size(); ++z) {
      marginal[z] += prior[u] * p[z];
      h -= xlog2x(p[z]);
    }
    cond += prior[u] * h;
  }
  GameStats g;
  g.output_entropy = shannon_entropy(std::span<const double>(marginal));
  g.conditional_entropy = cond;
  g.information = std::max(0.0, g.output_entropy - cond);
  return g;
}

int common_prefix_depth(const StrategyTree& a, const StrategyTree& b) {
  if (a.is_leaf() || b.is_leaf()) return 0;
  if (a.same_node(b)) return a.depth();
  if (a.qubit() != b.qubit() || !structurally_equal(a.measurement(), b.measurement())) return 0;
  int best = -1;
  for (std::size_t i = 0; i < a.children().size(); ++i) {
    const int d = common_prefix_depth(a.children()[i], b.children()[i]);
    best = best < 0 ? d : std::min(best, d);
  }
  return 1 + std::max(best, 0);
}

double strategy_distance(const StrategyTree& a, const StrategyTree& b, int nb) {
  if (a.depth() != nb || b.depth() != nb || !a.is_uniform_depth() || !b.is_uniform_depth()) {
    throw Error(ErrorKind::DepthMismatch, "strategies must both have depth " + std::to_string(nb));
  }
  const int l = common_prefix_depth(a, b);
  return std::sqrt(2.0) * std::pow(2.0, -nb / 2.0) * (nb - l);
}

double count_strategies(int available, std::size_t members, int q, int depth) {
  if (depth <= 0) return 1.0;
  if (available < depth) return 0.0;
  const double sub = count_strategies(available - 1, members, q, depth - 1);
  return static_cast<double>(available) * static_cast<double>(members) * std::pow(sub, q);
}

namespace {

using Visit = std::function<void(const StrategyTree&)>;

void enum_rec(const std::vector<int>& available, const MeasurementNet& net, int depth,
              const Visit& visit, std::size_t root_begin, std::size_t root_end) {
  if (depth == 0) {
    visit(StrategyTree{});
    return;
  }
  const std::size_t q = static_cast<std::size_t>(net.q);
  for (std::size_t ai = 0; ai < available.size(); ++ai) {
    std::vector<int> rest;
    rest.reserve(available.size() - 1);
    for (std::size_t j = 0; j < available.size(); ++j) {
      if (j != ai) rest.push_back(available[j]);
    }
    for (std::size_t mi = 0; mi < net.size(); ++mi) {
      const std::size_t root = ai * net.size() + mi;
      if (root < root_begin || root >= root_end) continue;
      std::vector<StrategyTree> children(q);
      // Fill children left to right; child 0 is the outermost loop.
      std::function<void(std::size_t)> fill = [&](std::size_t i) {
        if (i == q) {
          visit(StrategyTree::node(available[ai], net.members[mi], children));
          return;
        }
        enum_rec(rest, net, depth - 1, [&](const StrategyTree& c) {
          children[i] = c;
          fill(i + 1);
        }, 0, static_cast<std::size_t>(-1));
      };
      fill(0);
    }
  }
}

}  // namespace

void enumerate_strategies(int n, const MeasurementNet& net, int depth, double cap,
                          const std::function<void(const StrategyTree&)>& visit, RootRange roots) {
  if (n < 0 || n > kMaxStrategyQubits || depth < 0 || depth > n) {
    throw Error(ErrorKind::DepthMismatch, "depth must lie in [0, n]");
  }
  const double count = count_strategies(n, net.size(), net.q, depth);
  if (count > cap) throw CapExceededError(count, cap);
  std::vector<int> available(static_cast<std::size_t>(n));
  std::iota(available.begin(), available.end(), 0);
  enum_rec(available, net, depth, visit, roots.begin, roots.end);
}

StrategyTree greedy_strategy(std::span<const ProductState> family, const Distribution& prior,
                             const MeasurementNet& net, int max_depth) {
  if (family.empty() || family.size() != prior.size()) {
    throw Error(ErrorKind::DimensionMismatch, "family and prior sizes differ");
  }
  const std::size_t n = family[0].size();
  const std::size_t nu = family.size();
  const std::size_t q = static_cast<std::size_t>(net.q);
  const std::size_t nl = net.size();
  if (max_depth < 0 || static_cast<std::size_t>(max_depth) > n) max_depth = static_cast<int>(n);

  // Per qubit: distinct single-qubit states across the family and the
  // outcome law of each net member on each of them.
  std::vector<std::vector<std::size_t>> group(n, std::vector<std::size_t>(nu));
  std::vector<std::size_t> ngroups(n);
  std::vector<std::vector<double>> table(n);  // [(g * nl + m) * q + o]
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<QubitState> distinct;
    for (std::size_t u = 0; u < nu; ++u) {
      const auto& s = family[u][a];
      std::size_t g = 0;
      while (g < distinct.size() &&
             !(distinct[g].amp0() == s.amp0() && distinct[g].amp1() == s.amp1())) {
        ++g;
      }
      if (g == distinct.size()) distinct.push_back(s);
      group[a][u] = g;
    }
    ngroups[a] = distinct.size();
    table[a].resize(distinct.size() * nl * q);
    for (std::size_t g = 0; g < distinct.size(); ++g) {
      for (std::size_t m = 0; m < nl; ++m) {
        for (std::size_t o = 0; o < q; ++o) {
          table[a][(g * nl + m) * q + o] = net.members[m].probability(distinct[g], o);
        }
      }
    }
  }

  std::function<StrategyTree(const std::vector<double>&, const QubitMask&, int)> grow =
      [&](const std::vector<double>& w, const QubitMask& used, int remaining) -> StrategyTree {
    if (remaining == 0) return StrategyTree{};
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    double best_gain = -1.0;
    std::size_t best_a = 0, best_m = 0;
    std::vector<double> gw;
    std::vector<double> mix(q);
    for (std::size_t a = 0; a < n; ++a) {
      if (used.test(a)) continue;
      gw.assign(ngroups[a], 0.0);
      if (total > 0.0) {
        for (std::size_t u = 0; u < nu; ++u) gw[group[a][u]] += w[u] / total;
      }
      for (std::size_t m = 0; m < nl; ++m) {
        std::fill(mix.begin(), mix.end(), 0.0);
        double cond = 0.0;
        for (std::size_t g = 0; g < ngroups[a]; ++g) {
          if (gw[g] == 0.0) continue;
          const double* p = &table[a][(g * nl + m) * q];
          double h = 0.0;
          for (std::size_t o = 0; o < q; ++o) {
            mix[o] += gw[g] * p[o];
            h -= xlog2x(p[o]);
          }
          cond += gw[g] * h;
        }
        double hm = 0.0;
        for (double x : mix) hm -= xlog2x(x);
        const double gain = hm - cond;
        if (gain > best_gain + 1e-12) {
          best_gain = gain;
          best_a = a;
          best_m = m;
        }
      }
    }
    QubitMask next = used;
    next.set(best_a);
    std::vector<StrategyTree> children;
    children.reserve(q);
    std::vector<double> wc(nu);
    const double* base = &table[best_a][0];
    for (std::size_t o = 0; o < q; ++o) {
      for (std::size_t u = 0; u < nu; ++u) {
        wc[u] = w[u] * base[(group[best_a][u] * nl + best_m) * q + o];
      }
      children.push_back(grow(wc, next, remaining - 1));
    }
    return StrategyTree::node(static_cast<int>(best_a), net.members[best_m], std::move(children));
  };

  std::vector<double> w(prior.probs().begin(), prior.probs().end());
  return grow(w, QubitMask{}, max_depth);
}

StrategyTree nonadaptive_strategy(int n, const Povm& measurement) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<Povm> ms(static_cast<std::size_t>(n), measurement);
  return nonadaptive_strategy(order, ms);
}

StrategyTree nonadaptive_strategy(std::span<const int> order, std::span<const Povm> measurements) {
  if (order.size() != measurements.size()) {
    throw Error(ErrorKind::DimensionMismatch, "one measurement per listed qubit required");
  }
  StrategyTree t;
  for (std::size_t i = order.size(); i-- > 0;) {
    std::vector<StrategyTree> children(measurements[i].outcomes(), t);
    t = StrategyTree::node(order[i], measurements[i], std::move(children));
  }
  return t;
}

StrategyTree random_strategy(int n, int depth, Rng& rng) {
  if (depth < 0 || depth > n) throw Error(ErrorKind::DepthMismatch, "depth must lie in [0, n]");
  std::function<StrategyTree(std::vector<int>, int)> grow = [&](std::vector<int> avail,
                                                                int left) -> StrategyTree {
    if (left == 0) return StrategyTree{};
    const auto pick = static_cast<std::size_t>(rng.below(avail.size()));
    const int qubit = avail[pick];
    avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(pick));
    const Povm m = Povm::projective(random_qubit_state(rng));
    std::vector<StrategyTree> children;
    for (std::size_t o = 0; o < m.outcomes(); ++o) children.push_back(grow(avail, left - 1));
    return StrategyTree::node(qubit, m, std::move(children));
  };
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  return grow(all, depth);
}

namespace {

template <typename F>
StrategyTree map_tree(const StrategyTree& t, std::map<const void*, StrategyTree>& memo,
                      const F& f) {
  if (t.is_leaf()) return t;
  const void* key = &t.measurement();
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::vector<StrategyTree> kids;
  for (const auto& c : t.children()) kids.push_back(map_tree(c, memo, f));
  StrategyTree out = f(t, std::move(kids));
  memo.emplace(key, out);
  return out;
}

}  // namespace

StrategyTree refine_strategy(const StrategyTree& tree) {
  std::map<const void*, StrategyTree> memo;
  return map_tree(tree, memo, [](const StrategyTree& t, std::vector<StrategyTree> kids) {
    auto r = rank1_reduce(t.measurement());
    std::vector<StrategyTree> children;
    std::vector<int> labels;
    for (int p : r.parent) {
      children.push_back(kids[static_cast<std::size_t>(p)]);
      labels.push_back(t.labels()[static_cast<std::size_t>(p)]);
    }
    return StrategyTree::node(t.qubit(), std::move(r.refined), std::move(children),
                              std::move(labels));
  });
}

StrategyTree discretize_strategy(const StrategyTree& tree, const MeasurementNet& net) {
  std::map<const void*, StrategyTree> memo;
  return map_tree(tree, memo, [&](const StrategyTree& t, std::vector<StrategyTree> kids) {
    const auto& m = net.members[nearest_member(net, t.measurement())];
    return StrategyTree::node(t.qubit(), m, std::move(kids), t.labels());
  });
}

OutcomeRecord outcome_along(const StrategyTree& tree, std::span<const int> path) {
  std::vector<int> qubits;
  std::vector<Mat2> ops;
  StrategyTree t = tree;
  for (int step : path) {
    if (t.is_leaf()) throw Error(ErrorKind::DepthMismatch, "path longer than the strategy");
    if (step < 0 || static_cast<std::size_t>(step) >= t.children().size()) {
      throw Error(ErrorKind::IndexOutOfRange, "outcome index out of range");
    }
    qubits.push_back(t.qubit());
    ops.push_back(t.measurement()[static_cast<std::size_t>(step)]);
    t = t.children()[static_cast<std::size_t>(step)];
  }
  return OutcomeRecord(std::move(qubits), std::move(ops));
}

}  // namespace isoqubit
