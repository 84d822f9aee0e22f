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

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <string>

namespace isoqubit {

void validate_device(const OtmDevice& device) {
  const auto& p = device.params;
  for (const RandomCode* c : {&device.code_c, &device.code_d}) {
    if (c->k() != p.k || c->n() != p.n) {
      throw Error(ErrorKind::DimensionMismatch, "code dimensions differ from device parameters");
    }
  }
}

OtmDevice sample_device(int n, int k, double theta, double tau, std::uint64_t seed_c,
                        std::uint64_t seed_d) {
  CodeParams p;
  if (k <= 0) {
    p = derive_params(n, theta, tau);
  } else {
    if (n < 1) throw Error(ErrorKind::RateTooLow, "n must be positive");
    if (k > kMaxCodeBits) throw Error(ErrorKind::TooLarge, "k exceeds the table cap 20");
    const double pe = channel_error_probability();
    if (!(tau >= 0.0) || tau > 0.5 - pe) {
      throw Error(ErrorKind::InvalidSlacks, "tau must lie in [0, 1/2 - p_e]");
    }
    p.n = n;
    p.k = k;
    p.theta = theta;
    p.tau = tau;
    p.p_e = pe;
    p.r = n * (pe + tau);
  }
  Rng rc(seed_c);
  Rng rd(seed_d);
  OtmDevice d{p, sample_code(p.k, n, rc), sample_code(p.k, n, rd), seed_c, seed_d};
  return d;
}

ProductState otm_encode(const OtmDevice& device, std::uint64_t s, std::uint64_t t) {
  if (s >= device.code_c.size() || t >= device.code_d.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "message index >= 2^k");
  }
  const BitVec& c = device.code_c[s];
  const BitVec& d = device.code_d[t];
  std::vector<QubitState> qs;
  qs.reserve(static_cast<std::size_t>(device.params.n));
  for (int a = 0; a < device.params.n; ++a) qs.push_back(alpha_state(alpha_code(c.get(a), d.get(a))));
  return ProductState(std::move(qs));
}

std::vector<ProductState> otm_family(const OtmDevice& device) {
  if (device.params.k > kMaxExactOtmBits) {
    throw Error(ErrorKind::TooLarge, "exact joints need k <= 6");
  }
  const std::uint64_t m = std::uint64_t{1} << device.params.k;
  std::vector<ProductState> out;
  out.reserve(m * m);
  for (std::uint64_t s = 0; s < m; ++s) {
    for (std::uint64_t t = 0; t < m; ++t) out.push_back(otm_encode(device, s, t));
  }
  return out;
}

Povm honest_basis(Side side) {
  const double base = side == Side::S ? std::numbers::pi / 8.0 : -std::numbers::pi / 8.0;
  const Mat2 p0 = beta_state(base).projector();
  const Mat2 p1 = beta_state(base + std::numbers::pi / 2.0).projector();
  return Povm::rank1({p0, p1});
}

StrategyTree honest_strategy(Side side, int n) { return nonadaptive_strategy(n, honest_basis(side)); }

HonestResult honest_recover(const OtmDevice& device, std::uint64_t s, std::uint64_t t, Side side,
                            Rng& rng, bool noiseless) {
  const RandomCode& code = side == Side::S ? device.code_c : device.code_d;
  const BitVec& truth = side == Side::S ? device.code_c[s] : device.code_d[t];
  const ProductState state = otm_encode(device, s, t);
  const Povm basis = honest_basis(side);
  BitVec z(device.params.n);
  HonestResult r;
  for (int a = 0; a < device.params.n; ++a) {
    bool bit;
    if (noiseless) {
      bit = truth.get(a);
    } else {
      bit = !rng.bernoulli(basis.probability(state[static_cast<std::size_t>(a)], 0));
    }
    z.set(a, bit);
    r.bit_errors += bit != truth.get(a) ? 1 : 0;
  }
  r.message = nearest_codeword_decode(code, z);
  r.success = r.message == (side == Side::S ? s : t);
  return r;
}

HonestStats honest_monte_carlo(int n, int k, int codes, int trials, Side side,
                               std::uint64_t seed) {
  HonestStats st;
  for (int j = 0; j < codes; ++j) {
    const std::uint64_t cs = derive_seed(seed, static_cast<std::uint64_t>(j));
    const OtmDevice dev = sample_device(n, k, 0.0, 0.0, derive_seed(cs, 0), derive_seed(cs, 1));
    Rng rng(derive_seed(cs, 2));
    for (int i = 0; i < trials; ++i) {
      const std::uint64_t s = rng.below(dev.code_c.size());
      const std::uint64_t t = rng.below(dev.code_d.size());
      const HonestResult r = honest_recover(dev, s, t, side, rng);
      ++st.trials;
      st.successes += r.success ? 1 : 0;
      st.qubits += static_cast<std::uint64_t>(n);
      st.bit_errors += static_cast<std::uint64_t>(r.bit_errors);
    }
  }
  return st;
}

StrategyTree leak_strategy(int n) {
  return nonadaptive_strategy(n, Povm::projective(alpha_state(AlphaCode::k00)));
}

namespace {

constexpr double kMaxExactLeaves = double(1 << 20);

void check_exact(const OtmDevice& device, const StrategyTree& strategy) {
  if (device.params.k > kMaxExactOtmBits) {
    throw Error(ErrorKind::TooLarge, "exact joints need k <= 6");
  }
  if (strategy.leaf_count() > kMaxExactLeaves) {
    throw Error(ErrorKind::TooLarge, "strategy has more than 2^20 leaves");
  }
}

}  // namespace

double otm_information(const OtmDevice& device, const StrategyTree& strategy) {
  check_exact(device, strategy);
  const auto family = otm_family(device);
  return game_information(strategy, family, Distribution::uniform(family.size())).information;
}

LeakReport leak_eval(const OtmDevice& device, double theta) {
  if (device.params.n > 12) throw Error(ErrorKind::TooLarge, "leak evaluation needs n <= 12");
  return leak_eval(device, leak_strategy(device.params.n), theta);
}

LeakReport leak_eval(const OtmDevice& device, const StrategyTree& strategy, double theta) {
  check_exact(device, strategy);
  const auto family = otm_family(device);
  const JointTable joint =
      joint_distribution(strategy, family, Distribution::uniform(family.size()));
  LeakReport rep;
  rep.mutual_info = mutual_information(joint);
  rep.conditional_entropy = conditional_entropy(joint.transposed());
  const auto pz = joint.col_marginal();
  double worst_h2 = std::numeric_limits<double>::infinity();
  std::vector<double> post(joint.rows());
  for (std::size_t z = 0; z < joint.cols(); ++z) {
    if (pz[z] <= kEntropyFloor) continue;
    for (std::size_t x = 0; x < joint.rows(); ++x) post[x] = joint.at(x, z) / pz[z];
    const double h2 = collision_entropy(post);
    if (h2 < worst_h2) {
      worst_h2 = h2;
      rep.worst = entropy_report(post, theta);
    }
  }
  const double k = device.params.k;
  rep.delta_shannon = 1.0 - rep.conditional_entropy / k;
  rep.epsilon = rep.worst.smoothing_epsilon;
  rep.delta_smoothed = 1.0 - rep.worst.smoothed_bound / k;
  return rep;
}

CollisionReport conditional_collision_otm(const OtmDevice& device, const OutcomeRecord& outcome) {
  const auto family = otm_family(device);
  ReducedDensityCache cache(family);
  return family_collision(family, outcome, cache);
}

double lg_eight_thirds() { return std::log2(8.0 / 3.0); }

SplitPoints split_points(int k, int n, double h) {
  if (!(h >= k)) {
    throw Error(ErrorKind::InvalidH, "h = " + std::to_string(h) + " < k = " + std::to_string(k));
  }
  SplitPoints sp;
  sp.h = h;
  sp.m = std::min(n, static_cast<int>(std::floor(k / lg_eight_thirds())));
  sp.mt = std::min(static_cast<int>(std::floor(h - k)), n - sp.m);
  return sp;
}

namespace {

// Leaf path segments mapped to dense ids in first-occurrence order.
class SegmentIds {
 public:
  std::size_t id(const std::vector<int>& path, std::size_t from, std::size_t to) {
    std::vector<int> key(path.begin() + static_cast<std::ptrdiff_t>(std::min(from, path.size())),
                         path.begin() + static_cast<std::ptrdiff_t>(std::min(to, path.size())));
    return ids_.try_emplace(std::move(key), ids_.size()).first->second;
  }
  std::size_t size() const { return ids_.size(); }

 private:
  std::map<std::vector<int>, std::size_t> ids_;
};

// I(X; Y | C) where leaf z has prefix id c[z] and segment id y[z].
double segment_cmi(const std::vector<std::vector<double>>& pxz, const std::vector<std::size_t>& c,
                   std::size_t nc, const std::vector<std::size_t>& y, std::size_t ny) {
  Joint3 j;
  j.nx = pxz.size();
  j.nc = nc;
  j.ny = ny;
  j.p.assign(j.nx * nc * ny, 0.0);
  for (std::size_t x = 0; x < j.nx; ++x) {
    for (std::size_t z = 0; z < c.size(); ++z) j.p[(x * nc + c[z]) * ny + y[z]] += pxz[x][z];
  }
  return conditional_mutual_information(j);
}

}  // namespace

PhaseDecomposition phase_decomposition(const OtmDevice& device, const StrategyTree& strategy,
                                       const SplitPoints& split) {
  check_exact(device, strategy);
  if (!strategy.is_uniform_depth()) {
    throw Error(ErrorKind::DepthMismatch, "phase decomposition needs a uniform-depth strategy");
  }
  const int n = device.params.n;
  if (split.m < 0 || split.mt < 0 || split.m + split.mt > n) {
    throw Error(ErrorKind::InvalidH, "split points must satisfy 0 <= m, mt and m + mt <= n");
  }
  const auto family = otm_family(device);
  const double w = 1.0 / static_cast<double>(family.size());
  std::vector<std::vector<double>> pxz(family.size());
  for (std::size_t x = 0; x < family.size(); ++x) {
    leaf_probabilities(strategy, family[x], pxz[x]);
    for (auto& v : pxz[x]) v *= w;
  }
  const auto paths = leaf_paths(strategy);
  const auto m = static_cast<std::size_t>(split.m);
  const auto mm = static_cast<std::size_t>(split.m + split.mt);
  const std::size_t end = std::numeric_limits<std::size_t>::max();

  SegmentIds empty, pre_m, mid, pre_mm, rest;
  std::vector<std::size_t> c0(paths.size()), c1(paths.size()), y1(paths.size()), c2(paths.size()),
      y2(paths.size());
  for (std::size_t z = 0; z < paths.size(); ++z) {
    c0[z] = empty.id(paths[z], 0, 0);
    c1[z] = pre_m.id(paths[z], 0, m);
    y1[z] = mid.id(paths[z], m, mm);
    c2[z] = pre_mm.id(paths[z], 0, mm);
    y2[z] = rest.id(paths[z], mm, end);
  }
  PhaseDecomposition out;
  out.first = segment_cmi(pxz, c0, 1, c1, pre_m.size());
  out.second = segment_cmi(pxz, c1, pre_m.size(), y1, mid.size());
  out.remainder = segment_cmi(pxz, c2, pre_mm.size(), y2, rest.size());
  out.holevo_cap = n - split.m - split.mt;
  out.total = game_information(strategy, family, Distribution::uniform(family.size())).information;
  return out;
}

double min_prefix_collision(const OtmDevice& device, const StrategyTree& strategy, int m) {
  check_exact(device, strategy);
  const auto family = otm_family(device);
  const auto paths = leaf_paths(strategy);
  SegmentIds pre;
  std::vector<std::size_t> c(paths.size());
  for (std::size_t z = 0; z < paths.size(); ++z) c[z] = pre.id(paths[z], 0, static_cast<std::size_t>(m));
  std::vector<std::vector<double>> post(pre.size(), std::vector<double>(family.size(), 0.0));
  std::vector<double> p;
  for (std::size_t x = 0; x < family.size(); ++x) {
    leaf_probabilities(strategy, family[x], p);
    for (std::size_t z = 0; z < p.size(); ++z) post[c[z]][x] += p[z];
  }
  double best = std::numeric_limits<double>::infinity();
  for (auto& row : post) {
    double total = 0.0;
    for (double v : row) total += v;
    if (total <= kEntropyFloor) continue;
    for (double& v : row) v /= total;
    best = std::min(best, collision_entropy(row));
  }
  return best;
}

}  // namespace isoqubit
