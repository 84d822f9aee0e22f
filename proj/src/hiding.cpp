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

#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

namespace isoqubit {

HidingEnsemble::HidingEnsemble(int nb, int n, std::vector<AlphaCode> codes)
    : nb_(nb), n_(n), codes_(std::move(codes)) {
  if (nb < 0 || nb > kMaxHidingBits || n < 1 || n > kMaxHidingBits) {
    throw Error(ErrorKind::TooLarge, "ensemble needs 0 <= nb <= 14 and 1 <= n <= 14");
  }
  if (codes_.size() != rows() * static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::DimensionMismatch, "ensemble table must be 2^nb x n");
  }
}

HidingEnsemble sample_ensemble(int nb, int n, Rng& rng) {
  if (nb < 0 || nb > kMaxHidingBits || n < 1 || n > kMaxHidingBits) {
    throw Error(ErrorKind::TooLarge, "ensemble needs 0 <= nb <= 14 and 1 <= n <= 14");
  }
  std::vector<AlphaCode> codes((std::size_t{1} << nb) * static_cast<std::size_t>(n));
  for (auto& c : codes) c = static_cast<AlphaCode>(rng.below(4));
  return HidingEnsemble(nb, n, std::move(codes));
}

ProductState encode_hiding(const HidingEnsemble& e, std::size_t u) {
  if (u >= e.rows()) {
    throw Error(ErrorKind::IndexOutOfRange, "u = " + std::to_string(u) + " >= 2^nb");
  }
  std::vector<QubitState> qs;
  qs.reserve(static_cast<std::size_t>(e.n()));
  for (int a = 0; a < e.n(); ++a) qs.push_back(alpha_state(e.code(u, a)));
  return ProductState(std::move(qs));
}

std::vector<ProductState> ensemble_states(const HidingEnsemble& e) {
  std::vector<ProductState> out;
  out.reserve(e.rows());
  for (std::size_t u = 0; u < e.rows(); ++u) out.push_back(encode_hiding(e, u));
  return out;
}

double gram_frobenius(std::span<const ProductState> states) {
  const MatrixC g = gram_matrix(states).matrix();
  return (g - MatrixC::Identity(g.rows(), g.cols())).norm();
}

Pgm pgm_build(std::span<const ProductState> states) {
  if (states.empty()) throw Error(ErrorKind::DimensionMismatch, "empty family");
  const std::size_t n = states[0].size();
  if (n > static_cast<std::size_t>(kMaxDenseQubits)) {
    throw Error(ErrorKind::DimensionTooLarge, "PGM needs n <= 14");
  }
  const auto dim = Eigen::Index{1} << n;
  const auto count = static_cast<Eigen::Index>(states.size());
  if (static_cast<double>(dim) * static_cast<double>(count) > kMaxPgmEntries) {
    throw Error(ErrorKind::DimensionTooLarge, "PGM output would hold 2^n x N = " +
                                                  std::to_string(dim * count) + " amplitudes");
  }
  MatrixC v(dim, count);
  for (Eigen::Index u = 0; u < count; ++u) v.col(u) = states[static_cast<std::size_t>(u)].dense();
  const MatrixC g = v.adjoint() * v;
  return Pgm{v * psd_inverse_sqrt(g)};
}

namespace {

MatrixC gram_sqrt(std::span<const ProductState> states) {
  return psd_sqrt(gram_matrix(states).matrix());
}

}  // namespace

PgmSuccess pgm_success(std::span<const ProductState> states) {
  const MatrixC g = gram_matrix(states).matrix();
  const MatrixC s = psd_sqrt(g);
  const auto count = static_cast<double>(states.size());
  double acc = 0.0;
  for (Eigen::Index u = 0; u < s.rows(); ++u) acc += std::norm(s(u, u));
  PgmSuccess out;
  out.probability = clamp_probability(acc / count);
  out.gram_frobenius = (g - MatrixC::Identity(g.rows(), g.cols())).norm();
  out.gram_bound = 1.0 - 2.0 / std::sqrt(count) * out.gram_frobenius;
  return out;
}

PgmSuccess pgm_success(const HidingEnsemble& e) {
  const auto states = ensemble_states(e);
  return pgm_success(states);
}

JointTable pgm_joint(std::span<const ProductState> states) {
  const MatrixC s = gram_sqrt(states);
  const std::size_t count = states.size();
  JointTable joint(count, count);
  for (std::size_t u = 0; u < count; ++u) {
    for (std::size_t z = 0; z < count; ++z) {
      joint.at(u, z) = std::norm(s(static_cast<Eigen::Index>(z), static_cast<Eigen::Index>(u))) /
                       static_cast<double>(count);
    }
  }
  joint.validate();
  return joint;
}

GameStats discrimination_game(const HidingEnsemble& e, const StrategyTree& strategy) {
  const auto states = ensemble_states(e);
  return game_information(strategy, states, Distribution::uniform(states.size()));
}

StrategyTree computational_strategy(int n) {
  return nonadaptive_strategy(n, Povm::projective(QubitState::make(1.0, 0.0)));
}

const MatrixC& ReducedDensityCache::get(std::span<const int> subset) {
  std::vector<int> key(subset.begin(), subset.end());
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    const auto rho = reduced_density(family_, Distribution::uniform(family_.size()), subset);
    it = cache_.emplace(std::move(key), rho.matrix()).first;
  }
  return it->second;
}

namespace {

// Shared tail of both collision routes: `likelihood[x]` = Pr[M_A | X = x],
// `overlap4[x]` = |<psi_A|E(x)_A>|^4.
CollisionReport finish_collision(std::span<const double> likelihood,
                                 std::span<const double> overlap4, double trace,
                                 double dense_probability) {
  const auto count = static_cast<double>(likelihood.size());
  CollisionReport r;
  r.trace = trace;
  r.dense_probability = dense_probability;
  double total = 0.0;
  for (double p : likelihood) total += p;
  r.probability = total / count;
  if (!(total > 0.0)) throw Error(ErrorKind::DomainError, "outcome has zero probability");
  double collision = 0.0;
  for (double p : likelihood) collision += (p / total) * (p / total);
  r.h2 = -std::log2(collision);
  r.fourth = std::accumulate(overlap4.begin(), overlap4.end(), 0.0);
  const double rhs =
      r.fourth * trace * trace / (dense_probability * dense_probability * count * count);
  r.identity_residual = std::abs(collision - rhs);
  return r;
}

}  // namespace

CollisionReport family_collision(std::span<const ProductState> family,
                                 const OutcomeRecord& outcome, ReducedDensityCache& cache) {
  std::vector<double> likelihood(family.size());
  for (std::size_t x = 0; x < family.size(); ++x) {
    likelihood[x] = product_expectation(family[x], outcome);
  }
  if (outcome.empty()) {
    std::vector<double> ones(family.size(), 1.0);
    return finish_collision(likelihood, ones, 1.0, 1.0);
  }
  const auto factors = outcome.normalized_factors();
  const ProductState psi(factors);
  const VectorC dense = psi.dense();
  const double trace = outcome.trace();
  const MatrixC& rho = cache.get(outcome.qubits());
  const double dense_probability = trace * (dense.adjoint() * rho * dense)(0, 0).real();
  std::vector<double> overlap4(family.size());
  const auto qubits = outcome.qubits();
  for (std::size_t x = 0; x < family.size(); ++x) {
    double o = 1.0;
    for (std::size_t i = 0; i < qubits.size(); ++i) {
      o *= std::norm(factors[i].inner(family[x][static_cast<std::size_t>(qubits[i])]));
    }
    overlap4[x] = o * o;
  }
  return finish_collision(likelihood, overlap4, trace, dense_probability);
}

CollisionReport conditional_collision(const HidingEnsemble& e, const OutcomeRecord& outcome) {
  const auto states = ensemble_states(e);
  ReducedDensityCache cache(states);
  return family_collision(states, outcome, cache);
}

CollisionScan collision_scan(std::span<const ProductState> family, const MeasurementNet& net,
                             int m, double cap) {
  if (family.empty()) throw Error(ErrorKind::DimensionMismatch, "empty family");
  const int n = static_cast<int>(family[0].size());
  if (m < 0 || m > n) throw Error(ErrorKind::DepthMismatch, "m must lie in [0, n]");
  const std::size_t q = static_cast<std::size_t>(net.q);
  const std::size_t ne = net.size() * q;  // candidate factors per qubit
  const std::size_t nx = family.size();

  double count = std::pow(static_cast<double>(ne), m);
  for (int i = 0; i < m; ++i) count = count * (n - i) / (i + 1);
  if (count > cap) throw CapExceededError(count, cap);

  // Factor e = member * q + outcome: trace, unit vector, per-x likelihood.
  std::vector<Mat2> ops(ne);
  std::vector<double> traces(ne);
  std::vector<QubitState> dirs;
  for (std::size_t e = 0; e < ne; ++e) {
    ops[e] = net.members[e / q][e % q];
    traces[e] = ops[e].trace().real();
    Eigen::SelfAdjointEigenSolver<Mat2> es(ops[e]);
    const Eigen::Vector2cd v = es.eigenvectors().col(1);
    dirs.push_back(QubitState::normalized(v(0), v(1)));
  }
  std::vector<std::vector<double>> like(static_cast<std::size_t>(n) * ne,
                                        std::vector<double>(nx));
  std::vector<std::vector<double>> over(static_cast<std::size_t>(n) * ne,
                                        std::vector<double>(nx));
  for (int a = 0; a < n; ++a) {
    for (std::size_t e = 0; e < ne; ++e) {
      auto& l = like[static_cast<std::size_t>(a) * ne + e];
      auto& o = over[static_cast<std::size_t>(a) * ne + e];
      for (std::size_t x = 0; x < nx; ++x) {
        const auto& psi = family[x][static_cast<std::size_t>(a)];
        const Eigen::Vector2cd v = psi.vector();
        l[x] = clamp_probability((v.adjoint() * ops[e] * v)(0, 0).real());
        o[x] = std::norm(dirs[e].inner(psi));
      }
    }
  }

  ReducedDensityCache cache(family);
  CollisionScan scan;
  scan.min_h2 = std::numeric_limits<double>::infinity();
  std::vector<int> subset;
  std::vector<std::size_t> choice;
  std::vector<std::vector<double>> like_stack(static_cast<std::size_t>(m) + 1,
                                              std::vector<double>(nx, 1.0));
  std::vector<std::vector<double>> over_stack(static_cast<std::size_t>(m) + 1,
                                              std::vector<double>(nx, 1.0));
  std::vector<double> o4(nx);

  std::function<void(int, int)> rec = [&](int start, int level) {
    const auto lv = static_cast<std::size_t>(level);
    if (level == m) {
      double trace = 1.0;
      VectorC dense = VectorC::Ones(1);
      for (std::size_t i = 0; i < choice.size(); ++i) {
        trace *= traces[choice[i]];
        const Eigen::Vector2cd d = dirs[choice[i]].vector();
        VectorC next(dense.size() * 2);
        for (Eigen::Index j = 0; j < dense.size(); ++j) {
          next(2 * j) = dense(j) * d(0);
          next(2 * j + 1) = dense(j) * d(1);
        }
        dense = std::move(next);
      }
      double total = 0.0;
      for (double p : like_stack[lv]) total += p;
      if (!(total / static_cast<double>(nx) > 1e-15)) return;
      double dense_probability = 1.0;
      if (m > 0) {
        const MatrixC& rho = cache.get(subset);
        dense_probability = trace * (dense.adjoint() * rho * dense)(0, 0).real();
      }
      for (std::size_t x = 0; x < nx; ++x) o4[x] = over_stack[lv][x] * over_stack[lv][x];
      const CollisionReport r = finish_collision(like_stack[lv], o4, trace, dense_probability);
      ++scan.outcomes;
      scan.max_identity_residual = std::max(scan.max_identity_residual, r.identity_residual);
      if (r.h2 < scan.min_h2) {
        scan.min_h2 = r.h2;
        std::vector<Mat2> mats;
        for (auto c : choice) mats.push_back(ops[c]);
        scan.argmin = OutcomeRecord(subset, std::move(mats));
      }
      return;
    }
    for (int a = start; a <= n - (m - level); ++a) {
      subset.push_back(a);
      for (std::size_t e = 0; e < ne; ++e) {
        const auto& l = like[static_cast<std::size_t>(a) * ne + e];
        const auto& o = over[static_cast<std::size_t>(a) * ne + e];
        for (std::size_t x = 0; x < nx; ++x) {
          like_stack[lv + 1][x] = like_stack[lv][x] * l[x];
          over_stack[lv + 1][x] = over_stack[lv][x] * o[x];
        }
        choice.push_back(e);
        rec(a + 1, level + 1);
        choice.pop_back();
      }
      subset.pop_back();
    }
  };
  rec(0, 0);
  return scan;
}

}  // namespace isoqubit
