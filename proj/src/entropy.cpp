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

#include "isoqubit/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace isoqubit {

namespace {

double h_term(double p) { return p > kEntropyFloor ? -p * std::log2(p) : 0.0; }

}  // namespace

JointTable::JointTable(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), p_(rows * cols, 0.0) {}

JointTable::JointTable(std::size_t rows, std::size_t cols, std::vector<double> probs)
    : rows_(rows), cols_(cols), p_(std::move(probs)) {
  if (p_.size() != rows * cols) {
    throw Error(ErrorKind::DimensionMismatch, "joint table size mismatch");
  }
  validate();
}

std::vector<double> JointTable::row_marginal() const {
  std::vector<double> m(rows_, 0.0);
  for (std::size_t x = 0; x < rows_; ++x)
    for (std::size_t y = 0; y < cols_; ++y) m[x] += at(x, y);
  return m;
}

std::vector<double> JointTable::col_marginal() const {
  std::vector<double> m(cols_, 0.0);
  for (std::size_t x = 0; x < rows_; ++x)
    for (std::size_t y = 0; y < cols_; ++y) m[y] += at(x, y);
  return m;
}

JointTable JointTable::transposed() const {
  JointTable t(cols_, rows_);
  for (std::size_t x = 0; x < rows_; ++x)
    for (std::size_t y = 0; y < cols_; ++y) t.at(y, x) = at(x, y);
  return t;
}

void JointTable::validate() {
  double sum = 0.0;
  for (double& p : p_) {
    p = clamp_probability(p);
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorKind::InvalidProbability, "joint sums to " + std::to_string(sum));
  }
}

double shannon_entropy(std::span<const double> dist) {
  double h = 0.0;
  for (double p : dist) h += h_term(p);
  return h;
}

double collision_entropy(std::span<const double> dist) {
  double s = 0.0;
  for (double p : dist) s += p * p;
  return -std::log2(s);
}

double min_entropy(std::span<const double> dist) {
  return -std::log2(*std::max_element(dist.begin(), dist.end()));
}

EntropyReport entropy_report(std::span<const double> dist, double theta) {
  EntropyReport r;
  r.shannon = shannon_entropy(dist);
  r.collision = collision_entropy(dist);
  r.min_entropy = min_entropy(dist);
  std::tie(r.smoothing_epsilon, r.smoothed_bound) =
      smoothed_minentropy_lower_bound(r.collision, theta);
  return r;
}

double mutual_information(const JointTable& joint) {
  double hxy = shannon_entropy(joint.probs());
  const double hx = shannon_entropy(joint.row_marginal());
  const double hy = shannon_entropy(joint.col_marginal());
  return std::max(0.0, hx + hy - hxy);
}

double conditional_entropy(const JointTable& joint) {
  return std::max(0.0, shannon_entropy(joint.probs()) - shannon_entropy(joint.row_marginal()));
}

double conditional_mutual_information(const Joint3& joint) {
  double total = 0.0;
  std::vector<double> slice(joint.nx * joint.ny);
  for (std::size_t c = 0; c < joint.nc; ++c) {
    double pc = 0.0;
    for (std::size_t x = 0; x < joint.nx; ++x)
      for (std::size_t y = 0; y < joint.ny; ++y) {
        slice[x * joint.ny + y] = joint.at(x, c, y);
        pc += slice[x * joint.ny + y];
      }
    if (pc <= kEntropyFloor) continue;
    JointTable t(joint.nx, joint.ny);
    for (std::size_t x = 0; x < joint.nx; ++x)
      for (std::size_t y = 0; y < joint.ny; ++y) t.at(x, y) = slice[x * joint.ny + y] / pc;
    total += pc * mutual_information(t);
  }
  return total;
}

std::pair<double, double> smoothed_minentropy_lower_bound(double h2, double theta) {
  if (!(theta >= 0.0)) throw Error(ErrorKind::DomainError, "theta must be >= 0");
  return {std::exp2(-theta), h2 - theta};
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::DomainError, "p outside [0,1]");
  return h_term(p) + h_term(1.0 - p);
}

double binary_entropy_derivative(double p) {
  if (!(p > 0.0 && p < 1.0)) throw Error(ErrorKind::DomainError, "h'(p) needs 0 < p < 1");
  return std::log2((1.0 - p) / p);
}

double eta(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorKind::DomainError, "eta needs 0 <= x <= 1");
  return x > 0.0 ? -x * std::log2(x) : 0.0;
}

double discretization_penalty(int q, int n, double epsilon) {
  if (q < 2 || n < 1) throw Error(ErrorKind::DomainError, "need q >= 2 and n >= 1");
  if (!(epsilon > 0.0)) throw Error(ErrorKind::DomainError, "epsilon must be positive");
  const double limit = 1.0 / (q * n * std::numbers::e);
  if (epsilon > limit) {
    throw Error(ErrorKind::EpsilonTooLarge,
                "epsilon " + std::to_string(epsilon) + " > 1/(qne) = " + std::to_string(limit));
  }
  const double qne = q * n * epsilon;
  return 2.0 * q * n * n * epsilon + 2.0 * eta(qne);
}

bool success_to_info_precondition(double eps, int nb) {
  return eps >= 0.0 && 2.0 * std::sqrt(eps) + std::exp2(-nb) <= 1.0 / std::numbers::e;
}

double success_to_info_bound(double eps, int nb) {
  if (!success_to_info_precondition(eps, nb)) {
    throw Error(ErrorKind::PreconditionViolated,
                "2 sqrt(eps) + 2^-nb > 1/e for eps = " + std::to_string(eps));
  }
  const double r = std::sqrt(eps);
  return (1.0 - 5.0 * r) * nb - eta(2.0 * r);
}

double uncertainty_check(const Mat2& projector) {
  if ((projector - projector.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw Error(ErrorKind::NotRank1, "operator not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Mat2> es(projector, Eigen::EigenvaluesOnly);
  const auto ev = es.eigenvalues();
  if (ev(1) <= kEigenCutoff || std::abs(ev(0)) > kEigenCutoff) {
    throw Error(ErrorKind::NotRank1, "expected a rank-1 PSD operator");
  }
  const Mat2 rho = projector / projector.trace().real();
  const double p0 = std::clamp(rho(0, 0).real(), 0.0, 1.0);
  // <+|rho|+> = (1 + 2 Re rho_01) / 2
  const double pplus = std::clamp(0.5 + rho(0, 1).real(), 0.0, 1.0);
  return binary_entropy(p0) + binary_entropy(pplus);
}

}  // namespace isoqubit
