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

#include "isoqubit/net.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace isoqubit {

namespace {

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw Error(ErrorKind::InvalidEpsilon, "epsilon must lie in (0, 1], got " +
                                               std::to_string(epsilon));
  }
}

std::size_t lattice_size(double resolution) {
  return static_cast<std::size_t>(std::ceil(kFibonacciDensity / (resolution * resolution)));
}

// Odometer over (q-1)-tuples of indices in [0, base).
bool advance(std::vector<std::size_t>& idx, std::size_t base) {
  for (std::size_t i = idx.size(); i-- > 0;) {
    if (++idx[i] < base) return true;
    idx[i] = 0;
  }
  return false;
}

}  // namespace

std::vector<QubitState> fibonacci_states(std::size_t lattice_points) {
  std::vector<QubitState> out;
  out.reserve(lattice_points + 2);
  out.push_back(QubitState::make(1.0, 0.0));
  out.push_back(QubitState::make(0.0, 1.0));
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const auto n = static_cast<double>(lattice_points);
  for (std::size_t i = 0; i < lattice_points; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double t = golden_angle * static_cast<double>(i);
    out.push_back(QubitState::from_bloch({r * std::cos(t), r * std::sin(t), z}));
  }
  return out;
}

MeasurementNet build_net_2outcome(double epsilon) {
  check_epsilon(epsilon);
  MeasurementNet net{epsilon, 2, {}};
  for (const auto& phi : fibonacci_states(lattice_size(epsilon))) {
    net.members.push_back(Povm::projective(phi));
  }
  return net;
}

MeasurementNet build_net_qoutcome(int q, double epsilon) {
  if (q < 2) throw Error(ErrorKind::InvalidQ, "q must be >= 2");
  check_epsilon(epsilon);
  if (q == 2) return build_net_2outcome(epsilon);

  const double delta = epsilon / q;
  std::vector<double> weights;
  for (double w = delta; w < 1.0; w += 2.0 * delta) weights.push_back(w);
  if (weights.back() < 1.0 - delta) weights.push_back(1.0);
  std::vector<Mat2> grid;
  for (const auto& phi : fibonacci_states(lattice_size(delta))) {
    const Mat2 p = phi.projector();
    for (double w : weights) grid.push_back(w * p);
  }

  const double accept = 2.0 * (q - 1) * delta;
  MeasurementNet net{epsilon, q, {}};
  std::vector<std::size_t> idx(static_cast<std::size_t>(q - 1), 0);
  std::vector<Mat2> elems(static_cast<std::size_t>(q));
  Eigen::SelfAdjointEigenSolver<Mat2> es;
  do {
    Mat2 rest = Mat2::Identity();
    for (std::size_t i = 0; i < idx.size(); ++i) {
      elems[i] = grid[idx[i]];
      rest -= elems[i];
    }
    es.computeDirect(rest);
    const double r0 = es.eigenvalues()(0);
    const double r1 = es.eigenvalues()(1);
    if (std::abs(r0) > accept || r1 <= kEigenCutoff || 1.0 - r0 <= 0.0) continue;
    const Eigen::Vector2cd v = es.eigenvectors().col(1);
    elems.back() = r1 * v * v.adjoint();

    Mat2 total = Mat2::Zero();
    for (const auto& e : elems) total += e;
    es.compute(total);
    const Eigen::Vector2d inv_sqrt = es.eigenvalues().cwiseSqrt().cwiseInverse();
    const Mat2 s = es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().adjoint();
    std::vector<Mat2> member;
    member.reserve(elems.size());
    for (const auto& e : elems) member.push_back(s * e * s);
    net.members.push_back(Povm::rank1(std::move(member)));
  } while (advance(idx, grid.size()));
  return net;
}

std::size_t nearest_member(const MeasurementNet& net, const Povm& povm) {
  if (net.members.empty()) throw Error(ErrorKind::DimensionMismatch, "empty net");
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < net.members.size(); ++i) {
    const double d = povm_distance(net.members[i], povm);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

double achieved_net_constant(const MeasurementNet& net) {
  return net.epsilon * std::pow(static_cast<double>(net.size()), 1.0 / (3.0 * net.q));
}

}  // namespace isoqubit
