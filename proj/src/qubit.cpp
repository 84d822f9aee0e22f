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

#include "isoqubit/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace isoqubit {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kHermTol = 1e-10;

bool is_power_of_two(Eigen::Index d) { return d > 0 && (d & (d - 1)) == 0; }

void check_subset(std::span<const int> subset, std::size_t n) {
  if (subset.size() > static_cast<std::size_t>(kMaxDenseQubits)) {
    throw Error(ErrorKind::DimensionTooLarge,
                "subset of " + std::to_string(subset.size()) + " qubits exceeds " +
                    std::to_string(kMaxDenseQubits));
  }
  for (int a : subset) {
    if (a < 0 || static_cast<std::size_t>(a) >= n) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "qubit " + std::to_string(a) + " not in [0," + std::to_string(n) + ")");
    }
  }
}

std::size_t common_size(std::span<const ProductState> states) {
  if (states.empty()) throw Error(ErrorKind::DimensionMismatch, "empty state family");
  const std::size_t n = states.front().size();
  for (const auto& s : states) {
    if (s.size() != n) {
      throw Error(ErrorKind::DimensionMismatch, "states have different qubit counts");
    }
  }
  return n;
}

}  // namespace

double clamp_probability(double p) {
  if (!(p >= -kNormTol && p <= 1.0 + kNormTol)) {
    throw Error(ErrorKind::InvalidProbability, "value " + std::to_string(p) + " outside [0,1]");
  }
  return std::clamp(p, 0.0, 1.0);
}

// -- QubitState -------------------------------------------------------------

QubitState QubitState::make(Complex amp0, Complex amp1) {
  const double norm2 = std::norm(amp0) + std::norm(amp1);
  if (!(std::abs(norm2 - 1.0) <= kNormTol)) {
    throw Error(ErrorKind::InvalidState, "amplitudes not normalized (norm^2 = " +
                                             std::to_string(norm2) + ")");
  }
  return {amp0, amp1};
}

QubitState QubitState::normalized(Complex amp0, Complex amp1) {
  const double norm = std::sqrt(std::norm(amp0) + std::norm(amp1));
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorKind::InvalidState, "cannot normalize a zero vector");
  }
  return {amp0 / norm, amp1 / norm};
}

Mat2 QubitState::projector() const {
  const Eigen::Vector2cd v = vector();
  return v * v.adjoint();
}

Eigen::Vector3d QubitState::bloch() const {
  const Complex c = std::conj(amp0_) * amp1_;
  return {2.0 * c.real(), 2.0 * c.imag(), std::norm(amp0_) - std::norm(amp1_)};
}

QubitState QubitState::from_bloch(const Eigen::Vector3d& r) {
  const Eigen::Vector3d u = r.normalized();
  const double theta = std::acos(std::clamp(u.z(), -1.0, 1.0));
  const double phi = std::atan2(u.y(), u.x());
  return normalized(std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi));
}

QubitState random_qubit_state(Rng& rng) {
  for (;;) {
    const Complex a(rng.normal(), rng.normal());
    const Complex b(rng.normal(), rng.normal());
    if (std::norm(a) + std::norm(b) > 1e-12) return QubitState::normalized(a, b);
  }
}

QubitState alpha_state(AlphaCode code) {
  const double h = std::numbers::sqrt2 / 2.0;
  switch (code) {
    case AlphaCode::k00: return QubitState::make(1.0, 0.0);
    case AlphaCode::k01: return QubitState::make(h, h);
    case AlphaCode::k10: return QubitState::make(h, -h);
    case AlphaCode::k11: return QubitState::make(0.0, 1.0);
  }
  throw Error(ErrorKind::InvalidState, "bad alpha code");
}

QubitState beta_state(double phi) {
  if (!std::isfinite(phi)) throw Error(ErrorKind::InvalidState, "non-finite angle");
  return QubitState::normalized(std::cos(phi), std::sin(phi));
}

// -- ProductState -----------------------------------------------------------

ProductState::ProductState(std::vector<QubitState> qubits) : qubits_(std::move(qubits)) {
  if (qubits_.empty()) throw Error(ErrorKind::InvalidState, "product state needs >= 1 qubit");
}

Complex ProductState::inner(const ProductState& other) const {
  if (other.size() != size()) {
    throw Error(ErrorKind::DimensionMismatch, "inner product of different-size states");
  }
  Complex acc = 1.0;
  for (std::size_t a = 0; a < size(); ++a) acc *= qubits_[a].inner(other.qubits_[a]);
  return acc;
}

VectorC ProductState::dense() const {
  std::vector<int> all(size());
  for (std::size_t a = 0; a < size(); ++a) all[a] = static_cast<int>(a);
  return dense(all);
}

VectorC ProductState::dense(std::span<const int> subset) const {
  check_subset(subset, size());
  VectorC v(1);
  v(0) = 1.0;
  for (int a : subset) {
    const QubitState& q = qubits_[a];
    VectorC next(v.size() * 2);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      next(2 * i) = v(i) * q.amp0();
      next(2 * i + 1) = v(i) * q.amp1();
    }
    v = std::move(next);
  }
  return v;
}

// -- HermitianOp ------------------------------------------------------------

HermitianOp::HermitianOp(MatrixC entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols() || !is_power_of_two(m_.rows())) {
    throw Error(ErrorKind::DimensionMismatch, "operator dimension must be a power of two");
  }
  const double asym = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermTol) {
    throw Error(ErrorKind::InvalidState, "operator not Hermitian (deviation " +
                                             std::to_string(asym) + ")");
  }
  m_ = 0.5 * (m_ + m_.adjoint()).eval();
}

Eigen::VectorXd HermitianOp::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<MatrixC> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

// -- Distribution -----------------------------------------------------------

Distribution::Distribution(std::vector<double> probs) : p_(std::move(probs)) {
  if (p_.empty()) throw Error(ErrorKind::InvalidProbability, "empty distribution");
  double sum = 0.0;
  for (double& p : p_) {
    p = clamp_probability(p);
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorKind::InvalidProbability, "probabilities sum to " + std::to_string(sum));
  }
}

Distribution Distribution::uniform(std::size_t size) {
  if (size == 0) throw Error(ErrorKind::InvalidProbability, "empty distribution");
  return Distribution(std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

// -- OutcomeRecord ----------------------------------------------------------

OutcomeRecord::OutcomeRecord(std::vector<int> qubits, std::vector<Mat2> ops)
    : qubits_(std::move(qubits)), ops_(std::move(ops)) {
  if (qubits_.size() != ops_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "one operator per measured qubit required");
  }
  for (std::size_t i = 0; i < qubits_.size(); ++i) {
    if (qubits_[i] < 0) throw Error(ErrorKind::IndexOutOfRange, "negative qubit index");
    for (std::size_t j = 0; j < i; ++j) {
      if (qubits_[i] == qubits_[j]) {
        throw Error(ErrorKind::InvalidState, "qubit listed twice in outcome");
      }
    }
    const Mat2& m = ops_[i];
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermTol) {
      throw Error(ErrorKind::InvalidState, "outcome operator not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Mat2> es(m);
    const auto& ev = es.eigenvalues();
    if (ev(0) < -kEigenCutoff) throw Error(ErrorKind::InvalidState, "outcome operator not PSD");
    if (ev(0) > kEigenCutoff) throw Error(ErrorKind::NotRank1, "outcome operator has rank 2");
    if (ev(1) > 1.0 + kEigenCutoff) {
      throw Error(ErrorKind::InvalidState, "outcome operator norm exceeds 1");
    }
  }
}

double OutcomeRecord::trace() const {
  double t = 1.0;
  for (const auto& m : ops_) t *= m.trace().real();
  return t;
}

std::vector<QubitState> OutcomeRecord::normalized_factors() const {
  std::vector<QubitState> out;
  out.reserve(ops_.size());
  for (const auto& m : ops_) {
    Eigen::SelfAdjointEigenSolver<Mat2> es(m);
    if (es.eigenvalues()(1) <= kEigenCutoff) {
      throw Error(ErrorKind::InvalidState, "zero outcome operator has no direction");
    }
    const Eigen::Vector2cd v = es.eigenvectors().col(1);
    out.push_back(QubitState::normalized(v(0), v(1)));
  }
  return out;
}

// -- operations -------------------------------------------------------------

double product_expectation(const ProductState& state, const OutcomeRecord& outcome) {
  double p = 1.0;
  for (std::size_t i = 0; i < outcome.size(); ++i) {
    const int a = outcome.qubits()[i];
    if (static_cast<std::size_t>(a) >= state.size()) {
      throw Error(ErrorKind::IndexOutOfRange, "outcome references qubit " + std::to_string(a));
    }
    const Eigen::Vector2cd v = state[a].vector();
    p *= (v.adjoint() * outcome.ops()[i] * v)(0, 0).real();
  }
  return clamp_probability(p);
}

HermitianOp gram_matrix(std::span<const ProductState> states) {
  common_size(states);
  const auto count = static_cast<Eigen::Index>(states.size());
  MatrixC g(count, count);
  for (Eigen::Index u = 0; u < count; ++u) {
    g(u, u) = 1.0;
    for (Eigen::Index v = u + 1; v < count; ++v) {
      g(u, v) = states[u].inner(states[v]);
      g(v, u) = std::conj(g(u, v));
    }
  }
  return HermitianOp(std::move(g));
}

HermitianOp reduced_density(std::span<const ProductState> states, const Distribution& weights,
                            std::span<const int> subset) {
  const std::size_t n = common_size(states);
  if (weights.size() != states.size()) {
    throw Error(ErrorKind::DimensionMismatch, "one weight per state required");
  }
  check_subset(subset, n);
  const Eigen::Index dim = Eigen::Index{1} << subset.size();
  MatrixC rho = MatrixC::Zero(dim, dim);
  for (std::size_t u = 0; u < states.size(); ++u) {
    if (weights[u] == 0.0) continue;
    const VectorC v = states[u].dense(subset);
    rho.selfadjointView<Eigen::Lower>().rankUpdate(v, weights[u]);
  }
  rho.triangularView<Eigen::StrictlyUpper>() = rho.adjoint();
  return HermitianOp(std::move(rho));
}

double fourth_moment_avg(const QubitState& psi) {
  double acc = 0.0;
  for (int c = 0; c < 4; ++c) {
    const double overlap = std::norm(psi.inner(alpha_state(static_cast<AlphaCode>(c))));
    acc += overlap * overlap;
  }
  return acc / 4.0;
}

double fourth_moment_closed_form(const QubitState& psi) {
  const Complex a = psi.amp0();
  const Complex b = psi.amp1();
  return (2.0 + std::norm(a * a + b * b)) / 8.0;
}

double holevo_chi(std::span<const ProductState> states, const Distribution& prior,
                  std::span<const int> subset) {
  const std::size_t n = common_size(states);
  if (prior.size() != states.size()) {
    throw Error(ErrorKind::DimensionMismatch, "one prior weight per state required");
  }
  check_subset(subset, n);

  std::vector<std::size_t> support;
  for (std::size_t u = 0; u < states.size(); ++u) {
    if (prior[u] > 0.0) support.push_back(u);
  }
  const auto dim = std::size_t{1} << subset.size();

  double average_entropy;
  if (support.size() < dim) {
    // Nonzero spectrum of sum_u p_u |v_u><v_u| equals that of
    // D^{1/2} G D^{1/2}, G the Gram matrix of the reduced vectors.
    const auto r = static_cast<Eigen::Index>(support.size());
    MatrixC k(r, r);
    for (Eigen::Index i = 0; i < r; ++i) {
      for (Eigen::Index j = i; j < r; ++j) {
        Complex g = 1.0;
        for (int a : subset) g *= states[support[i]][a].inner(states[support[j]][a]);
        g *= std::sqrt(prior[support[i]] * prior[support[j]]);
        k(i, j) = g;
        k(j, i) = std::conj(g);
      }
    }
    Eigen::SelfAdjointEigenSolver<MatrixC> es(k, Eigen::EigenvaluesOnly);
    average_entropy = spectrum_entropy(es.eigenvalues());
  } else {
    average_entropy = von_neumann_entropy(reduced_density(states, prior, subset).matrix());
  }
  // Each reduced state of a product state is pure, so sum_u p_u S(rho_u) = 0.
  const double conditional_entropy = 0.0;
  return std::max(0.0, average_entropy - conditional_entropy);
}

// -- dense helpers ----------------------------------------------------------

double spectrum_entropy(const Eigen::VectorXd& eigenvalues) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    const double l = eigenvalues(i);
    if (l > kEigenCutoff) h -= l * std::log2(l);
  }
  return h;
}

double von_neumann_entropy(const MatrixC& rho) {
  Eigen::SelfAdjointEigenSolver<MatrixC> es(rho, Eigen::EigenvaluesOnly);
  return spectrum_entropy(es.eigenvalues());
}

MatrixC psd_sqrt(const MatrixC& a) {
  Eigen::SelfAdjointEigenSolver<MatrixC> es(a);
  Eigen::VectorXd d = es.eigenvalues();
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = d(i) > kEigenCutoff ? std::sqrt(d(i)) : 0.0;
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

MatrixC psd_inverse_sqrt(const MatrixC& a) {
  Eigen::SelfAdjointEigenSolver<MatrixC> es(a);
  Eigen::VectorXd d = es.eigenvalues();
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    d(i) = d(i) > kEigenCutoff ? 1.0 / std::sqrt(d(i)) : 0.0;
  }
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

double operator_norm(const Mat2& a) {
  Eigen::JacobiSVD<Mat2> svd(a);
  return svd.singularValues()(0);
}

bool is_psd(const Mat2& a, double tol) {
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > kHermTol) return false;
  Eigen::SelfAdjointEigenSolver<Mat2> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0) >= -tol;
}

}  // namespace isoqubit
