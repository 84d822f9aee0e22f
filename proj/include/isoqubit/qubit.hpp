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

// Exact linear algebra for single qubits, product states, Gram matrices and
// reduced density operators.
//
// Conventions: qubits are 0-based. When a product state (or a subset of its
// qubits) is expanded into a dense 2^m vector, the first listed qubit is the
// most significant bit of the basis index (Kronecker order).

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "isoqubit/error.hpp"
#include "isoqubit/random.hpp"

namespace isoqubit {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using MatrixC = Eigen::MatrixXcd;
using VectorC = Eigen::VectorXcd;

// Eigenvalues below this are treated as zero everywhere: PSD checks,
// entropies of density matrices, pseudo-inverse square roots.
inline constexpr double kEigenCutoff = 1e-10;
// Largest qubit count for any operation that builds 2^n-dimensional objects.
inline constexpr int kMaxDenseQubits = 14;

// Probabilities within 1e-12 outside [0,1] are clamped; anything further out
// is a bug and raises InvalidProbability.
double clamp_probability(double p);

class QubitState {
 public:
  // Requires |amp0|^2 + |amp1|^2 = 1 within 1e-12.
  static QubitState make(Complex amp0, Complex amp1);
  // Rescales to unit norm; the input must be nonzero.
  static QubitState normalized(Complex amp0, Complex amp1);

  Complex amp0() const { return amp0_; }
  Complex amp1() const { return amp1_; }

  // <this|other>
  Complex inner(const QubitState& other) const {
    return std::conj(amp0_) * other.amp0_ + std::conj(amp1_) * other.amp1_;
  }
  Mat2 projector() const;
  Eigen::Vector2cd vector() const { return {amp0_, amp1_}; }

  // Bloch vector (x, y, z).
  Eigen::Vector3d bloch() const;
  static QubitState from_bloch(const Eigen::Vector3d& r);

 private:
  QubitState(Complex a0, Complex a1) : amp0_(a0), amp1_(a1) {}
  Complex amp0_;
  Complex amp1_;
};

// Haar-random pure state (normalized complex Gaussian amplitudes).
QubitState random_qubit_state(Rng& rng);

// Two-bit conjugate-coding label; the numeric value is 2*first + second.
enum class AlphaCode : std::uint8_t { k00 = 0, k01 = 1, k10 = 2, k11 = 3 };

inline AlphaCode alpha_code(bool first, bool second) {
  return static_cast<AlphaCode>((first ? 2 : 0) | (second ? 1 : 0));
}

// |0>, |+>, |->, |1> for 00, 01, 10, 11.
QubitState alpha_state(AlphaCode code);
// cos(phi)|0> + sin(phi)|1>
QubitState beta_state(double phi);

class ProductState {
 public:
  explicit ProductState(std::vector<QubitState> qubits);

  std::size_t size() const { return qubits_.size(); }
  const QubitState& operator[](std::size_t i) const { return qubits_[i]; }
  std::span<const QubitState> qubits() const { return qubits_; }

  // <this|other> as the product of per-qubit overlaps.
  Complex inner(const ProductState& other) const;
  // Dense 2^n vector; n <= kMaxDenseQubits.
  VectorC dense() const;
  // Dense vector of the factor on the listed qubits, in the listed order.
  VectorC dense(std::span<const int> subset) const;

 private:
  std::vector<QubitState> qubits_;
};

class HermitianOp {
 public:
  // Validates power-of-two dimension and Hermiticity within 1e-10.
  explicit HermitianOp(MatrixC entries);

  Eigen::Index dim() const { return m_.rows(); }
  const MatrixC& matrix() const { return m_; }
  double trace() const { return m_.trace().real(); }
  // Ascending.
  Eigen::VectorXd eigenvalues() const;
  double min_eigenvalue() const { return eigenvalues()(0); }

 private:
  MatrixC m_;
};

class Distribution {
 public:
  // Sum must be 1 within 1e-9; entries in [-1e-12, 1+1e-12] are clamped.
  explicit Distribution(std::vector<double> probs);
  static Distribution uniform(std::size_t size);

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  std::span<const double> probs() const { return p_; }

 private:
  std::vector<double> p_;
};

// A measurement outcome M_A: a qubit subset A with one rank-1 PSD operator
// of norm at most 1 per listed qubit.
class OutcomeRecord {
 public:
  OutcomeRecord() = default;
  OutcomeRecord(std::vector<int> qubits, std::vector<Mat2> ops);

  std::span<const int> qubits() const { return qubits_; }
  std::span<const Mat2> ops() const { return ops_; }
  std::size_t size() const { return qubits_.size(); }
  bool empty() const { return qubits_.empty(); }

  // Tr(M_A) = prod_i Tr(M_i).
  double trace() const;
  // M_A / Tr(M_A) = |psi_A><psi_A|; the per-qubit unit vectors psi_i.
  // Requires every M_i to be nonzero.
  std::vector<QubitState> normalized_factors() const;

 private:
  std::vector<int> qubits_;
  std::vector<Mat2> ops_;
};

// prod_{a in A} <psi_a|M_a|psi_a>
double product_expectation(const ProductState& state, const OutcomeRecord& outcome);

// G_uv = <E(u)|E(v)>
HermitianOp gram_matrix(std::span<const ProductState> states);

// rho_A = sum_u w_u Tr_{[n]\A} |E(u)><E(u)|, dimension 2^|A|.
HermitianOp reduced_density(std::span<const ProductState> states,
                            const Distribution& weights, std::span<const int> subset);

// (1/4) sum over the four alpha states of |<psi|alpha>|^4, by direct summation.
double fourth_moment_avg(const QubitState& psi);
// (1/8) (2 + |a^2 + b^2|^2) for psi = a|0> + b|1>.
double fourth_moment_closed_form(const QubitState& psi);

// chi = S(sum_u p_u rho_u) - sum_u p_u S(rho_u) in bits, rho_u the reduced
// state of E(u) on the subset.
double holevo_chi(std::span<const ProductState> states, const Distribution& prior,
                  std::span<const int> subset);

// -- dense helpers ----------------------------------------------------------

// Von Neumann entropy in bits of a PSD matrix with unit trace.
double von_neumann_entropy(const MatrixC& rho);
// Entropy in bits of a nonnegative spectrum (entries below kEigenCutoff
// dropped).
double spectrum_entropy(const Eigen::VectorXd& eigenvalues);
// Square root of a PSD matrix; negative eigenvalues within the cutoff are
// zeroed.
MatrixC psd_sqrt(const MatrixC& a);
// Pseudo-inverse square root on the support (eigenvalues > kEigenCutoff).
MatrixC psd_inverse_sqrt(const MatrixC& a);
double operator_norm(const Mat2& a);
bool is_psd(const Mat2& a, double tol = kEigenCutoff);

}  // namespace isoqubit
