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

// Information measures in bits and the closed-form bounds applied to them.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "isoqubit/qubit.hpp"

namespace isoqubit {

// Probabilities below this contribute nothing to entropy sums.
inline constexpr double kEntropyFloor = 1e-15;

struct EntropyReport {
  double shannon = 0.0;
  double collision = 0.0;
  double min_entropy = 0.0;
  // Smoothed min-entropy lower bound H_inf^eps >= H_2 - theta with
  // eps = 2^-theta.
  double smoothing_epsilon = 1.0;
  double smoothed_bound = 0.0;
};

// Joint law of (X, Y) as a dense rows x cols table, row-major.
class JointTable {
 public:
  JointTable(std::size_t rows, std::size_t cols);
  JointTable(std::size_t rows, std::size_t cols, std::vector<double> probs);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& at(std::size_t x, std::size_t y) { return p_[x * cols_ + y]; }
  double at(std::size_t x, std::size_t y) const { return p_[x * cols_ + y]; }
  std::span<const double> probs() const { return p_; }

  std::vector<double> row_marginal() const;
  std::vector<double> col_marginal() const;
  JointTable transposed() const;
  // Sum within 1e-9 of 1 and entries clamped; throws InvalidProbability.
  void validate();

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> p_;
};

// Joint law of (X, C, Y) with X slowest; used for I(X; Y | C).
struct Joint3 {
  std::size_t nx = 0, nc = 0, ny = 0;
  std::vector<double> p;

  double at(std::size_t x, std::size_t c, std::size_t y) const {
    return p[(x * nc + c) * ny + y];
  }
};

double shannon_entropy(std::span<const double> dist);
double collision_entropy(std::span<const double> dist);
double min_entropy(std::span<const double> dist);
EntropyReport entropy_report(std::span<const double> dist, double theta = 0.0);

inline double shannon_entropy(const Distribution& d) { return shannon_entropy(d.probs()); }
inline double collision_entropy(const Distribution& d) { return collision_entropy(d.probs()); }

// I(X;Y) = H(X) + H(Y) - H(X,Y), clipped at 0 for float noise.
double mutual_information(const JointTable& joint);
// H(Y|X) for X the row variable.
double conditional_entropy(const JointTable& joint);
// I(X;Y|C) = sum_c p(c) I(X;Y | C=c), computed slice by slice.
double conditional_mutual_information(const Joint3& joint);

// (epsilon, bound) = (2^-theta, h2 - theta).
std::pair<double, double> smoothed_minentropy_lower_bound(double h2, double theta);

double binary_entropy(double p);
// h'(p) = lg((1-p)/p); DomainError at p in {0, 1}.
double binary_entropy_derivative(double p);

// eta(x) = -x lg x with eta(0) = 0.
double eta(double x);

// Information change bound 2 q n^2 eps + 2 eta(q n eps) for replacing each
// measurement of a 1-pass strategy by its nearest net member; requires
// 0 < eps <= 1/(q n e).
double discretization_penalty(int q, int n, double epsilon);

// (1 - 5 sqrt(eps)) nb - eta(2 sqrt(eps)) given Pr[Z=U] >= 1 - eps;
// requires 2 sqrt(eps) + 2^-nb <= 1/e.
double success_to_info_bound(double eps, int nb);
bool success_to_info_precondition(double eps, int nb);

// H(R0) + H(R1): Shannon entropies of the state's outcome distributions in
// the {|0>,|1>} and {|+>,|->} bases. Accepts a rank-1 projector (any
// positive scale is normalized away).
double uncertainty_check(const Mat2& projector);

}  // namespace isoqubit
