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

// Data-hiding states |E(u)> = (x)_a |alpha_{E(u)_a}>, the pretty good
// measurement, the discrimination game and conditional collision entropy
// of posteriors given a partial outcome M_A.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "isoqubit/entropy.hpp"
#include "isoqubit/net.hpp"
#include "isoqubit/qubit.hpp"
#include "isoqubit/random.hpp"
#include "isoqubit/strategy.hpp"

namespace isoqubit {

inline constexpr int kMaxHidingBits = 14;

class HidingEnsemble {
 public:
  // codes: 2^nb rows of n codes, row-major.
  HidingEnsemble(int nb, int n, std::vector<AlphaCode> codes);

  int nb() const { return nb_; }
  int n() const { return n_; }
  std::size_t rows() const { return std::size_t{1} << nb_; }
  AlphaCode code(std::size_t u, int a) const {
    return codes_[u * static_cast<std::size_t>(n_) + static_cast<std::size_t>(a)];
  }
  std::span<const AlphaCode> codes() const { return codes_; }

  friend bool operator==(const HidingEnsemble&, const HidingEnsemble&) = default;

 private:
  int nb_;
  int n_;
  std::vector<AlphaCode> codes_;
};

// Uniform independent codes; TooLarge if nb or n exceeds 14.
HidingEnsemble sample_ensemble(int nb, int n, Rng& rng);
ProductState encode_hiding(const HidingEnsemble& e, std::size_t u);
std::vector<ProductState> ensemble_states(const HidingEnsemble& e);

// ||G - I||_F
double gram_frobenius(std::span<const ProductState> states);

// Pretty good measurement for the uniform ensemble over `states`:
// column z of `vectors` is |M(z)> with M(z) = |M(z)><M(z)|, computed as
// V (G^+)^{1/2} e_z where V has the dense states as columns.
struct Pgm {
  MatrixC vectors;
  // Sum_z M(z); equals the projector onto span{|E(u)>}.
  MatrixC completeness() const { return vectors * vectors.adjoint(); }
};
inline constexpr double kMaxPgmEntries = 1 << 24;
// DimensionTooLarge if n > 14 or 2^n * |states| exceeds kMaxPgmEntries.
Pgm pgm_build(std::span<const ProductState> states);

struct PgmSuccess {
  double probability = 0.0;  // exact Pr[Z = U]
  double gram_bound = 0.0;   // 1 - 2 2^{-nb/2} ||G - I||_F
  double gram_frobenius = 0.0;
};
// Gram route: Pr[z|u] = |(sqrt G)_{zu}|^2, with |states| = 2^nb.
PgmSuccess pgm_success(std::span<const ProductState> states);
PgmSuccess pgm_success(const HidingEnsemble& e);
// Joint law of (U, Z) for the PGM under uniform U.
JointTable pgm_joint(std::span<const ProductState> states);

// I(Z;U), H(Z|U), H(Z) under uniform U.
GameStats discrimination_game(const HidingEnsemble& e, const StrategyTree& strategy);

// Every qubit in the computational basis, qubit 0 first.
StrategyTree computational_strategy(int n);

struct CollisionReport {
  double h2 = 0.0;            // H_2(X | M_A) from the exact posterior
  double probability = 0.0;   // Pr[M_A], posterior route
  double dense_probability = 0.0;  // Tr(M_A rho_A), dense route
  double trace = 0.0;         // Tr M_A
  double fourth = 0.0;        // F = sum_x |<psi_A|E(x)_A>|^4
  double identity_residual = 0.0;  // |2^{-H_2} - Pr^{-2} N^{-2} Tr^2 F|
};

// Caches rho_A per qubit subset for repeated collision queries on one
// uniform family.
class ReducedDensityCache {
 public:
  explicit ReducedDensityCache(std::span<const ProductState> family) : family_(family) {}
  const MatrixC& get(std::span<const int> subset);

 private:
  std::span<const ProductState> family_;
  std::map<std::vector<int>, MatrixC> cache_;
};

// Collision entropy of a uniform family's index given outcome M_A. The
// identity 2^{-H_2(X|M_A)} = Pr[M_A]^{-2} N^{-2} (Tr M_A)^2 F is evaluated
// with Pr[M_A] from the dense reduced state and F from per-qubit overlaps
// with the normalized outcome factors. M_A must have nonzero probability.
CollisionReport family_collision(std::span<const ProductState> family,
                                 const OutcomeRecord& outcome, ReducedDensityCache& cache);
CollisionReport conditional_collision(const HidingEnsemble& e, const OutcomeRecord& outcome);

struct CollisionScan {
  std::uint64_t outcomes = 0;        // evaluated outcomes with Pr[M_A] > 0
  double min_h2 = 0.0;
  double max_identity_residual = 0.0;
  OutcomeRecord argmin;
};
// Visits every outcome M_A over unordered qubit subsets of size m, with each
// qubit's factor an element of a member of `net`, and reports the minimum
// H_2 and worst identity residual. Throws CapExceededError past `cap`.
CollisionScan collision_scan(std::span<const ProductState> family, const MeasurementNet& net,
                             int m, double cap);

}  // namespace isoqubit
