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

// Conjugate-coding one-time memories: |E(s,t)> = (x)_a |alpha_{C(s)_a D(t)_a}>.
// Family index for exact joints: x = s * 2^k + t.

#include <cstdint>
#include <vector>

#include "isoqubit/codes.hpp"
#include "isoqubit/entropy.hpp"
#include "isoqubit/hiding.hpp"
#include "isoqubit/strategy.hpp"

namespace isoqubit {

struct OtmDevice {
  CodeParams params;
  RandomCode code_c;
  RandomCode code_d;
  std::uint64_t seed_c = 0;
  std::uint64_t seed_d = 0;
};

// Samples C from Rng(seed_c) and D from Rng(seed_d). k <= 0 derives k from
// (n, theta, tau); a positive k is used as given (theta and tau are still
// validated and r is still n (p_e + tau)).
OtmDevice sample_device(int n, int k, double theta, double tau, std::uint64_t seed_c,
                        std::uint64_t seed_d);
// Checks that both codes match params.
void validate_device(const OtmDevice& device);

ProductState otm_encode(const OtmDevice& device, std::uint64_t s, std::uint64_t t);

// Largest k for exact joints over all 4^k (s, t) pairs.
inline constexpr int kMaxExactOtmBits = 6;
// All 4^k encodings, x = s * 2^k + t; TooLarge if k > 6.
std::vector<ProductState> otm_family(const OtmDevice& device);

enum class Side { S, T };

// S side: {beta(pi/8), beta(5pi/8)}, T side: {beta(-pi/8), beta(3pi/8)}.
// Outcome index equals the decoded bit of C (S side) or D (T side).
Povm honest_basis(Side side);
StrategyTree honest_strategy(Side side, int n);

struct HonestResult {
  std::uint64_t message = 0;
  bool success = false;
  int bit_errors = 0;  // measured bits differing from the codeword
};
// Samples each qubit's outcome from its Born probabilities in the honest
// basis, then decodes with the nearest-codeword rule. `noiseless` reads the
// codeword bit directly.
HonestResult honest_recover(const OtmDevice& device, std::uint64_t s, std::uint64_t t, Side side,
                            Rng& rng, bool noiseless = false);

struct HonestStats {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t qubits = 0;
  std::uint64_t bit_errors = 0;

  double success_rate() const { return trials ? double(successes) / double(trials) : 0.0; }
  double error_rate() const { return qubits ? double(bit_errors) / double(qubits) : 0.0; }
};
// `codes` independent (C, D) pairs; code j draws from derive_seed(seed, j),
// then runs `trials` recoveries with uniform (s, t).
HonestStats honest_monte_carlo(int n, int k, int codes, int trials, Side side,
                               std::uint64_t seed);

// Every qubit measured in {|alpha_00>, |alpha_11>}.
StrategyTree leak_strategy(int n);

// Exact I(Z; S, T) under uniform independent S, T.
double otm_information(const OtmDevice& device, const StrategyTree& strategy);

struct LeakReport {
  double mutual_info = 0.0;          // I(Z; S, T)
  double conditional_entropy = 0.0;  // H(S, T | Z)
  EntropyReport worst;               // posterior of (S, T) at the z minimizing H_2
  double delta_shannon = 0.0;        // 1 - H(S, T | Z) / k
  double delta_smoothed = 0.0;       // 1 - (min_z H_2 - theta) / k
  double epsilon = 1.0;              // 2^-theta
};
// TooLarge unless k <= 6 and n <= 12.
LeakReport leak_eval(const OtmDevice& device, double theta = 0.0);
LeakReport leak_eval(const OtmDevice& device, const StrategyTree& strategy, double theta);

CollisionReport conditional_collision_otm(const OtmDevice& device, const OutcomeRecord& outcome);

struct SplitPoints {
  int m = 0;
  int mt = 0;  // m-tilde
  double h = 0.0;
};
// lg(8/3)
double lg_eight_thirds();
// m = floor(k / lg(8/3)) (at most n), mt = min(floor(h - k), n - m).
// InvalidH if h < k.
SplitPoints split_points(int k, int n, double h);

struct PhaseDecomposition {
  double first = 0.0;      // I(S,T; Z_1..m)
  double second = 0.0;     // I(S,T; Z_m+1..m+mt | Z_1..m)
  double remainder = 0.0;  // I(S,T; Z_rest | Z_1..m+mt)
  double holevo_cap = 0.0; // n - m - mt
  double total = 0.0;      // otm_information, computed separately
};
// Z_i is the outcome of the i-th measurement step. The strategy must have
// uniform depth.
PhaseDecomposition phase_decomposition(const OtmDevice& device, const StrategyTree& strategy,
                                       const SplitPoints& split);

// min over z_1..m of H_2(S,T | Z_1..m = z) under the given strategy.
double min_prefix_collision(const OtmDevice& device, const StrategyTree& strategy, int m);

}  // namespace isoqubit
