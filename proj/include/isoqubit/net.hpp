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

// Finite epsilon-nets over single-qubit rank-1 POVMs, in the metric
// t(M, M') = max_i ||M_i - M'_i||.
//
// Two-outcome nets: every such POVM is {P, I - P} for a rank-1 projector P,
// and ||P - P'|| equals half the Euclidean chord between the Bloch vectors.
// The net is {|0>, |1>} plus a spherical Fibonacci lattice of
// ceil(kFibonacciDensity / eps^2) points; the lattice's measured covering
// chord is about 2.55 / sqrt(N), so the operator-norm covering radius is
// at most 0.81 eps. Achieved constant: |L| <= kNet2Constant / eps^2.
//
// q-outcome nets (q >= 3): the first q-1 elements range over
// (weight grid) x (projector net) at resolution delta = eps/q; the last
// element is the top eigenpart of the remainder I - sum; tuples whose
// remainder is not within 2(q-1)delta of rank-1 PSD are discarded, and the
// survivors are mapped to exact POVMs by the congruence S^{-1/2} X_i S^{-1/2}
// with S the sum of all q elements. For q = 2 the two-outcome net is
// returned (every 2-outcome rank-1 POVM is projective).

#include <cstddef>
#include <vector>

#include "isoqubit/povm.hpp"

namespace isoqubit {

inline constexpr double kFibonacciDensity = 2.5;
inline constexpr double kNet2Constant = 5.5;

struct MeasurementNet {
  double epsilon = 1.0;
  int q = 2;
  std::vector<Povm> members;

  std::size_t size() const { return members.size(); }
};

// Bloch-sphere points: the two poles followed by the Fibonacci lattice.
std::vector<QubitState> fibonacci_states(std::size_t lattice_points);

MeasurementNet build_net_2outcome(double epsilon);
MeasurementNet build_net_qoutcome(int q, double epsilon);

// Index of the member minimizing povm_distance; ties go to the lowest index.
std::size_t nearest_member(const MeasurementNet& net, const Povm& povm);

// eps * |L|^(1/(3q)), the constant C with |L| = (C/eps)^(3q).
double achieved_net_constant(const MeasurementNet& net);

}  // namespace isoqubit
