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

#include <vector>

#include "isoqubit/qubit.hpp"

namespace isoqubit {

// Single-qubit POVM: PSD 2x2 elements summing to the identity within 1e-10.
class Povm {
 public:
  explicit Povm(std::vector<Mat2> elements);

  // {|phi><phi|, I - |phi><phi|}
  static Povm projective(const QubitState& phi);
  // Validates q >= 2 and numerical rank <= 1 for every element.
  static Povm rank1(std::vector<Mat2> elements);

  std::size_t outcomes() const { return elements_.size(); }
  const Mat2& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<Mat2>& elements() const { return elements_; }

  // Every element has second eigenvalue below kEigenCutoff.
  bool is_rank1() const;
  // <psi|M_i|psi>, clamped.
  double probability(const QubitState& psi, std::size_t outcome) const;

 private:
  std::vector<Mat2> elements_;
};

// t(M, M') = max_i ||M_i - M'_i|| (operator norm); outcome counts must match.
double povm_distance(const Povm& a, const Povm& b);
// Entrywise equality within 1e-12.
bool structurally_equal(const Povm& a, const Povm& b, double tol = 1e-12);

// Every rank-2 element M = alpha I + beta |phi><phi| (alpha the smaller
// eigenvalue) is split into the pieces alpha I and beta |phi><phi|; zero
// pieces are dropped. parent[j] is the original outcome that piece j
// coarse-grains to.
struct Rank1Refinement {
  Povm refined;
  std::vector<int> parent;
};
Rank1Refinement rank1_reduce(const Povm& povm);

}  // namespace isoqubit
