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

#include "isoqubit/povm.hpp"

#include <algorithm>
#include <string>

namespace isoqubit {

namespace {

constexpr double kCompletenessTol = 1e-10;

}  // namespace

Povm::Povm(std::vector<Mat2> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw Error(ErrorKind::NotAPovm, "no elements");
  Mat2 sum = Mat2::Zero();
  for (auto& m : elements_) {
    if (!is_psd(m)) throw Error(ErrorKind::NotAPovm, "element is not PSD");
    m = 0.5 * (m + m.adjoint()).eval();
    sum += m;
  }
  const double dev = (sum - Mat2::Identity()).cwiseAbs().maxCoeff();
  if (dev > kCompletenessTol) {
    throw Error(ErrorKind::NotAPovm, "elements sum to identity only within " + std::to_string(dev));
  }
}

Povm Povm::projective(const QubitState& phi) {
  const Mat2 p = phi.projector();
  return Povm({p, Mat2::Identity() - p});
}

Povm Povm::rank1(std::vector<Mat2> elements) {
  if (elements.size() < 2) throw Error(ErrorKind::InvalidQ, "rank-1 POVM needs q >= 2");
  Povm p(std::move(elements));
  if (!p.is_rank1()) throw Error(ErrorKind::NotRank1, "element with rank 2");
  return p;
}

bool Povm::is_rank1() const {
  return std::all_of(elements_.begin(), elements_.end(), [](const Mat2& m) {
    Eigen::SelfAdjointEigenSolver<Mat2> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0) < kEigenCutoff;
  });
}

double Povm::probability(const QubitState& psi, std::size_t outcome) const {
  const Eigen::Vector2cd v = psi.vector();
  return clamp_probability((v.adjoint() * elements_[outcome] * v)(0, 0).real());
}

double povm_distance(const Povm& a, const Povm& b) {
  if (a.outcomes() != b.outcomes()) {
    throw Error(ErrorKind::DimensionMismatch, "POVMs with different outcome counts");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < a.outcomes(); ++i) {
    const Mat2 diff = a[i] - b[i];
    // Hermitian: operator norm is the largest |eigenvalue|.
    Eigen::SelfAdjointEigenSolver<Mat2> es(diff, Eigen::EigenvaluesOnly);
    d = std::max(d, es.eigenvalues().cwiseAbs().maxCoeff());
  }
  return d;
}

bool structurally_equal(const Povm& a, const Povm& b, double tol) {
  if (a.outcomes() != b.outcomes()) return false;
  for (std::size_t i = 0; i < a.outcomes(); ++i) {
    if ((a[i] - b[i]).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

Rank1Refinement rank1_reduce(const Povm& povm) {
  std::vector<Mat2> pieces;
  std::vector<int> parent;
  for (std::size_t i = 0; i < povm.outcomes(); ++i) {
    Eigen::SelfAdjointEigenSolver<Mat2> es(povm[i]);
    const double small = std::max(0.0, es.eigenvalues()(0));
    const double large = std::max(0.0, es.eigenvalues()(1));
    if (small < kEigenCutoff) {
      // Already rank <= 1.
      if (large >= kEigenCutoff) {
        pieces.push_back(povm[i]);
        parent.push_back(static_cast<int>(i));
      }
      continue;
    }
    pieces.push_back(small * Mat2::Identity());
    parent.push_back(static_cast<int>(i));
    const double beta = large - small;
    if (beta >= kEigenCutoff) {
      const Eigen::Vector2cd phi = es.eigenvectors().col(1);
      pieces.push_back(beta * phi * phi.adjoint());
      parent.push_back(static_cast<int>(i));
    }
  }
  return {Povm(std::move(pieces)), std::move(parent)};
}

}  // namespace isoqubit
