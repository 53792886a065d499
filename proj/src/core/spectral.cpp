// Copyright 2026 The lambdaspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lambdaspec/core/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "lambdaspec/core/errors.hpp"

namespace lambdaspec {
namespace {

constexpr double kMaxConditionNumber = 1e8;

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t k) {
  while (parent[k] != k) {
    parent[k] = parent[parent[k]];
    k = parent[k];
  }
  return k;
}

// Single-linkage clustering of eigenvalues closer than tol.
std::vector<std::vector<std::size_t>> cluster(const std::vector<Complex>& values, double tol) {
  const std::size_t n = values.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  // Sorting by real part lets the inner loop stop early.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a].real() < values[b].real(); });
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const Complex va = values[order[a]];
      const Complex vb = values[order[b]];
      if (vb.real() - va.real() > tol) break;
      if (std::abs(va - vb) <= tol) {
        const std::size_t ra = find_root(parent, order[a]);
        const std::size_t rb = find_root(parent, order[b]);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::ptrdiff_t> slot(n, -1);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t r = find_root(parent, k);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::ptrdiff_t>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(slot[r])].push_back(k);
  }
  return groups;
}

std::vector<bool> excluded_mask(const SpectralDecomposition& dec, std::span<const std::size_t> exclude) {
  std::vector<bool> mask(dec.size(), false);
  for (std::size_t g : exclude) {
    if (g >= dec.groups().size()) throw InvalidArgument("reduced resolvent: group index out of range");
    for (std::size_t k : dec.groups()[g]) mask[k] = true;
  }
  return mask;
}

CVector resolvent_weights(const SpectralDecomposition& dec, Complex z,
                          std::span<const std::size_t> exclude) {
  const std::vector<bool> mask = excluded_mask(dec, exclude);
  CVector w(static_cast<Index>(dec.size()));
  for (std::size_t k = 0; k < dec.size(); ++k) {
    if (mask[k]) {
      w(static_cast<Index>(k)) = 0.0;
      continue;
    }
    const Complex gap = z - dec.eigenvalue(k);
    if (std::abs(gap) <= dec.grouping_tol()) {
      std::ostringstream msg;
      msg << "reduced resolvent: z = " << z << " hits non-excluded eigenvalue " << dec.eigenvalue(k)
          << " (group " << dec.group_of(k) << ")";
      throw SingularResolvent(msg.str());
    }
    w(static_cast<Index>(k)) = 1.0 / gap;
  }
  return w;
}

}  // namespace

SpectralDecomposition::SpectralDecomposition(SpaceLabel space, std::vector<Complex> eigenvalues,
                                             CMatrix right_vectors, CMatrix left_functionals,
                                             double grouping_tol)
    : space_(space),
      eigenvalues_(std::move(eigenvalues)),
      right_(std::move(right_vectors)),
      left_(std::move(left_functionals)),
      grouping_tol_(grouping_tol) {
  const Index d2 = space_.dim() * space_.dim();
  const auto n = static_cast<Index>(eigenvalues_.size());
  if (right_.rows() != d2 || right_.cols() != n || left_.rows() != n || left_.cols() != d2) {
    throw InvalidArgument("spectral decomposition: inconsistent shapes");
  }
  if (!(grouping_tol_ > 0.0)) throw InvalidArgument("spectral decomposition: grouping_tol must be > 0");
  groups_ = cluster(eigenvalues_, grouping_tol_);
  group_of_.assign(eigenvalues_.size(), 0);
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    for (std::size_t k : groups_[g]) group_of_[k] = g;
  }
}

Operator SpectralDecomposition::right(std::size_t k) const {
  return {space_, unvec(right_.col(static_cast<Index>(k)), space_.dim())};
}

Operator SpectralDecomposition::left(std::size_t k) const {
  const CVector row = left_.row(static_cast<Index>(k)).transpose();
  return {space_, unvec(row, space_.dim()).transpose()};
}

Complex SpectralDecomposition::group_eigenvalue(std::size_t g) const {
  Complex sum = 0.0;
  for (std::size_t k : groups_.at(g)) sum += eigenvalues_[k];
  return sum / static_cast<double>(groups_[g].size());
}

std::vector<std::size_t> SpectralDecomposition::groups_near(Complex z, std::optional<double> tol) const {
  const double t = tol.value_or(grouping_tol_);
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    const bool hit = std::any_of(groups_[g].begin(), groups_[g].end(),
                                 [&](std::size_t k) { return std::abs(eigenvalues_[k] - z) <= t; });
    if (hit) out.push_back(g);
  }
  return out;
}

double default_grouping_tol(const SuperOperator& l) {
  const double radius = l.matrix().cwiseAbs().rowwise().sum().maxCoeff();
  return std::max(1e-8 * radius, 1e-12);
}

SpectralDecomposition spectral_decompose(const SuperOperator& l, std::optional<double> grouping_tol) {
  const double tol = grouping_tol.value_or(default_grouping_tol(l));
  if (!(tol > 0.0)) throw InvalidArgument("spectral_decompose: grouping_tol must be > 0");
  if (!l.matrix().allFinite()) throw InvalidArgument("spectral_decompose: non-finite superoperator");

  Eigen::ComplexEigenSolver<CMatrix> solver(l.matrix(), true);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("spectral_decompose: eigensolver did not converge on " +
                           l.space().describe());
  }
  CMatrix right = solver.eigenvectors();
  for (Index k = 0; k < right.cols(); ++k) right.col(k).normalize();

  Eigen::PartialPivLU<CMatrix> lu(right);
  CMatrix left = lu.inverse();

  std::vector<Complex> values(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + solver.eigenvalues().size());

  // With unit-norm right vectors, the row norms of the inverse are the
  // eigenvalue condition numbers.
  for (Index k = 0; k < left.rows(); ++k) {
    const double kappa = left.row(k).norm();
    if (!std::isfinite(kappa) || kappa > kMaxConditionNumber) {
      std::ostringstream msg;
      msg << "spectral_decompose: eigenvalue " << values[static_cast<std::size_t>(k)]
          << " has condition number " << kappa << "; the cluster around it is defective";
      throw DefectiveSubspace(msg.str());
    }
  }

  SpectralDecomposition dec(l.space(), values, right, left, tol);

  // Normalize a unique stationary element to unit trace (left partner -> identity).
  const std::vector<std::size_t> zero = dec.groups_near(0.0);
  if (zero.size() == 1 && dec.groups()[zero.front()].size() == 1) {
    const auto k = static_cast<Index>(dec.groups()[zero.front()].front());
    const Complex tr = unvec(right.col(k), l.space().dim()).trace();
    if (std::abs(tr) > 1e-8) {
      right.col(k) /= tr;
      left.row(k) *= tr;
      return SpectralDecomposition(l.space(), std::move(values), std::move(right), std::move(left), tol);
    }
  }
  return dec;
}

SuperOperator reduced_resolvent(const SpectralDecomposition& decomposition, Complex z,
                                std::span<const std::size_t> exclude) {
  const CVector w = resolvent_weights(decomposition, z, exclude);
  return {decomposition.space(),
          decomposition.right_vectors() * w.asDiagonal() * decomposition.left_functionals()};
}

CMatrix apply_reduced_resolvent(const SpectralDecomposition& decomposition, Complex z,
                                std::span<const std::size_t> exclude, const CMatrix& x) {
  const CVector w = resolvent_weights(decomposition, z, exclude);
  const CVector c = decomposition.coefficients(x).cwiseProduct(w);
  return unvec(decomposition.right_vectors() * c, decomposition.space().dim());
}

CMatrix apply_reduced_resolvent_left(const SpectralDecomposition& decomposition, Complex z,
                                     std::span<const std::size_t> exclude, const CMatrix& a) {
  const CVector w = resolvent_weights(decomposition, z, exclude);
  // c_k = Tr{A rho_k} (z - lambda_k)^{-1};  Y = sum_k c_k rhocheck_k
  const CVector c = (decomposition.right_vectors().transpose() * vec(a.transpose())).cwiseProduct(w);
  const CVector y = decomposition.left_functionals().transpose() * c;
  return unvec(y, decomposition.space().dim()).transpose();
}

CMatrix apply_projector(const SpectralDecomposition& decomposition, std::span<const std::size_t> groups,
                        const CMatrix& x) {
  const CVector all = decomposition.coefficients(x);
  CVector c = CVector::Zero(all.size());
  for (std::size_t g : groups) {
    for (std::size_t k : decomposition.groups().at(g)) c(static_cast<Index>(k)) = all(static_cast<Index>(k));
  }
  return unvec(decomposition.right_vectors() * c, decomposition.space().dim());
}

CMatrix apply_projector_left(const SpectralDecomposition& decomposition,
                             std::span<const std::size_t> groups, const CMatrix& a) {
  const CVector all = decomposition.right_vectors().transpose() * vec(a.transpose());
  CVector c = CVector::Zero(all.size());
  for (std::size_t g : groups) {
    for (std::size_t k : decomposition.groups().at(g)) c(static_cast<Index>(k)) = all(static_cast<Index>(k));
  }
  const CVector y = decomposition.left_functionals().transpose() * c;
  return unvec(y, decomposition.space().dim()).transpose();
}

}  // namespace lambdaspec
