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

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lambdaspec/core/superoperator.hpp"

namespace lambdaspec {

/// Eigenvalues of a (generally non-normal) superoperator with biorthonormal
/// right eigen-operators rho_k and left eigen-operators rhocheck_k:
/// Tr{rhocheck_j rho_k} = delta_jk. Eigenvalues within the grouping tolerance
/// of each other form one degenerate group.
class SpectralDecomposition {
 public:
  SpectralDecomposition(SpaceLabel space, std::vector<Complex> eigenvalues, CMatrix right_vectors,
                        CMatrix left_functionals, double grouping_tol);

  const SpaceLabel& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return eigenvalues_.size(); }
  double grouping_tol() const noexcept { return grouping_tol_; }

  const std::vector<Complex>& eigenvalues() const noexcept { return eigenvalues_; }
  Complex eigenvalue(std::size_t k) const { return eigenvalues_.at(k); }

  Operator right(std::size_t k) const;
  Operator left(std::size_t k) const;

  /// Columns are vec(rho_k).
  const CMatrix& right_vectors() const noexcept { return right_; }
  /// Row k maps vec(X) to Tr{rhocheck_k X}.
  const CMatrix& left_functionals() const noexcept { return left_; }

  const std::vector<std::vector<std::size_t>>& groups() const noexcept { return groups_; }
  std::size_t group_of(std::size_t k) const { return group_of_.at(k); }
  /// Mean eigenvalue of a group.
  Complex group_eigenvalue(std::size_t g) const;

  /// Groups whose eigenvalue lies within `tol` of z (defaults to grouping_tol).
  std::vector<std::size_t> groups_near(Complex z, std::optional<double> tol = std::nullopt) const;

  /// Expansion coefficients Tr{rhocheck_k X}.
  CVector coefficients(const CMatrix& x) const { return left_ * vec(x); }

 private:
  SpaceLabel space_;
  std::vector<Complex> eigenvalues_;
  CMatrix right_;
  CMatrix left_;
  double grouping_tol_;
  std::vector<std::vector<std::size_t>> groups_;
  std::vector<std::size_t> group_of_;
};

/// 1e-8 times the spectral radius estimate (infinity norm), floored at 1e-12.
double default_grouping_tol(const SuperOperator& l);

/// Full eigen-decomposition. Left eigen-operators come from the inverse of the
/// right eigenvector matrix. A unique eigenvalue at 0 is scaled so its right
/// element has unit trace. Throws DefectiveSubspace when an eigenvalue cluster
/// is numerically non-diagonalizable (eigenvalue condition number > 1e8).
SpectralDecomposition spectral_decompose(const SuperOperator& l,
                                         std::optional<double> grouping_tol = std::nullopt);

/// (z - L)^{-1} restricted to the complement of the excluded groups:
/// sum over k not excluded of (z - lambda_k)^{-1} rho_k Tr{rhocheck_k .}.
/// Throws SingularResolvent if z is within grouping_tol of a kept eigenvalue.
SuperOperator reduced_resolvent(const SpectralDecomposition& decomposition, Complex z,
                                std::span<const std::size_t> exclude);

/// Matrix-free variant of reduced_resolvent on a single operator.
CMatrix apply_reduced_resolvent(const SpectralDecomposition& decomposition, Complex z,
                                std::span<const std::size_t> exclude, const CMatrix& x);

/// Adjoint action: the operator Y with Tr{Y X} = Tr{A R[X]}.
CMatrix apply_reduced_resolvent_left(const SpectralDecomposition& decomposition, Complex z,
                                     std::span<const std::size_t> exclude, const CMatrix& a);

/// Spectral projector sum_{k in group} rho_k Tr{rhocheck_k .} applied to x.
CMatrix apply_projector(const SpectralDecomposition& decomposition, std::span<const std::size_t> groups,
                        const CMatrix& x);
CMatrix apply_projector_left(const SpectralDecomposition& decomposition,
                             std::span<const std::size_t> groups, const CMatrix& a);

}  // namespace lambdaspec
