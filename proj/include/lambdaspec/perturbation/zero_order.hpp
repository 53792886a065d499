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

#include <span>
#include <vector>

#include "lambdaspec/core/spectral.hpp"

namespace lambdaspec {

/// Eigen-sector of L0 = L_I (x) 1 + 1 (x) L_E: internal group g times the
/// external sector ell, spanned by |n><n+ell|. Eigenvalue lambda_I(g) + i ell.
struct Sector {
  std::size_t internal_group = 0;
  int ell = 0;

  friend bool operator==(const Sector&, const Sector&) = default;
};

/// Block structure of L0 on the truncated composite space. Every motional
/// block X_{nm} is an internal operator in external sector m - n, so
/// resolvents and projectors factor block by block through the internal
/// eigen-decomposition.
class ZeroOrderStructure {
 public:
  ZeroOrderStructure(SpectralDecomposition internal, int n_max);

  const SpectralDecomposition& internal() const noexcept { return internal_; }
  int n_max() const noexcept { return n_max_; }

  Complex eigenvalue(const Sector& sector) const;

  /// Sectors with |lambda - z| <= tol (default: internal grouping tolerance).
  std::vector<Sector> sectors_near(Complex z, std::optional<double> tol = std::nullopt) const;

  /// Group of the unique internal eigenvalue at 0. Throws NumericalFailure if
  /// there is none or more than one.
  std::size_t stationary_group() const;

  CMatrix apply_l0(const CMatrix& x) const;

  CMatrix project(std::span<const Sector> sectors, const CMatrix& x) const;
  CMatrix project_left(std::span<const Sector> sectors, const CMatrix& a) const;

  /// (z - L0)^{-1} on the complement of the excluded sectors. Throws
  /// SingularResolvent when z hits a kept eigenvalue.
  CMatrix resolvent(Complex z, std::span<const Sector> exclude, const CMatrix& x) const;
  CMatrix resolvent_left(Complex z, std::span<const Sector> exclude, const CMatrix& a) const;

 private:
  // Per-block weight on internal eigen-index k for external sector ell.
  template <class Weight>
  CMatrix map_blocks(const CMatrix& x, bool left, Weight&& weight) const;

  SpectralDecomposition internal_;
  int n_max_;
  CMatrix left_t_;  // left functionals transposed, for the adjoint action
};

}  // namespace lambdaspec
