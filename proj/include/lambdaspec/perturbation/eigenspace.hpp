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

#include <vector>

#include "lambdaspec/model/expansion.hpp"
#include "lambdaspec/perturbation/zero_order.hpp"

namespace lambdaspec {

/// Right and left eigen-elements of L = L0 + L1 + L2 to second order around
/// a zero-order element rho0 = sigma (x) mu in the given sectors.
struct PerturbativeState {
  Complex lambda0;
  Complex lambda1;  ///< vanishes identically; kept as a runtime check
  Complex lambda2;
  std::vector<Sector> sectors;  ///< zero-order sectors spanned by rho0
  CMatrix rho0;
  CMatrix rho1;
  CMatrix rho2;
  CMatrix check_rho0;
  CMatrix check_rho1;
};

/// Corrects the zero-order element (internal right/left eigen-element of the
/// single-member group `internal_group`) (x) (motional right/left element).
/// The motional elements must lie in one external sector ell; then
/// lambda0 = lambda_I + i ell. Throws NumericalFailure if |lambda1| exceeds
/// 1e-10 relative to |lambda2|.
PerturbativeState correct_eigenspace(const ExpansionOperators& ops, const ZeroOrderStructure& zero,
                                     std::size_t internal_group, const Operator& motional_right,
                                     const Operator& motional_left);

/// Steady state rho_D (x) mu_thermal(n_bar) and its corrections.
PerturbativeState perturbed_steady_state(const ExpansionOperators& ops, const ZeroOrderStructure& zero,
                                         double n_bar);

/// P0 X and P1 X = R L1 P0 X + P0 L1 R X for the sectors of `state`.
CMatrix apply_zero_order_projector(const ZeroOrderStructure& zero, const PerturbativeState& state,
                                   const CMatrix& x);
CMatrix apply_first_order_projector(const ExpansionOperators& ops, const ZeroOrderStructure& zero,
                                    const PerturbativeState& state, const CMatrix& x);

}  // namespace lambdaspec
