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

#include "lambdaspec/core/superoperator.hpp"
#include "lambdaspec/model/params.hpp"

namespace lambdaspec {

/// |D><D| with |D> = (Omega2 |1> - Omega1 |2>) / Omega.
Operator dark_state(const ModelParams& params);

/// Thermal motional state p_n ~ (n/(1+n))^n, renormalized on the truncated
/// Fock space. n_bar = 0 gives |0><0|.
Operator thermal_mu(double n_bar, int n_max);

/// Laser-frame Hamiltonian of the atom at rest: detuning term plus
/// (1/2) sum_j Omega_j (|3><j| + h.c.).
Operator internal_hamiltonian(const ModelParams& params,
                              DetuningConvention convention = kDetuningConvention);

/// Spontaneous emission |3> -> |j> at rate gamma_j, no recoil.
SuperOperator internal_dissipator(const ModelParams& params);

/// L_I = -i [H, .] + K0.
SuperOperator internal_liouvillian(const ModelParams& params,
                                   DetuningConvention convention = kDetuningConvention);

/// Taylor coefficients of the laser coupling in x:
/// V(x) = V0 + V1 x + V2 x^2 + O(x^3).
struct InteractionDerivatives {
  Operator v0;
  Operator v1;
  Operator v2;
};

InteractionDerivatives interaction_derivatives(const ModelParams& params);

}  // namespace lambdaspec
