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

#include "lambdaspec/model/lambda_system.hpp"

#include <cmath>

#include "lambdaspec/core/errors.hpp"

namespace lambdaspec {
namespace {

// (1/2) sum_j c_j Omega_j |3><j| + h.c.
Operator laser_coupling(const ModelParams& params, Complex c1, Complex c2) {
  Operator up = (0.5 * params.omega1 * c1) * internal_dyad(2, 0) + (0.5 * params.omega2 * c2) * internal_dyad(2, 1);
  return up + up.adjoint();
}

}  // namespace

Operator dark_state(const ModelParams& params) {
  const double omega = std::sqrt(params.omega_sq());
  if (!(omega > 0.0)) throw InvalidArgument("dark_state: omega1^2 + omega2^2 must be > 0");
  CVector psi = CVector::Zero(3);
  psi(0) = params.omega2 / omega;
  psi(1) = -params.omega1 / omega;
  return {SpaceLabel::internal(), psi * psi.adjoint()};
}

Operator thermal_mu(double n_bar, int n_max) {
  if (!(n_bar >= 0.0) || !std::isfinite(n_bar)) throw InvalidArgument("thermal_mu: n_bar must be >= 0");
  const SpaceLabel space = SpaceLabel::motional(n_max);
  CMatrix m = CMatrix::Zero(space.dim(), space.dim());
  const double q = n_bar / (1.0 + n_bar);
  double p = 1.0;
  double norm = 0.0;
  for (Index n = 0; n < space.dim(); ++n) {
    m(n, n) = p;
    norm += p;
    p *= q;
  }
  return {space, m / norm};
}

Operator internal_hamiltonian(const ModelParams& params, DetuningConvention convention) {
  const double sign = convention == DetuningConvention::GroundShift ? 1.0 : -1.0;
  Operator h = (sign * params.delta) * (internal_dyad(0, 0) + internal_dyad(1, 1));
  return h + laser_coupling(params, 1.0, 1.0);
}

SuperOperator internal_dissipator(const ModelParams& params) {
  return lindblad_superop(internal_dyad(0, 2), params.gamma1) +
         lindblad_superop(internal_dyad(1, 2), params.gamma2);
}

SuperOperator internal_liouvillian(const ModelParams& params, DetuningConvention convention) {
  return commutator_superop(internal_hamiltonian(params, convention)) + internal_dissipator(params);
}

InteractionDerivatives interaction_derivatives(const ModelParams& params) {
  // V(x) = (1/2) sum_j Omega_j exp(-i k_j x cos phi_j) |3><j| + h.c.
  const double k1 = params.eta1 * std::cos(params.phi1);
  const double k2 = params.eta2 * std::cos(params.phi2);
  return {laser_coupling(params, 1.0, 1.0), laser_coupling(params, -kI * k1, -kI * k2),
          laser_coupling(params, -0.5 * k1 * k1, -0.5 * k2 * k2)};
}

}  // namespace lambdaspec
