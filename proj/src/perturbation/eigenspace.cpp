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

#include "lambdaspec/perturbation/eigenspace.hpp"

#include <sstream>

#include "lambdaspec/core/errors.hpp"
#include "lambdaspec/model/lambda_system.hpp"

namespace lambdaspec {
namespace {

int sector_of(const Operator& mu) {
  const CMatrix& m = mu.matrix();
  std::optional<int> ell;
  const double scale = max_abs(m);
  for (Index c = 0; c < m.cols(); ++c)
    for (Index r = 0; r < m.rows(); ++r) {
      if (std::abs(m(r, c)) <= 1e-14 * scale) continue;
      const int e = static_cast<int>(c - r);
      if (ell && *ell != e) throw InvalidArgument("motional element spans several external sectors");
      ell = e;
    }
  if (!ell) throw InvalidArgument("motional element is zero");
  return *ell;
}

}  // namespace

PerturbativeState correct_eigenspace(const ExpansionOperators& ops, const ZeroOrderStructure& zero,
                                     std::size_t internal_group, const Operator& motional_right,
                                     const Operator& motional_left) {
  const SpectralDecomposition& dec = zero.internal();
  if (internal_group >= dec.groups().size() || dec.groups()[internal_group].size() != 1) {
    throw InvalidArgument("correct_eigenspace: internal group must have exactly one member");
  }
  if (motional_right.space().n_max() != ops.n_max() || motional_left.space().n_max() != ops.n_max()) {
    throw InvalidArgument("correct_eigenspace: motional truncation mismatch");
  }
  const int ell = sector_of(motional_right);
  if (sector_of(motional_left.adjoint()) != ell) {
    throw InvalidArgument("correct_eigenspace: left and right motional elements in different sectors");
  }
  const std::size_t k = dec.groups()[internal_group].front();

  PerturbativeState s;
  s.lambda0 = zero.eigenvalue({internal_group, ell});
  s.sectors = zero.sectors_near(s.lambda0);
  s.rho0 = tensor(dec.right(k), motional_right).matrix();
  s.check_rho0 = tensor(dec.left(k), motional_left).matrix();
  const Complex norm = trace_product(s.check_rho0, s.rho0);
  if (std::abs(norm) < 1e-300) throw InvalidArgument("correct_eigenspace: left and right elements orthogonal");
  s.check_rho0 /= norm;

  const CMatrix l1_rho0 = ops.apply_l1(s.rho0);
  s.lambda1 = trace_product(s.check_rho0, l1_rho0);
  s.rho1 = zero.resolvent(s.lambda0, s.sectors, l1_rho0);
  s.check_rho1 = zero.resolvent_left(s.lambda0, s.sectors, ops.apply_l1_left(s.check_rho0));

  const CMatrix l1_rho1 = ops.apply_l1(s.rho1);
  const CMatrix l2_rho0 = ops.apply_l2(s.rho0);
  s.lambda2 = trace_product(s.check_rho0, l2_rho0) + trace_product(s.check_rho0, l1_rho1);
  s.rho2 = zero.resolvent(s.lambda0, s.sectors, l1_rho1 + l2_rho0);

  if (std::abs(s.lambda1) > 1e-10 * std::max(std::abs(s.lambda2), 1e-300) && std::abs(s.lambda1) > 1e-14) {
    std::ostringstream msg;
    msg << "first-order eigenvalue correction " << s.lambda1 << " does not vanish (lambda2 = " << s.lambda2
        << ")";
    throw NumericalFailure(msg.str());
  }
  return s;
}

PerturbativeState perturbed_steady_state(const ExpansionOperators& ops, const ZeroOrderStructure& zero,
                                         double n_bar) {
  const Operator mu = thermal_mu(n_bar, ops.n_max());
  const Operator id = Operator::identity(mu.space());
  return correct_eigenspace(ops, zero, zero.stationary_group(), mu, id);
}

CMatrix apply_zero_order_projector(const ZeroOrderStructure& zero, const PerturbativeState& state,
                                   const CMatrix& x) {
  return zero.project(state.sectors, x);
}

CMatrix apply_first_order_projector(const ExpansionOperators& ops, const ZeroOrderStructure& zero,
                                    const PerturbativeState& state, const CMatrix& x) {
  const CMatrix a = zero.resolvent(state.lambda0, state.sectors, ops.apply_l1(zero.project(state.sectors, x)));
  const CMatrix b = zero.project(state.sectors, ops.apply_l1(zero.resolvent(state.lambda0, state.sectors, x)));
  return a + b;
}

}  // namespace lambdaspec
