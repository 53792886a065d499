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

#include "lambdaspec/spectrum/weights.hpp"

#include <array>
#include <sstream>

#include "lambdaspec/core/errors.hpp"
#include "lambdaspec/spectrum/traces.hpp"

namespace lambdaspec {
namespace {

CMatrix comm(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

// Internal reduced resolvent at z, excluding any group sitting on z. Errors
// name the colliding internal and external eigenvalues.
CMatrix resolve(const SpectralDecomposition& dec, Complex z, Complex lambda_i, int ell, const CMatrix& x) {
  try {
    const std::vector<std::size_t> on_pole = dec.groups_near(z);
    return apply_reduced_resolvent(dec, z, on_pole, x);
  } catch (const SingularResolvent& e) {
    std::ostringstream msg;
    msg << "weight for lambda_I = " << lambda_i << ", lambda_E = " << Complex(0.0, ell) << ": " << e.what();
    throw SingularResolvent(msg.str());
  }
}

// Pieces of the first-order steady-state correction,
//   rho1 = -i sum_{l'} [alpha_{l'} (x) u_{l'} - beta_{l'} (x) w_{l'}],
// with t_u = Tr{x u}, t_w = Tr{x w}.
struct FirstOrder {
  int ell;
  CMatrix alpha;
  CMatrix beta;
  Complex t_u;
  Complex t_w;
};

}  // namespace

std::vector<LineShapeTerm> g_weights(const ExpansionOperators& ops, const SpectralDecomposition& internal,
                                     const PhononCoefficients& coeffs) {
  const std::size_t dark = [&] {
    const std::vector<std::size_t> zero = internal.groups_near(0.0);
    if (zero.size() != 1 || internal.groups()[zero.front()].size() != 1) {
      throw NumericalFailure("g_weights: internal Liouvillian has no unique stationary state");
    }
    return zero.front();
  }();

  const CMatrix& v1 = ops.v1().matrix();
  const CMatrix& v2 = ops.v2().matrix();
  const CMatrix& rho = ops.rho_dark().matrix();
  const CMatrix d0 = ops.d_internal().matrix();
  const CMatrix d0_dag = d0.adjoint();
  const double n_bar = coeffs.n_bar;

  std::array<FirstOrder, 2> first{};
  for (int i = 0; i < 2; ++i) {
    const int ell = i == 0 ? 1 : -1;
    const Complex z = Complex(0.0, -ell);
    const ExternalTraces t = external_trace_identities(n_bar, ell);
    first[static_cast<std::size_t>(i)] = {ell, resolve(internal, z, 0.0, ell, v1 * rho),
                                          resolve(internal, z, 0.0, ell, rho * v1), t.commutator + t.mu_x,
                                          t.mu_x};
  }

  // Internal part of Tr_E{L1 rho1 + L2 rho0}; its stationary component vanishes.
  CMatrix z2 = -0.5 * kI * comm(v2, rho) * external_trace_identities(n_bar, 0).x2_mu;
  for (const FirstOrder& f : first) z2 -= comm(v1, f.alpha) * f.t_u - comm(v1, f.beta) * f.t_w;
  const std::size_t dark_only[] = {dark};
  if (std::abs(internal.coefficients(z2)(static_cast<Index>(internal.groups()[dark].front()))) >
      1e-10 * std::max(1.0, z2.norm())) {
    throw NumericalFailure("g_weights: second-order source has a stationary component");
  }
  const CMatrix sigma2 = apply_reduced_resolvent(internal, 0.0, dark_only, z2);

  std::vector<LineShapeTerm> terms;
  for (std::size_t g = 0; g < internal.groups().size(); ++g) {
    const Complex lambda_i = internal.group_eigenvalue(g);
    const std::size_t group[] = {g};
    auto project = [&](const CMatrix& x) { return apply_projector(internal, group, x); };
    for (int ell = -1; ell <= 1; ++ell) {
      if (g == dark && ell == 0) continue;
      const Complex lambda0 = lambda_i + kI * static_cast<double>(ell);
      Complex weight = 0.0;
      if (ell != 0) {
        // R L1 P0 D0 rho1: only the first-order piece in sector ell survives.
        const FirstOrder& f = first[ell == 1 ? 0 : 1];
        const CMatrix src = comm(v1, project(d0 * f.alpha)) * f.t_u - comm(v1, project(d0 * f.beta)) * f.t_w;
        weight = -trace_product(d0_dag, resolve(internal, lambda0, lambda_i, ell, src));
      } else {
        // P0 L1 R D0 rho1 + P0 D0 rho2
        for (const FirstOrder& f : first) {
          const Complex z = lambda0 - kI * static_cast<double>(f.ell);
          const CMatrix ra = resolve(internal, z, lambda_i, f.ell, d0 * f.alpha);
          const CMatrix rb = resolve(internal, z, lambda_i, f.ell, d0 * f.beta);
          weight -= trace_product(d0_dag, project(comm(v1, ra))) * f.t_u -
                    trace_product(d0_dag, project(comm(v1, rb))) * f.t_w;
        }
        weight += trace_product(d0_dag, project(d0 * sigma2));
      }
      LineShapeTerm term;
      term.weight = weight;
      term.internal_group = g;
      term.ell = ell;
      term.internal_eigenvalue = lambda_i;
      if (g == dark) {
        term.component = Component::Sideband;
        term.pole = Complex(-0.5 * coeffs.gamma_s, ell * (1.0 + coeffs.nu_bar));
      } else {
        term.component = Component::Mollow;
        term.pole = lambda0;
      }
      terms.push_back(term);
    }
  }
  return terms;
}

}  // namespace lambdaspec
