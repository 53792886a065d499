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
#include "lambdaspec/model/expansion.hpp"

namespace lambdaspec {

/// Second-order motional coefficients. A_minus and A_plus are the cooling
/// and heating rates of the phonon populations, d<n>/dt = -gamma_s <n> + A_plus.
struct PhononCoefficients {
  Complex s_plus;   ///< s(+nu)
  Complex s_minus;  ///< s(-nu)
  double a_plus = 0.0;
  double a_minus = 0.0;
  double gamma_s = 0.0;  ///< A_minus - A_plus
  double nu_bar = 0.0;   ///< Im s(nu) + Im s(-nu)
  double n_bar = 0.0;    ///< A_plus / gamma_s
};

/// s(w) = Tr{V1 (i w - L_I)^{-1} V1 rho_D}, with the stationary direction of
/// L_I excluded. Throws NumericalFailure if V1 rho_D has a component along it.
Complex coupling_resolvent(const SpectralDecomposition& l_internal, const Operator& v1,
                           const Operator& rho_dark, double frequency);

/// Closed form of s(w) in terms of the laser parameters.
Complex coupling_closed_form(const ModelParams& params, double frequency);

/// Derived quantities from s(+-nu); no regime check.
PhononCoefficients coefficients_from(Complex s_plus, Complex s_minus);

/// Both routes, cross-checked to 1e-9 relative (NumericalFailure otherwise).
/// Throws HeatingRegime when gamma_s <= 0.
PhononCoefficients phonon_coefficients(const ExpansionOperators& ops);

/// Damped-oscillator generator in the dark subspace,
///   L_eff mu = -i nu_bar [a^dag a, mu] + g_minus D[a] mu + g_plus D[a^dag] mu,
/// D[c] mu = 2 c mu c^dag - c^dag c mu - mu c^dag c, with eigenvalues
///   lambda(N, ell) = -i ell nu_bar - (2N + |ell|) (g_minus - g_plus).
struct PhononRates {
  double nu_bar = 0.0;
  double g_minus = 0.0;
  double g_plus = 0.0;
};

/// Rates reproducing the second-order dynamics of the full Liouvillian:
/// g_-+ = A_-+ / 2, so populations relax at gamma_s and sideband coherences
/// at gamma_s / 2.
PhononRates effective_rates(const PhononCoefficients& coeffs);

/// Eigenmode of L_eff. Sector ell holds mu ~ sum_n c_n |n+ell><n| (for
/// ell < 0, |n><n+|ell||).
struct PhononMode {
  int level = 0;  ///< N
  int ell = 0;
  Complex eigenvalue;   ///< numerical, at the requested n_max
  Complex closed_form;  ///< -i ell nu_bar - (2N + |ell|) (g_minus - g_plus)
  Operator right;       ///< biorthonormal with `left`; (0,0) is the thermal state
  Operator left;
};

/// Diagonalizes L_eff sector by sector on the Fock space truncated at n_max
/// and returns the eigenmode nearest to each requested (N, ell). Throws
/// TruncationError when doubling n_max moves one of them by more than 1e-8
/// relative to the rates.
std::vector<PhononMode> phonon_effective_eigensystem(const PhononRates& rates, int n_max,
                                                     std::span<const int> levels,
                                                     std::span<const int> ells);

/// Dense L_eff on the truncated motional space.
SuperOperator phonon_effective_liouvillian(const PhononRates& rates, int n_max);

}  // namespace lambdaspec
