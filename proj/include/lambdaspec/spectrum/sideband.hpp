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

#include "lambdaspec/core/spectral.hpp"
#include "lambdaspec/model/expansion.hpp"
#include "lambdaspec/perturbation/phonon.hpp"

namespace lambdaspec {

/// f(lambda_E) = Tr{D0^dag (lambda_E - L_I)^{-1} [V1, rho_D]} in closed form.
Complex sideband_amplitude_closed_form(const ModelParams& params, Complex lambda_e);

/// The same quantity from the internal decomposition.
Complex sideband_amplitude_trace(const ExpansionOperators& ops, const SpectralDecomposition& internal,
                                 Complex lambda_e);

/// Both motional sidebands. Each is a Lorentzian centred at +-(1 + nu_bar)
/// with integrated weight pi g, g = n_bar |f(+i nu)|^2 = (1 + n_bar) |f(-i nu)|^2,
/// and half-width gamma_s / 2 (the decay rate of the motional coherences),
/// so its peak is 2 g / gamma_s = 2 s0.
struct SidebandClosedForm {
  Complex f_plus;         ///< f(+i nu)
  Complex f_minus;        ///< f(-i nu)
  double center = 0.0;    ///< 1 + nu_bar
  double half_width = 0.0;    ///< gamma_s / 2
  double weight_plus = 0.0;   ///< n_bar |f(+i nu)|^2, line at +center
  double weight_minus = 0.0;  ///< (1 + n_bar) |f(-i nu)|^2, line at -center
  double peak_plus = 0.0;     ///< weight_plus / half_width
  double peak_minus = 0.0;
  double s0 = 0.0;            ///< Omega2^2 n_bar (1 + n_bar) / (gamma Omega^2) = g / gamma_s
  double s0_alt = 0.0;        ///< nu Omega1^2 Omega2^4 / (4 (gamma_s/eta^2) delta Omega^4 (Omega^2 - 4 nu^2))
  double s0_alt_deviation = 0.0;  ///< |s0_alt - s0| / s0

  double sample(double omega) const;
};

SidebandClosedForm sideband_closed_form(const ModelParams& params, const PhononCoefficients& coeffs);

}  // namespace lambdaspec
