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

#include "lambdaspec/spectrum/sideband.hpp"

#include <cmath>
#include <limits>

namespace lambdaspec {

Complex sideband_amplitude_closed_form(const ModelParams& params, Complex lambda_e) {
  const double o = params.omega_sq();
  const Complex denom =
      o * (o + 4.0 * lambda_e * (kI * params.delta + lambda_e + 0.5 * params.gamma()));
  return -2.0 * kI * params.eta() * lambda_e * params.omega1 * params.omega2 * params.omega2 / denom;
}

Complex sideband_amplitude_trace(const ExpansionOperators& ops, const SpectralDecomposition& internal,
                                 Complex lambda_e) {
  const CMatrix& v1 = ops.v1().matrix();
  const CMatrix& rho = ops.rho_dark().matrix();
  const CMatrix r = apply_reduced_resolvent(internal, lambda_e, {}, v1 * rho - rho * v1);
  return trace_product(ops.d_internal().matrix().adjoint(), r);
}

double SidebandClosedForm::sample(double omega) const {
  const double g2 = half_width * half_width;
  const double a = omega - center;
  const double b = omega + center;
  return peak_plus * g2 / (a * a + g2) + peak_minus * g2 / (b * b + g2);
}

SidebandClosedForm sideband_closed_form(const ModelParams& params, const PhononCoefficients& coeffs) {
  SidebandClosedForm s;
  s.f_plus = sideband_amplitude_closed_form(params, kI);
  s.f_minus = sideband_amplitude_closed_form(params, -kI);
  s.center = 1.0 + coeffs.nu_bar;
  s.half_width = 0.5 * coeffs.gamma_s;
  const double n = coeffs.n_bar;
  s.weight_plus = n * std::norm(s.f_plus);
  s.weight_minus = (1.0 + n) * std::norm(s.f_minus);
  if (s.half_width > 0.0) {
    s.peak_plus = s.weight_plus / s.half_width;
    s.peak_minus = s.weight_minus / s.half_width;
  }
  const double o = params.omega_sq();
  const double o1 = params.omega1 * params.omega1;
  const double o2 = params.omega2 * params.omega2;
  s.s0 = o2 / (params.gamma() * o) * n * (1.0 + n);
  const double eta2 = params.eta() * params.eta();
  const double reduced = eta2 > 0.0 ? coeffs.gamma_s / eta2 : 0.0;
  const double denom = 4.0 * reduced * params.delta * o * o * (o - 4.0);
  s.s0_alt = denom != 0.0 ? o1 * o2 * o2 / denom : std::numeric_limits<double>::infinity();
  s.s0_alt_deviation = s.s0 > 0.0 ? std::abs(s.s0_alt - s.s0) / s.s0 : std::numeric_limits<double>::infinity();
  return s;
}

}  // namespace lambdaspec
