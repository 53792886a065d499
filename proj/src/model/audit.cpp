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

#include "lambdaspec/model/audit.hpp"

#include <algorithm>
#include <sstream>

#include "lambdaspec/model/lambda_system.hpp"

namespace lambdaspec {
namespace {

ConventionReport evaluate(const ModelParams& params, DetuningConvention convention) {
  const SpectralDecomposition dec = spectral_decompose(internal_liouvillian(params, convention));
  const Operator v1 = interaction_derivatives(params).v1;
  const Operator rho = dark_state(params);
  const Complex sp = coupling_resolvent(dec, v1, rho, 1.0);
  const Complex sm = coupling_resolvent(dec, v1, rho, -1.0);
  const Complex cp = coupling_closed_form(params, 1.0);
  const Complex cm = coupling_closed_form(params, -1.0);
  auto rel = [](Complex a, Complex b) { return std::abs(a - b) / std::max({std::abs(b), 1e-300}); };
  ConventionReport r{convention, coefficients_from(sp, sm), cp, std::max(rel(sp, cp), rel(sm, cm)), false};
  r.cools = r.coefficients.gamma_s > 0.0;
  return r;
}

}  // namespace

DetuningAudit detuning_sign_audit(const ModelParams& params) {
  params.validate();
  DetuningAudit a{evaluate(params, DetuningConvention::GroundShift),
                  evaluate(params, DetuningConvention::ExcitedShift), DetuningConvention::GroundShift, {}};
  a.preferred = a.ground_shift.closed_form_deviation <= a.excited_shift.closed_form_deviation
                    ? DetuningConvention::GroundShift
                    : DetuningConvention::ExcitedShift;
  std::ostringstream msg;
  msg.precision(6);
  msg << "ground-shift: closed-form deviation " << a.ground_shift.closed_form_deviation << ", gamma_S "
      << a.ground_shift.coefficients.gamma_s << "; excited-shift: closed-form deviation "
      << a.excited_shift.closed_form_deviation << ", gamma_S " << a.excited_shift.coefficients.gamma_s
      << "; preferred "
      << (a.preferred == DetuningConvention::GroundShift ? "ground-shift" : "excited-shift");
  a.summary = msg.str();
  return a;
}

}  // namespace lambdaspec
