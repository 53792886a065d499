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

#include <string>

#include "lambdaspec/model/params.hpp"
#include "lambdaspec/perturbation/phonon.hpp"

namespace lambdaspec {

struct ConventionReport {
  DetuningConvention convention;
  PhononCoefficients coefficients;  ///< resolvent route, no regime check
  Complex closed_form_plus;         ///< closed-form s(+nu)
  double closed_form_deviation;     ///< max relative |s_resolvent - s_closed| over +-nu
  bool cools;                       ///< gamma_s > 0
};

/// Evaluates the motional coupling under both detuning conventions and
/// reports which one reproduces the closed form and yields cooling.
struct DetuningAudit {
  ConventionReport ground_shift;
  ConventionReport excited_shift;
  DetuningConvention preferred;
  std::string summary;
};

DetuningAudit detuning_sign_audit(const ModelParams& params);

}  // namespace lambdaspec
