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

#include "lambdaspec/model/expansion.hpp"
#include "lambdaspec/perturbation/eigenspace.hpp"

namespace lambdaspec {

/// Weight of the delta peak at the laser frequency,
/// |Tr{D0^dag rho2} + Tr{D1^dag rho1}|^2, from the perturbed steady state.
/// Fourth order in eta; depends on the detector angle through D1.
double elastic_peak_weight(const ExpansionOperators& ops, const PerturbativeState& steady);

}  // namespace lambdaspec
