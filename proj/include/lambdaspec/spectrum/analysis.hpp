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

#include "lambdaspec/spectrum/sample.hpp"
#include "lambdaspec/spectrum/sideband.hpp"

namespace lambdaspec {

/// Everything the perturbative spectrum needs, computed once per parameter set.
struct Analysis {
  ModelParams params;
  PhononCoefficients coefficients;
  std::vector<Complex> internal_eigenvalues;  ///< one per internal group
  std::vector<LineShapeTerm> terms;
  SidebandClosedForm sideband;
  double elastic_weight = 0.0;
};

/// Throws HeatingRegime outside the cooling regime.
Analysis analyze(const ModelParams& params);

SpectrumResult spectrum_on_grid(const Analysis& analysis, std::span<const double> omega_grid);

}  // namespace lambdaspec
