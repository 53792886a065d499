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

#include "lambdaspec/perturbation/phonon.hpp"
#include "lambdaspec/spectrum/weights.hpp"

namespace lambdaspec {

struct SpectrumSummary {
  PhononCoefficients coefficients;
  double s0 = 0.0;
};

/// Spectrum on a frequency grid (units of nu, relative to laser 1). The
/// elastic delta peak is carried as a weight only.
struct SpectrumResult {
  std::vector<double> omega;
  std::vector<double> s_total;
  std::vector<double> s_sb;
  std::vector<double> s_m;
  double elastic_weight = 0.0;
  std::vector<LineShapeTerm> terms;
  SpectrumSummary summary;
};

/// S(w) = Re sum g / (i w - lambda), split by component. Throws
/// InvalidArgument unless the grid is finite and sorted.
SpectrumResult sample_spectrum(std::span<const LineShapeTerm> terms, double elastic_weight,
                               std::span<const double> omega_grid);

/// Evenly spaced grid including both ends; points >= 2.
std::vector<double> linear_grid(double omega_min, double omega_max, int points);

}  // namespace lambdaspec
