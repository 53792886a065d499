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
#include <string>
#include <vector>

#include "lambdaspec/core/superoperator.hpp"
#include "lambdaspec/model/quadrature.hpp"

namespace lambdaspec {

/// Full master equation on the truncated composite space: laser coupling
/// with exact exp(-+i k_j cos(phi_j) x), recoil on emission integrated over
/// cos(theta) by quadrature.
struct FullLiouvillian {
  SuperOperator l;
  std::vector<QuadratureNode> quadrature;
  ModelParams params;
};

FullLiouvillian build_full_liouvillian(const ModelParams& params, int quadrature_nodes = 16,
                                       DetuningConvention convention = kDetuningConvention);

/// Unit-trace null vector. Throws DegenerateSteadyState when the null space
/// is not one-dimensional, NumericalFailure when the result is not positive.
Operator steady_state(const FullLiouvillian& full);

/// Population of the highest Fock level.
double fock_cutoff_population(const Operator& rho);

/// exp(-i eta1 cos(psi) x) |1><3|
Operator detected_operator(const ModelParams& params, double psi);

struct OracleSpectrum {
  std::vector<double> omega;
  std::vector<double> s;            ///< NaN where the solve failed
  std::vector<std::string> errors;  ///< per frequency; empty on success
  double elastic_weight = 0.0;      ///< |Tr{D^dag rho_st}|^2
  double cutoff_population = 0.0;
  std::vector<std::string> warnings;
};

/// Re Tr{D^dag X} with (i w - L) X = D rho_st - rho_st Tr{D rho_st}; the
/// stationary pole is deflated before the per-frequency solves.
OracleSpectrum oracle_spectrum(const FullLiouvillian& full, const Operator& rho_st,
                               std::span<const double> omega_grid, double psi);

/// Isolated peak inside [lo, hi]: centre from a parabola through the
/// maximum, half-width from the half-maximum crossings.
struct PeakFit {
  double center = 0.0;
  double height = 0.0;
  double half_width = 0.0;
  bool ok = false;
};

PeakFit fit_peak(std::span<const double> omega, std::span<const double> values, double lo, double hi);

}  // namespace lambdaspec
