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

#include <array>
#include <string>
#include <vector>

#include "lambdaspec/perturbation/eigenspace.hpp"

namespace lambdaspec {

/// Trace terms Tr{Da^dag P_b^lambda Dc rho_d} of one zero-order eigenspace,
/// evaluated on the composite space with the structured resolvent.
struct CompositeSectorTerms {
  std::vector<Sector> sectors;  ///< degenerate zero-order sectors of lambda0
  Complex lambda0;
  Complex s0;                   ///< D0 P0 D0 rho0
  std::array<Complex, 4> s1;    ///< D0 P1 D0 rho0, D1 P0 D0 rho0, D0 P0 D1 rho0, D0 P0 D0 rho1
  Complex main;                 ///< D0 P1 D0 rho1 + D0 P0 D0 rho2
  /// D1 P1 D0 rho0, D0 P1 D1 rho0, D1 P0 D0 rho1, D0 P0 D1 rho1, D2 P0 D0 rho0, D0 P0 D2 rho0
  std::array<Complex, 6> angular;
  Complex d1_d1;                ///< D1 P0 D1 rho0

  /// Full second-order weight.
  Complex second_order() const;
};

/// Every eigenspace with external eigenvalue |ell| <= 2 around the steady
/// state built from `steady`.
std::vector<CompositeSectorTerms> composite_terms(const ExpansionOperators& ops, const ZeroOrderStructure& zero,
                                                  const PerturbativeState& steady);

struct CheckEntry {
  std::string name;
  double value = 0.0;      ///< measured magnitude, relative to the reference
  double tolerance = 0.0;
  bool passed = false;
};

struct VanishingReport {
  double s0 = 0.0;  ///< reference sideband height
  std::vector<CheckEntry> entries;

  bool all_passed() const;
  std::string describe() const;
};

/// Zero- and first-order spectra, the angle-dependent second-order terms and
/// the invariance of the second-order spectrum under psi -> psi + 0.7 and
/// beta -> 2 beta, sampled at `sample_points` frequencies in [-2.47, 2.53].
/// Uses params.n_max for the composite truncation.
VanishingReport vanishing_order_checks(const ModelParams& params, int sample_points = 11,
                                       double tolerance = 1e-10);

}  // namespace lambdaspec
