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

#include <numbers>
#include <optional>
#include <string_view>

namespace lambdaspec {

/// Angular distribution of spontaneously emitted photons around the motional
/// axis. Only its second moment beta = int dcos(theta) N(cos theta) cos^2(theta)
/// enters the Lamb-Dicke expansion.
enum class EmissionPattern {
  Isotropic,  ///< N = 1/2, beta = 1/3
  Dipole,     ///< N = 3/8 (1 + u^2), beta = 2/5
  Custom,     ///< two-point distribution at u = +-sqrt(beta)
};

std::string_view pattern_name(EmissionPattern pattern);
std::optional<EmissionPattern> parse_pattern(std::string_view name);

/// Which internal levels carry the detuning in the laser frame.
enum class DetuningConvention {
  GroundShift,   ///< H0 = +delta (|1><1| + |2><2|)
  ExcitedShift,  ///< H0 = -delta (|1><1| + |2><2|)
};

/// Fixed library convention. detuning_sign_audit() re-derives it; a unit test
/// keeps the two in agreement.
inline constexpr DetuningConvention kDetuningConvention = DetuningConvention::GroundShift;

/// Physical inputs in trap units (hbar = nu = x0 = 1). Levels |1>,|2> are the
/// ground states, |3> the excited state; laser j drives |j> <-> |3>.
struct ModelParams {
  double omega1 = 0.0;  ///< Rabi frequency of laser 1
  double omega2 = 0.0;  ///< Rabi frequency of laser 2
  double delta = 0.0;   ///< common detuning of both lasers
  double gamma1 = 0.0;  ///< decay rate |3> -> |1>
  double gamma2 = 0.0;  ///< decay rate |3> -> |2>
  double eta1 = 0.0;    ///< Lamb-Dicke parameter of laser 1 (k1 x0)
  double eta2 = 0.0;    ///< Lamb-Dicke parameter of laser 2 (k2 x0)
  double phi1 = 0.0;    ///< angle of laser 1 to the motional axis
  double phi2 = std::numbers::pi;
  double psi = std::numbers::pi / 2;  ///< detector angle to the motional axis
  EmissionPattern pattern = EmissionPattern::Isotropic;
  double custom_beta = 1.0 / 3.0;  ///< used only with EmissionPattern::Custom
  int n_max = 15;                  ///< Fock truncation

  /// Throws InvalidArgument naming the offending field.
  void validate() const;

  double gamma() const noexcept { return gamma1 + gamma2; }
  double omega_sq() const noexcept { return omega1 * omega1 + omega2 * omega2; }
  /// Effective Lamb-Dicke parameter of the two-photon coupling.
  double eta() const;
  double beta() const;
};

/// max(15, ceil(8 <n>)).
int default_n_max(double n_bar_estimate);

/// Named reference parameter sets (eta1 = eta2, gamma1 = gamma2).
namespace presets {
ModelParams fig2a();
ModelParams fig2b();
ModelParams fig3(double delta);
ModelParams fig4();
}  // namespace presets

}  // namespace lambdaspec
