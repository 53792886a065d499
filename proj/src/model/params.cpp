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

#include "lambdaspec/model/params.hpp"

#include <cmath>
#include <string>

#include "lambdaspec/core/errors.hpp"

namespace lambdaspec {
namespace {

void require(bool ok, const char* field, const std::string& why) {
  if (!ok) throw InvalidArgument(std::string(field) + ": " + why);
}

}  // namespace

std::string_view pattern_name(EmissionPattern pattern) {
  switch (pattern) {
    case EmissionPattern::Isotropic:
      return "isotropic";
    case EmissionPattern::Dipole:
      return "dipole";
    case EmissionPattern::Custom:
      return "custom";
  }
  return "isotropic";
}

std::optional<EmissionPattern> parse_pattern(std::string_view name) {
  if (name == "isotropic") return EmissionPattern::Isotropic;
  if (name == "dipole") return EmissionPattern::Dipole;
  if (name == "custom") return EmissionPattern::Custom;
  return std::nullopt;
}

void ModelParams::validate() const {
  const std::pair<const char*, double> finite_fields[] = {
      {"omega1", omega1}, {"omega2", omega2}, {"delta", delta}, {"gamma1", gamma1},
      {"gamma2", gamma2}, {"eta1", eta1},     {"eta2", eta2},   {"phi1", phi1},
      {"phi2", phi2},     {"psi", psi},       {"custom_beta", custom_beta}};
  for (const auto& [name, value] : finite_fields) require(std::isfinite(value), name, "must be finite");
  require(gamma1 >= 0.0, "gamma1", "must be >= 0");
  require(gamma2 >= 0.0, "gamma2", "must be >= 0");
  require(gamma() > 0.0, "gamma1", "gamma1 + gamma2 must be > 0");
  require(omega_sq() > 0.0, "omega1", "omega1^2 + omega2^2 must be > 0");
  require(eta1 >= 0.0, "eta1", "must be >= 0");
  require(eta2 >= 0.0, "eta2", "must be >= 0");
  require(n_max >= 1, "n_max", "must be >= 1");
  if (pattern == EmissionPattern::Custom) {
    require(custom_beta > 0.0 && custom_beta <= 1.0, "custom_beta", "must lie in (0, 1]");
  }
}

double ModelParams::eta() const { return eta1 * std::cos(phi1) - eta2 * std::cos(phi2); }

double ModelParams::beta() const {
  switch (pattern) {
    case EmissionPattern::Isotropic:
      return 1.0 / 3.0;
    case EmissionPattern::Dipole:
      return 2.0 / 5.0;
    case EmissionPattern::Custom:
      return custom_beta;
  }
  return 1.0 / 3.0;
}

int default_n_max(double n_bar_estimate) {
  return std::max(15, static_cast<int>(std::ceil(8.0 * n_bar_estimate)));
}

namespace presets {

ModelParams fig2a() {
  ModelParams p;
  p.omega1 = 8.5;
  p.omega2 = 8.5;
  p.delta = 35.0;
  p.gamma1 = 5.0;
  p.gamma2 = 5.0;
  p.eta1 = 0.01;
  p.eta2 = 0.01;
  return p;
}

ModelParams fig2b() {
  ModelParams p = fig2a();
  p.eta1 = 0.05;
  p.eta2 = 0.05;
  return p;
}

ModelParams fig3(double delta) {
  ModelParams p;
  p.omega1 = 10.0;
  p.omega2 = 10.0;
  p.delta = delta;
  p.gamma1 = 2.5;
  p.gamma2 = 2.5;
  p.eta1 = 1e-4;
  p.eta2 = 1e-4;
  return p;
}

ModelParams fig4() {
  ModelParams p = fig2b();
  p.delta = 15.0;
  return p;
}

}  // namespace presets
}  // namespace lambdaspec
