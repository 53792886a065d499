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

#include "lambdaspec/spectrum/sample.hpp"

#include <algorithm>
#include <cmath>

#include "lambdaspec/core/errors.hpp"
#include "lambdaspec/kernels/kernels.hpp"

namespace lambdaspec {

SpectrumResult sample_spectrum(std::span<const LineShapeTerm> terms, double elastic_weight,
                               std::span<const double> omega_grid) {
  if (!std::all_of(omega_grid.begin(), omega_grid.end(), [](double w) { return std::isfinite(w); })) {
    throw InvalidArgument("sample_spectrum: grid contains non-finite values");
  }
  if (!std::is_sorted(omega_grid.begin(), omega_grid.end())) {
    throw InvalidArgument("sample_spectrum: grid must be sorted");
  }
  std::vector<Complex> sb_poles, sb_weights, m_poles, m_weights;
  for (const LineShapeTerm& t : terms) {
    auto& poles = t.component == Component::Sideband ? sb_poles : m_poles;
    auto& weights = t.component == Component::Sideband ? sb_weights : m_weights;
    poles.push_back(t.pole);
    weights.push_back(t.weight);
  }
  SpectrumResult r;
  r.omega.assign(omega_grid.begin(), omega_grid.end());
  r.s_sb.assign(r.omega.size(), 0.0);
  r.s_m.assign(r.omega.size(), 0.0);
  kernels::accumulate_pole_sum(r.omega, sb_poles, sb_weights, r.s_sb);
  kernels::accumulate_pole_sum(r.omega, m_poles, m_weights, r.s_m);
  r.s_total.resize(r.omega.size());
  for (std::size_t k = 0; k < r.omega.size(); ++k) r.s_total[k] = r.s_sb[k] + r.s_m[k];
  r.elastic_weight = elastic_weight;
  r.terms.assign(terms.begin(), terms.end());
  return r;
}

std::vector<double> linear_grid(double omega_min, double omega_max, int points) {
  if (!(omega_min < omega_max) || points < 2) {
    throw InvalidArgument("grid: need omega_min < omega_max and points >= 2");
  }
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double step = (omega_max - omega_min) / (points - 1);
  for (int k = 0; k < points; ++k) grid[static_cast<std::size_t>(k)] = omega_min + step * k;
  grid.back() = omega_max;
  return grid;
}

}  // namespace lambdaspec
