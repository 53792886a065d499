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

#include "lambdaspec/model/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "lambdaspec/core/errors.hpp"

namespace lambdaspec {

std::vector<QuadratureNode> gauss_legendre(int n) {
  if (n < 1) throw InvalidArgument("gauss_legendre: need at least one node");
  std::vector<QuadratureNode> nodes(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double u = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = u;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * u * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (u * p1 - p0) / (u * u - 1.0);
      const double step = p1 / dp;
      u -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - u * u) * dp * dp);
    nodes[static_cast<std::size_t>(i)] = {u, w};
    nodes[static_cast<std::size_t>(n - 1 - i)] = {-u, w};
  }
  if (n % 2 == 1) nodes[static_cast<std::size_t>(n / 2)].cos_theta = 0.0;
  return nodes;
}

std::vector<QuadratureNode> angular_quadrature(const ModelParams& params, int nodes) {
  if (params.pattern == EmissionPattern::Custom) {
    const double u = std::sqrt(params.custom_beta);
    return {{-u, 0.5}, {u, 0.5}};
  }
  std::vector<QuadratureNode> rule = gauss_legendre(nodes);
  for (auto& node : rule) {
    const double u = node.cos_theta;
    const double density = params.pattern == EmissionPattern::Dipole ? 0.375 * (1.0 + u * u) : 0.5;
    node.weight *= density;
  }
  return rule;
}

}  // namespace lambdaspec
