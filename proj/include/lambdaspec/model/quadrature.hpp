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

#include <vector>

#include "lambdaspec/model/params.hpp"

namespace lambdaspec {

struct QuadratureNode {
  double cos_theta;
  double weight;
};

/// n-point Gauss-Legendre rule on [-1, 1].
std::vector<QuadratureNode> gauss_legendre(int n);

/// Nodes over cos(theta) whose weights include the emission pattern, so the
/// weights sum to 1 and sum w u^2 = beta. Custom patterns use the two-point
/// rule at +-sqrt(beta) regardless of `nodes`.
std::vector<QuadratureNode> angular_quadrature(const ModelParams& params, int nodes);

}  // namespace lambdaspec
