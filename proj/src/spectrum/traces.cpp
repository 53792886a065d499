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

#include "lambdaspec/spectrum/traces.hpp"

#include <cstdlib>

#include "lambdaspec/core/errors.hpp"
#include "lambdaspec/core/fock.hpp"

namespace lambdaspec {
namespace {

CMatrix project_sector(const CMatrix& x, int ell) {
  CMatrix out = CMatrix::Zero(x.rows(), x.cols());
  for (Index n = 0; n < x.rows(); ++n) {
    const Index m = n + ell;
    if (m >= 0 && m < x.cols()) out(n, m) = x(n, m);
  }
  return out;
}

}  // namespace

ExternalTraces external_trace_identities(double n_bar, int ell) {
  if (!(n_bar >= 0.0)) throw InvalidArgument("external traces: n_bar must be >= 0");
  switch (ell) {
    case 1:
      return {n_bar + 1.0, -1.0, 0.0};
    case -1:
      return {n_bar, 1.0, 0.0};
    case 0:
      return {0.0, 0.0, 2.0 * n_bar + 1.0};
    default:
      return {0.0, 0.0, 0.0};
  }
}

ExternalTraces external_traces_numeric(const Operator& mu, int ell) {
  if (mu.space().kind() != SpaceKind::Motional) throw InvalidArgument("external traces: motional state required");
  const CMatrix x = build_fock_operators(mu.space().n_max()).x.matrix();
  const CMatrix& m = mu.matrix();
  return {trace_product(project_sector(m * x, ell), x), trace_product(project_sector(x * m - m * x, ell), x),
          project_sector(x * x * m, ell).trace()};
}

}  // namespace lambdaspec
