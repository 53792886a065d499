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

#include "lambdaspec/core/fock.hpp"

#include <cmath>

#include "lambdaspec/core/errors.hpp"

namespace lambdaspec {

FockOperators build_fock_operators(int n_max) {
  if (n_max < 1) throw InvalidArgument("build_fock_operators: n_max must be >= 1");
  const SpaceLabel space = SpaceLabel::motional(n_max);
  CMatrix a = CMatrix::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  CMatrix a_dag = a.adjoint();
  CMatrix x = a + a_dag;
  return {Operator(space, std::move(a)), Operator(space, std::move(a_dag)), Operator(space, std::move(x))};
}

}  // namespace lambdaspec
