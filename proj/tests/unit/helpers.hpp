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

#include <random>

#include "lambdaspec/core/operator.hpp"

namespace lambdaspec::testing {

inline CMatrix random_matrix(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix m(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

inline CMatrix random_hermitian(Index n, std::mt19937_64& rng) {
  CMatrix m = random_matrix(n, rng);
  return 0.5 * (m + m.adjoint());
}

}  // namespace lambdaspec::testing
