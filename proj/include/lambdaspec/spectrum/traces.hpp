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

#include "lambdaspec/core/operator.hpp"

namespace lambdaspec {

/// External traces entering the second-order weights, for the external
/// eigenvalue lambda_E = i ell. P^{i ell} X = sum_n |n><n| X |n+ell><n+ell|.
struct ExternalTraces {
  Complex mu_x;        ///< Tr{(P (mu x)) x}
  Complex commutator;  ///< Tr{(P [x, mu]) x}
  Complex x2_mu;       ///< Tr{P (x^2 mu)}
};

/// Closed forms for a thermal state with mean phonon number n_bar. Only
/// ell in {-1, 0, 1} contributes; other sectors return zeros.
ExternalTraces external_trace_identities(double n_bar, int ell);

/// The same traces by explicit projection of an arbitrary motional state.
ExternalTraces external_traces_numeric(const Operator& mu, int ell);

}  // namespace lambdaspec
