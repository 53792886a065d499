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

/// Ladder operators on the Fock space truncated at n_max. a|n> = sqrt(n)|n-1>;
/// a_dag is the exact adjoint of the truncated a, so a_dag|n_max> = 0 and
/// [a, a_dag] = 1 fails only in the last diagonal entry. x = a + a_dag is the
/// position in units of the oscillator length x0.
struct FockOperators {
  Operator a;
  Operator a_dag;
  Operator x;
};

FockOperators build_fock_operators(int n_max);

}  // namespace lambdaspec
