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

#include "lambdaspec/spectrum/elastic.hpp"

namespace lambdaspec {

double elastic_peak_weight(const ExpansionOperators& ops, const PerturbativeState& steady) {
  const Complex amp = trace_product(ops.d0().matrix().adjoint(), steady.rho2) +
                      trace_product(ops.d1().matrix().adjoint(), steady.rho1);
  return std::norm(amp);
}

}  // namespace lambdaspec
