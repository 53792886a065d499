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

#include "lambdaspec/core/spectral.hpp"
#include "lambdaspec/model/expansion.hpp"
#include "lambdaspec/perturbation/phonon.hpp"

namespace lambdaspec {

enum class Component { Sideband, Mollow };

/// One pole of the second-order spectrum. Its contribution at detuning w
/// (in units of nu, relative to laser 1) is Re[weight / (i w - pole)].
struct LineShapeTerm {
  Complex pole;
  Complex weight;
  Component component = Component::Mollow;
  std::size_t internal_group = 0;  ///< group of the internal eigenvalue
  int ell = 0;                     ///< external eigenvalue i ell
  Complex internal_eigenvalue;
};

/// Second-order weights g(lambda) for every internal group and external
/// eigenvalue i ell, ell in {-1, 0, 1}, from internal resolvents and the
/// closed-form external traces at n_bar = coeffs.n_bar. Sideband poles carry
/// the second-order pole i ell (1 + nu_bar) - gamma_s / 2 of the motional
/// coherences; Mollow poles are
/// zero order. The stationary ell = 0 sector has vanishing weight and is
/// omitted (the elastic peak is reported separately).
std::vector<LineShapeTerm> g_weights(const ExpansionOperators& ops, const SpectralDecomposition& internal,
                                     const PhononCoefficients& coeffs);

}  // namespace lambdaspec
