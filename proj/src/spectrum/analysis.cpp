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

#include "lambdaspec/spectrum/analysis.hpp"

#include "lambdaspec/perturbation/eigenspace.hpp"
#include "lambdaspec/spectrum/elastic.hpp"

namespace lambdaspec {

Analysis analyze(const ModelParams& params) {
  const ExpansionOperators ops(params);
  Analysis a;
  a.params = params;
  a.coefficients = phonon_coefficients(ops);
  SpectralDecomposition internal = spectral_decompose(ops.l_internal());
  for (std::size_t g = 0; g < internal.groups().size(); ++g) a.internal_eigenvalues.push_back(internal.group_eigenvalue(g));
  a.terms = g_weights(ops, internal, a.coefficients);
  a.sideband = sideband_closed_form(params, a.coefficients);
  const ZeroOrderStructure zero(std::move(internal), params.n_max);
  a.elastic_weight = elastic_peak_weight(ops, perturbed_steady_state(ops, zero, a.coefficients.n_bar));
  return a;
}

SpectrumResult spectrum_on_grid(const Analysis& analysis, std::span<const double> omega_grid) {
  SpectrumResult r = sample_spectrum(analysis.terms, analysis.elastic_weight, omega_grid);
  r.summary = {analysis.coefficients, analysis.sideband.s0};
  return r;
}

}  // namespace lambdaspec
