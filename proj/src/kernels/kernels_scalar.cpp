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

#include "lambdaspec/kernels/kernels.hpp"

namespace lambdaspec::kernels::scalar {

void accumulate_pole_sum(std::span<const double> omega, std::span<const Complex> poles,
                         std::span<const Complex> weights, std::span<double> out) {
  for (std::size_t t = 0; t < poles.size(); ++t) {
    const double a = -poles[t].real();
    const double gr = weights[t].real();
    const double gi = weights[t].imag();
    for (std::size_t k = 0; k < omega.size(); ++k) {
      // Re[g / (a + i b)] with b = omega - Im(pole)
      const double b = omega[k] - poles[t].imag();
      out[k] += (gr * a + gi * b) / (a * a + b * b);
    }
  }
}

void caxpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double xr = x[k].real();
    const double xi = x[k].imag();
    y[k] += Complex(xr * ar - xi * ai, xi * ar + xr * ai);
  }
}

}  // namespace lambdaspec::kernels::scalar
