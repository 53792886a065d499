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

#include <immintrin.h>

#include "lambdaspec/kernels/kernels.hpp"

namespace lambdaspec::kernels::avx2 {

void accumulate_pole_sum(std::span<const double> omega, std::span<const Complex> poles,
                         std::span<const Complex> weights, std::span<double> out) {
  const std::size_t n = omega.size();
  const std::size_t body = n - n % 4;
  for (std::size_t t = 0; t < poles.size(); ++t) {
    const double a_s = -poles[t].real();
    const double c_s = poles[t].imag();
    const double gr_s = weights[t].real();
    const double gi_s = weights[t].imag();
    const __m256d a2 = _mm256_set1_pd(a_s * a_s);
    const __m256d c = _mm256_set1_pd(c_s);
    const __m256d gra = _mm256_set1_pd(gr_s * a_s);
    const __m256d gi = _mm256_set1_pd(gi_s);
    for (std::size_t k = 0; k < body; k += 4) {
      const __m256d b = _mm256_sub_pd(_mm256_loadu_pd(omega.data() + k), c);
      const __m256d num = _mm256_fmadd_pd(gi, b, gra);
      const __m256d den = _mm256_fmadd_pd(b, b, a2);
      const __m256d acc = _mm256_add_pd(_mm256_loadu_pd(out.data() + k), _mm256_div_pd(num, den));
      _mm256_storeu_pd(out.data() + k, acc);
    }
    for (std::size_t k = body; k < n; ++k) {
      const double b = omega[k] - c_s;
      out[k] += (gr_s * a_s + gi_s * b) / (a_s * a_s + b * b);
    }
  }
}

void caxpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  const std::size_t n = x.size();
  const std::size_t body = n - n % 2;
  // std::complex<double> is layout-compatible with double[2].
  const auto* xp = reinterpret_cast<const double*>(x.data());
  auto* yp = reinterpret_cast<double*>(y.data());
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  for (std::size_t k = 0; k < body; k += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * k);
    const __m256d xs = _mm256_permute_pd(xv, 0b0101);  // [xi, xr, ...]
    // even lanes: xr*ar - xi*ai, odd lanes: xi*ar + xr*ai
    const __m256d prod = _mm256_fmaddsub_pd(xv, ar, _mm256_mul_pd(xs, ai));
    _mm256_storeu_pd(yp + 2 * k, _mm256_add_pd(_mm256_loadu_pd(yp + 2 * k), prod));
  }
  for (std::size_t k = body; k < n; ++k) {
    const double xr = x[k].real();
    const double xi = x[k].imag();
    y[k] += Complex(xr * alpha.real() - xi * alpha.imag(), xi * alpha.real() + xr * alpha.imag());
  }
}

}  // namespace lambdaspec::kernels::avx2
