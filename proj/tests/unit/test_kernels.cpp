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


#include <doctest.h>

#include <random>
#include <vector>

#include "lambdaspec/core/errors.hpp"
#include "lambdaspec/kernels/kernels.hpp"

using namespace lambdaspec;

namespace {

struct PoleData {
  std::vector<double> omega;
  std::vector<Complex> poles, weights;
};

PoleData random_poles(std::size_t n_omega, std::size_t n_poles, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  PoleData d;
  d.omega.resize(n_omega);
  for (double& w : d.omega) w = u(rng);
  for (std::size_t k = 0; k < n_poles; ++k) {
    d.poles.emplace_back(-0.001 - std::abs(u(rng)), u(rng));
    d.weights.emplace_back(u(rng), u(rng));
  }
  return d;
}

double rel_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]) / (1.0 + std::abs(a[k])));
  return worst;
}

}  // namespace

TEST_CASE("scalar pole sum matches the definition") {
  const PoleData d = random_poles(9, 3, 1);
  std::vector<double> out(d.omega.size(), 1.0);
  kernels::scalar::accumulate_pole_sum(d.omega, d.poles, d.weights, out);
  for (std::size_t k = 0; k < d.omega.size(); ++k) {
    double s = 1.0;
    for (std::size_t t = 0; t < d.poles.size(); ++t) s += (d.weights[t] / (kI * d.omega[k] - d.poles[t])).real();
    CHECK(std::abs(out[k] - s) < 1e-13 * (1.0 + std::abs(s)));
  }
}

TEST_CASE("AVX2 kernels agree with the scalar reference") {
  if (!kernels::backend_available(kernels::Backend::Avx2)) {
    MESSAGE("AVX2 not available; skipping");
    return;
  }
  // Odd lengths exercise the remainder loops.
  for (std::size_t n : {1u, 3u, 4u, 7u, 64u, 1001u}) {
    const PoleData d = random_poles(n, 17, static_cast<unsigned>(n));
    std::vector<double> ref(n, 0.5), simd(n, 0.5);
    kernels::scalar::accumulate_pole_sum(d.omega, d.poles, d.weights, ref);
    kernels::avx2::accumulate_pole_sum(d.omega, d.poles, d.weights, simd);
    CHECK(rel_diff(ref, simd) < 1e-13);

    std::vector<Complex> y1(n), y2(n), x(n);
    std::mt19937_64 rng(n);
    std::normal_distribution<double> g;
    for (std::size_t k = 0; k < n; ++k) {
      x[k] = Complex(g(rng), g(rng));
      y1[k] = y2[k] = Complex(g(rng), g(rng));
    }
    const Complex alpha(0.3, -1.7);
    kernels::scalar::caxpy(alpha, x, y1);
    kernels::avx2::caxpy(alpha, x, y2);
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(y1[k] - y2[k]));
    CHECK(worst < 1e-14);
  }
}

TEST_CASE("backend selection") {
  kernels::set_backend(kernels::Backend::Scalar);
  CHECK(kernels::active_backend() == kernels::Backend::Scalar);
  const PoleData d = random_poles(33, 5, 9);
  std::vector<double> a(33), b(33);
  kernels::accumulate_pole_sum(d.omega, d.poles, d.weights, a);
  kernels::reset_backend();
  kernels::accumulate_pole_sum(d.omega, d.poles, d.weights, b);
  CHECK(rel_diff(a, b) < 1e-13);
  if (!kernels::backend_available(kernels::Backend::Avx2))
    CHECK_THROWS_AS(kernels::set_backend(kernels::Backend::Avx2), InvalidArgument);
}

TEST_CASE("kernels reject mismatched spans") {
  std::vector<double> omega(4), out(3);
  std::vector<Complex> p(2), w(2);
  CHECK_THROWS_AS(kernels::accumulate_pole_sum(omega, p, w, out), InvalidArgument);
}
