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

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "lambdaspec/core/errors.hpp"
#include "lambdaspec/perturbation/eigenspace.hpp"
#include "lambdaspec/perturbation/phonon.hpp"

using namespace lambdaspec;

namespace {

ModelParams small(ModelParams p, int n_max) {
  p.n_max = n_max;
  return p;
}

double eta2(const ModelParams& p) { return p.eta() * p.eta(); }

}  // namespace

TEST_CASE("phonon coefficients at the weak-drive parameters") {
  const ModelParams p = small(presets::fig2a(), 4);
  const PhononCoefficients c = phonon_coefficients(ExpansionOperators(p));
  CHECK(c.a_minus / eta2(p) == doctest::Approx(3.610).epsilon(1e-3));
  CHECK(c.a_plus / eta2(p) == doctest::Approx(0.01827).epsilon(1e-3));
  CHECK(c.n_bar == doctest::Approx(0.00509).epsilon(2e-3));
  CHECK(std::abs(c.n_bar - 0.005) / 0.005 < 0.1);
  CHECK(c.gamma_s == doctest::Approx(c.a_minus - c.a_plus));
}

TEST_CASE("phonon coefficients at the detuned-drive parameters") {
  const ModelParams p = small(presets::fig4(), 4);
  const PhononCoefficients c = phonon_coefficients(ExpansionOperators(p));
  CHECK(std::abs(c.n_bar - 0.2) / 0.2 < 0.05);
  CHECK(c.gamma_s / eta2(p) == doctest::Approx(0.1744).epsilon(1e-3));
  CHECK(c.nu_bar / eta2(p) == doctest::Approx(-0.2443).epsilon(1e-3));
}

TEST_CASE("no coupling without laser 1") {
  ModelParams p = small(presets::fig2a(), 3);
  p.omega1 = 0.0;
  CHECK(std::abs(coupling_closed_form(p, 1.0)) == 0.0);
  CHECK(std::abs(coupling_closed_form(p, -1.0)) == 0.0);
  CHECK_THROWS_AS(phonon_coefficients(ExpansionOperators(p)), HeatingRegime);
}

TEST_CASE("heating regime is reported with both coefficients") {
  ModelParams p = small(presets::fig2a(), 3);
  p.delta = -35.0;
  try {
    phonon_coefficients(ExpansionOperators(p));
    FAIL("expected HeatingRegime");
  } catch (const HeatingRegime& e) {
    CHECK(e.a_plus() >= e.a_minus());
  }
}

TEST_CASE("resolvent and closed form of s agree on random cooling draws") {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int tested = 0;
  while (tested < 20) {
    ModelParams p;
    p.omega1 = 1.0 + 15.0 * u(rng);
    p.omega2 = 1.0 + 15.0 * u(rng);
    p.delta = 2.0 + 40.0 * u(rng);
    p.gamma1 = 0.5 + 8.0 * u(rng);
    p.gamma2 = 0.5 + 8.0 * u(rng);
    p.eta1 = p.eta2 = 0.01 + 0.05 * u(rng);
    p.n_max = 2;
    const SpectralDecomposition dec = spectral_decompose(internal_liouvillian(p));
    const ExpansionOperators ops(p);
    for (double nu : {1.0, -1.0}) {
      const Complex a = coupling_resolvent(dec, ops.v1(), ops.rho_dark(), nu);
      const Complex b = coupling_closed_form(p, nu);
      CHECK(std::abs(a - b) <= 1e-9 * std::abs(b));
    }
    ++tested;
  }
}

TEST_CASE("effective phonon generator with the printed rates") {
  // Rates g = A: the generator written with the full coefficients.
  const PhononCoefficients c = phonon_coefficients(ExpansionOperators(small(presets::fig4(), 3)));
  const PhononRates r{c.nu_bar, c.a_minus, c.a_plus};
  const std::vector<int> levels{0, 1}, ells{-1, 0, 1};
  const auto modes = phonon_effective_eigensystem(r, 40, levels, ells);
  for (const PhononMode& m : modes) {
    const double scale = c.gamma_s;
    if (m.level == 0 && m.ell == 0) {
      CHECK(std::abs(m.eigenvalue) < 1e-8 * scale);
      CHECK(max_abs(m.right.matrix() - thermal_mu(c.n_bar, 40).matrix()) < 1e-10);
    }
    if (m.level == 0 && m.ell != 0)
      CHECK(std::abs(m.eigenvalue - Complex(-c.gamma_s, -m.ell * c.nu_bar)) < 1e-8 * scale);
    if (m.level == 1 && m.ell == 0) CHECK(std::abs(m.eigenvalue + 2.0 * c.gamma_s) < 1e-8 * scale);
  }
}

TEST_CASE("effective phonon generator with the library rates") {
  const PhononCoefficients c = phonon_coefficients(ExpansionOperators(small(presets::fig4(), 3)));
  const PhononRates r = effective_rates(c);
  CHECK(r.g_minus - r.g_plus == doctest::Approx(0.5 * c.gamma_s));
  const std::vector<int> levels{0, 1, 2, 3}, ells{-2, -1, 0, 1, 2};
  for (const PhononMode& m : phonon_effective_eigensystem(r, 40, levels, ells)) {
    const Complex expect(-(m.level + 0.5 * std::abs(m.ell)) * c.gamma_s, -m.ell * c.nu_bar);
    CHECK(std::abs(m.eigenvalue - expect) < 1e-8 * c.gamma_s);
    CHECK(std::abs((m.left * m.right).trace() - 1.0) < 1e-8);
  }
}

TEST_CASE("zero-order structure against dense L0") {
  const ModelParams p = small(presets::fig2a(), 3);
  const ExpansionOperators ops(p);
  const ZeroOrderStructure zero(spectral_decompose(ops.l_internal()), p.n_max);
  std::mt19937_64 rng(5);
  const CMatrix x = testing::random_matrix(12, rng);
  CHECK(max_abs(zero.apply_l0(x) - ops.apply_l0(x)) < 1e-10);

  const Complex z(0.3, 0.7);
  const CMatrix r = zero.resolvent(z, {}, x);
  CHECK(max_abs(z * r - ops.apply_l0(r) - x) < 1e-9);

  const auto sectors = zero.sectors_near(Complex(0.0, 1.0), 1e-8);
  CHECK(!sectors.empty());
  const CMatrix px = zero.project(sectors, x);
  CHECK(max_abs(zero.project(sectors, px) - px) < 1e-10);
  CHECK(max_abs(ops.apply_l0(px) - kI * px) < 1e-9);
}

TEST_CASE("perturbed steady state") {
  const ModelParams p = small(presets::fig2b(), 8);
  const ExpansionOperators ops(p);
  const ZeroOrderStructure zero(spectral_decompose(ops.l_internal()), p.n_max);
  const PhononCoefficients c = phonon_coefficients(ops);
  const PerturbativeState s = perturbed_steady_state(ops, zero, c.n_bar);
  CHECK(std::abs(s.lambda1) < 1e-12);
  CHECK(std::abs(s.rho1.trace()) < 1e-12);
  CHECK(std::abs(s.rho2.trace()) < 1e-12);
  CHECK(std::abs(s.rho0.trace() - 1.0) < 1e-12);
}

TEST_CASE("first-order eigenvalue shift vanishes at the sideband eigenvalues") {
  const ModelParams p = small(presets::fig2a(), 8);
  const ExpansionOperators ops(p);
  const ZeroOrderStructure zero(spectral_decompose(ops.l_internal()), p.n_max);
  const PhononCoefficients c = phonon_coefficients(ops);
  const std::vector<int> levels{0}, ells{-1, 1};
  for (const PhononMode& m : phonon_effective_eigensystem(effective_rates(c), p.n_max, levels, ells)) {
    const PerturbativeState s = correct_eigenspace(ops, zero, zero.stationary_group(), m.right, m.left);
    // mu ~ |n+ell><n| rotates at -i ell under -i[a^dag a, .]
    CHECK(std::abs(s.lambda0 - Complex(0.0, -m.ell)) < 1e-12);
    CHECK(std::abs(s.lambda1) < 1e-10 * c.gamma_s);
  }
}

TEST_CASE("no corrections without motional coupling") {
  ModelParams p = small(presets::fig2a(), 4);
  p.eta1 = p.eta2 = 0.0;
  const ExpansionOperators ops(p);
  const ZeroOrderStructure zero(spectral_decompose(ops.l_internal()), p.n_max);
  const PerturbativeState s = perturbed_steady_state(ops, zero, 0.1);
  CHECK(max_abs(s.rho1) == 0.0);
  CHECK(max_abs(s.rho2) == 0.0);
  std::mt19937_64 rng(8);
  const CMatrix x = testing::random_matrix(15, rng);
  CHECK(max_abs(apply_first_order_projector(ops, zero, s, x)) == 0.0);
}
