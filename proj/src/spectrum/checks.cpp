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

#include "lambdaspec/spectrum/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "lambdaspec/core/errors.hpp"
#include "lambdaspec/perturbation/phonon.hpp"
#include "lambdaspec/spectrum/sideband.hpp"

namespace lambdaspec {
namespace {

constexpr int kMaxEll = 2;

Complex tr_dag(const CMatrix& a, const CMatrix& x) { return trace_product(a.adjoint(), x); }

std::vector<double> sample_grid(int points) {
  if (points < 1) throw InvalidArgument("vanishing checks: need at least one sample frequency");
  // Offsets keep the samples off the integer zero-order poles.
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double step = points > 1 ? 5.0 / (points - 1) : 0.0;
  for (int k = 0; k < points; ++k) grid[static_cast<std::size_t>(k)] = -2.47 + step * k;
  return grid;
}

// max over the grid of |sum_l w_l / (i w - lambda_l)|
template <class Pick>
double spectral_sup(const std::vector<CompositeSectorTerms>& terms, const std::vector<double>& grid, Pick pick) {
  double sup = 0.0;
  for (double w : grid) {
    Complex s = 0.0;
    for (const auto& t : terms) s += pick(t) / (kI * w - t.lambda0);
    sup = std::max(sup, std::abs(s));
  }
  return sup;
}

std::vector<double> second_order_spectrum(const std::vector<CompositeSectorTerms>& terms,
                                          const std::vector<double>& grid) {
  std::vector<double> out;
  for (double w : grid) {
    Complex s = 0.0;
    for (const auto& t : terms) s += t.second_order() / (kI * w - t.lambda0);
    out.push_back(s.real());
  }
  return out;
}

struct Evaluation {
  std::vector<CompositeSectorTerms> terms;
  double s0 = 0.0;
};

Evaluation evaluate(const ModelParams& params) {
  const ExpansionOperators ops(params);
  const PhononCoefficients coeffs = phonon_coefficients(ops);
  const ZeroOrderStructure zero(spectral_decompose(ops.l_internal()), params.n_max);
  const PerturbativeState steady = perturbed_steady_state(ops, zero, coeffs.n_bar);
  return {composite_terms(ops, zero, steady), sideband_closed_form(params, coeffs).s0};
}

}  // namespace

Complex CompositeSectorTerms::second_order() const {
  Complex sum = main + d1_d1;
  for (Complex a : angular) sum += a;
  return sum;
}

std::vector<CompositeSectorTerms> composite_terms(const ExpansionOperators& ops, const ZeroOrderStructure& zero,
                                                  const PerturbativeState& steady) {
  const CMatrix& d0 = ops.d0().matrix();
  const CMatrix& d1 = ops.d1().matrix();
  const CMatrix& d2 = ops.d2().matrix();
  const CMatrix d0r0 = d0 * steady.rho0;
  const CMatrix d0r1 = d0 * steady.rho1;
  const CMatrix d0r2 = d0 * steady.rho2;
  const CMatrix d1r0 = d1 * steady.rho0;
  const CMatrix d1r1 = d1 * steady.rho1;
  const CMatrix d2r0 = d2 * steady.rho0;

  std::vector<CompositeSectorTerms> out;
  std::vector<Sector> seen;
  const SpectralDecomposition& internal = zero.internal();
  for (int ell = -kMaxEll; ell <= kMaxEll; ++ell) {
    for (std::size_t g = 0; g < internal.groups().size(); ++g) {
      const Sector s{g, ell};
      if (std::find(seen.begin(), seen.end(), s) != seen.end()) continue;
      CompositeSectorTerms t;
      t.lambda0 = zero.eigenvalue(s);
      t.sectors = zero.sectors_near(t.lambda0);
      seen.insert(seen.end(), t.sectors.begin(), t.sectors.end());

      const auto p0 = [&](const CMatrix& x) { return zero.project(t.sectors, x); };
      const auto r = [&](const CMatrix& x) { return zero.resolvent(t.lambda0, t.sectors, x); };
      const auto p1 = [&](const CMatrix& x) {
        return CMatrix(r(ops.apply_l1(p0(x))) + p0(ops.apply_l1(r(x))));
      };

      t.s0 = tr_dag(d0, p0(d0r0));
      t.s1 = {tr_dag(d0, p1(d0r0)), tr_dag(d1, p0(d0r0)), tr_dag(d0, p0(d1r0)), tr_dag(d0, p0(d0r1))};
      t.main = tr_dag(d0, p1(d0r1)) + tr_dag(d0, p0(d0r2));
      t.angular = {tr_dag(d1, p1(d0r0)), tr_dag(d0, p1(d1r0)), tr_dag(d1, p0(d0r1)),
                   tr_dag(d0, p0(d1r1)), tr_dag(d2, p0(d0r0)), tr_dag(d0, p0(d2r0))};
      t.d1_d1 = tr_dag(d1, p0(d1r0));
      out.push_back(std::move(t));
    }
  }
  return out;
}

bool VanishingReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.passed; });
}

std::string VanishingReport::describe() const {
  std::ostringstream out;
  for (const CheckEntry& e : entries) {
    char line[256];
    std::snprintf(line, sizeof line, "%-4s %-28s %.3e (tol %.1e)\n", e.passed ? "ok" : "FAIL", e.name.c_str(),
                  e.value, e.tolerance);
    out << line;
  }
  return out.str();
}

VanishingReport vanishing_order_checks(const ModelParams& params, int sample_points, double tolerance) {
  params.validate();
  const std::vector<double> grid = sample_grid(sample_points);
  const Evaluation base = evaluate(params);
  VanishingReport report;
  report.s0 = base.s0;
  if (!(base.s0 > 0.0)) throw NumericalFailure("vanishing checks: reference height s0 is not positive");

  auto add = [&](std::string name, double value) {
    report.entries.push_back({std::move(name), value, tolerance, value <= tolerance});
  };
  const auto& terms = base.terms;
  add("S0", spectral_sup(terms, grid, [](const auto& t) { return t.s0; }) / base.s0);
  add("S1", spectral_sup(terms, grid, [](const auto& t) { return t.s1[0] + t.s1[1] + t.s1[2] + t.s1[3]; }) /
                base.s0);
  static const char* const kNames[] = {"D1+ P1 D0 rho0", "D0+ P1 D1 rho0", "D1+ P0 D0 rho1",
                                       "D0+ P0 D1 rho1", "D2+ P0 D0 rho0", "D0+ P0 D2 rho0"};
  for (std::size_t i = 0; i < 6; ++i) {
    add(kNames[i], spectral_sup(terms, grid, [i](const auto& t) { return t.angular[i]; }) / base.s0);
  }
  add("D1+ P0 D1 rho0", spectral_sup(terms, grid, [](const auto& t) { return t.d1_d1; }) / base.s0);

  const std::vector<double> s2 = second_order_spectrum(terms, grid);
  double scale = 0.0;
  for (double v : s2) scale = std::max(scale, std::abs(v));
  auto invariance = [&](const ModelParams& changed) {
    const std::vector<double> other = second_order_spectrum(evaluate(changed).terms, grid);
    double diff = 0.0;
    for (std::size_t k = 0; k < s2.size(); ++k) diff = std::max(diff, std::abs(other[k] - s2[k]));
    return diff / scale;
  };
  ModelParams shifted = params;
  shifted.psi += 0.7;
  add("psi -> psi + 0.7", invariance(shifted));
  ModelParams swapped = params;
  swapped.pattern = EmissionPattern::Custom;
  swapped.custom_beta = std::min(1.0, 2.0 * params.beta());
  add("beta -> 2 beta", invariance(swapped));
  return report;
}

}  // namespace lambdaspec
