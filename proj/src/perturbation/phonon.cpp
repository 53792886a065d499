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

#include "lambdaspec/perturbation/phonon.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "lambdaspec/core/errors.hpp"

namespace lambdaspec {
namespace {

constexpr double kRouteTolerance = 1e-9;

bool routes_agree(Complex a, Complex b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) <= kRouteTolerance * scale || std::abs(a - b) <= 1e-15;
}

// L_eff restricted to sector ell, in the basis |p><q| with p - q = ell.
CMatrix sector_matrix(const PhononRates& c, int n_max, int ell) {
  const int k = std::abs(ell);
  const int size = n_max + 1 - k;
  CMatrix m = CMatrix::Zero(size, size);
  const double sgn = ell >= 0 ? 1.0 : -1.0;
  for (int n = 0; n < size; ++n) {
    const double p = n + k;  // the larger index
    const double q = n;
    // a a^dag is truncated at the top level, which keeps the trace exact.
    const double up = (p < n_max ? p + 1.0 : 0.0) + (q < n_max ? q + 1.0 : 0.0);
    m(n, n) = -kI * c.nu_bar * sgn * (p - q) - c.g_minus * (p + q) - c.g_plus * up;
    // 2 g_minus a mu a^dag: |p><q| -> sqrt(p q) |p-1><q-1|
    if (n >= 1) m(n - 1, n) += 2.0 * c.g_minus * std::sqrt(p * q);
    // 2 g_plus a^dag mu a: |p><q| -> sqrt((p+1)(q+1)) |p+1><q+1|
    if (n + 1 < size) m(n + 1, n) += 2.0 * c.g_plus * std::sqrt((p + 1.0) * (q + 1.0));
  }
  return m;
}

struct SectorEigen {
  CVector values;
  CMatrix right;  // columns: coefficient vectors
  CMatrix left;   // rows: biorthonormal functionals
};

SectorEigen sector_eigen(const PhononRates& c, int n_max, int ell) {
  const CMatrix m = sector_matrix(c, n_max, ell);
  const Index size = m.rows();
  if (!(c.g_minus > 0.0 && c.g_plus > 0.0) || size < 2) {
    Eigen::ComplexEigenSolver<CMatrix> solver(m, true);
    if (solver.info() != Eigen::Success) throw NumericalFailure("phonon sector eigensolver failed");
    CMatrix right = solver.eigenvectors();
    return {solver.eigenvalues(), right, right.inverse()};
  }
  // Constant imaginary diagonal plus a real tridiagonal with positive
  // off-diagonals: D M D^-1 is symmetric for d_n = (g_minus/g_plus)^(n/2),
  // which keeps the eigenvalues accurate where M itself is far from normal.
  const double shift = m(0, 0).imag();
  Eigen::VectorXd diag(size), sub(size - 1);
  for (Index n = 0; n < size; ++n) diag(n) = m(n, n).real();
  for (Index n = 0; n + 1 < size; ++n) sub(n) = std::sqrt(m(n, n + 1).real() * m(n + 1, n).real());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw NumericalFailure("phonon sector eigensolver failed");
  const double half_log_ratio = 0.5 * std::log(c.g_minus / c.g_plus);
  SectorEigen e{CVector(size), CMatrix(size, size), CMatrix(size, size)};
  for (Index i = 0; i < size; ++i) {
    e.values(i) = Complex(solver.eigenvalues()(i), shift);
    for (Index n = 0; n < size; ++n) {
      const double v = solver.eigenvectors()(n, i);
      const double mag = v == 0.0 ? 0.0 : std::exp(std::log(std::abs(v)) - n * half_log_ratio);
      const double inv = v == 0.0 ? 0.0 : std::exp(std::log(std::abs(v)) + n * half_log_ratio);
      e.right(n, i) = std::copysign(mag, v);
      e.left(i, n) = std::copysign(inv, v);
    }
  }
  return e;
}

Index nearest(const CVector& values, Complex target) {
  Index best = 0;
  for (Index i = 1; i < values.size(); ++i) {
    if (std::abs(values(i) - target) < std::abs(values(best) - target)) best = i;
  }
  return best;
}

}  // namespace

Complex coupling_resolvent(const SpectralDecomposition& l_internal, const Operator& v1,
                           const Operator& rho_dark, double frequency) {
  const CMatrix source = v1.matrix() * rho_dark.matrix();
  const std::vector<std::size_t> stationary = l_internal.groups_near(0.0);
  for (std::size_t g : stationary) {
    for (std::size_t k : l_internal.groups()[g]) {
      const Complex overlap = l_internal.coefficients(source)(static_cast<Index>(k));
      if (std::abs(overlap) > 1e-10 * std::max(1.0, source.norm())) {
        throw NumericalFailure("V1 rho_D overlaps the stationary direction of L_I");
      }
    }
  }
  const CMatrix r = apply_reduced_resolvent(l_internal, kI * frequency, stationary, source);
  return trace_product(v1.matrix(), r);
}

Complex coupling_closed_form(const ModelParams& params, double frequency) {
  const double eta = params.eta();
  const double o1 = params.omega1 * params.omega1;
  const double o2 = params.omega2 * params.omega2;
  const double o = params.omega_sq();
  const Complex denom =
      o * (o + 4.0 * frequency * (kI * params.gamma() / 2.0 - frequency + params.delta));
  return eta * eta * kI * frequency * o1 * o2 / denom;
}

PhononCoefficients coefficients_from(Complex s_plus, Complex s_minus) {
  PhononCoefficients c;
  c.s_plus = s_plus;
  c.s_minus = s_minus;
  c.a_plus = 2.0 * s_plus.real();
  c.a_minus = 2.0 * s_minus.real();
  c.gamma_s = c.a_minus - c.a_plus;
  c.nu_bar = s_plus.imag() + s_minus.imag();
  c.n_bar = c.gamma_s != 0.0 ? c.a_plus / c.gamma_s : 0.0;
  return c;
}

PhononCoefficients phonon_coefficients(const ExpansionOperators& ops) {
  const SpectralDecomposition dec = spectral_decompose(ops.l_internal());
  const Complex sp = coupling_resolvent(dec, ops.v1(), ops.rho_dark(), 1.0);
  const Complex sm = coupling_resolvent(dec, ops.v1(), ops.rho_dark(), -1.0);
  const Complex sp_cf = coupling_closed_form(ops.params(), 1.0);
  const Complex sm_cf = coupling_closed_form(ops.params(), -1.0);
  if (!routes_agree(sp, sp_cf) || !routes_agree(sm, sm_cf)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "s(nu) routes disagree: resolvent " << sp << ", " << sm << " vs closed form " << sp_cf << ", "
        << sm_cf;
    throw NumericalFailure(msg.str());
  }
  PhononCoefficients c = coefficients_from(sp, sm);
  if (!(c.gamma_s > 0.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "gamma_S = A_minus - A_plus = " << c.gamma_s << " <= 0: heating regime (A_plus = " << c.a_plus
        << ", A_minus = " << c.a_minus << ")";
    throw HeatingRegime(msg.str(), c.a_plus, c.a_minus);
  }
  return c;
}

PhononRates effective_rates(const PhononCoefficients& coeffs) {
  return {coeffs.nu_bar, 0.5 * coeffs.a_minus, 0.5 * coeffs.a_plus};
}

std::vector<PhononMode> phonon_effective_eigensystem(const PhononRates& coeffs, int n_max,
                                                     std::span<const int> levels,
                                                     std::span<const int> ells) {
  if (n_max < 1) throw InvalidArgument("phonon eigensystem: n_max must be >= 1");
  const SpaceLabel space = SpaceLabel::motional(n_max);
  const double damping = coeffs.g_minus - coeffs.g_plus;
  const double scale = std::max({std::abs(damping), std::abs(coeffs.nu_bar), 1e-300});
  std::vector<PhononMode> modes;
  for (int ell : ells) {
    const int k = std::abs(ell);
    if (k > n_max) throw InvalidArgument("phonon eigensystem: |ell| exceeds n_max");
    const SectorEigen coarse = sector_eigen(coeffs, n_max, ell);
    const SectorEigen fine = sector_eigen(coeffs, 2 * n_max, ell);
    for (int level : levels) {
      if (level < 0) throw InvalidArgument("phonon eigensystem: N must be >= 0");
      const Complex closed = -kI * static_cast<double>(ell) * coeffs.nu_bar -
                             static_cast<double>(2 * level + k) * damping;
      const Index i = nearest(coarse.values, closed);
      const Complex a = coarse.values(i);
      const Complex b = fine.values(nearest(fine.values, closed));
      if (std::abs(a - b) > 1e-8 * scale) {
        std::ostringstream msg;
        msg << "phonon eigenvalue (N " << level << ", ell " << ell << ") moved from " << a << " to " << b
            << " when doubling n_max = " << n_max << "; increase n_max";
        throw TruncationError(msg.str());
      }
      CMatrix r = CMatrix::Zero(n_max + 1, n_max + 1);
      CMatrix l = CMatrix::Zero(n_max + 1, n_max + 1);
      Complex norm = 1.0;
      if (ell == 0 && level == 0) {
        norm = coarse.right.col(i).sum();  // unit trace
      }
      for (int n = 0; n + k <= n_max; ++n) {
        const int p = ell >= 0 ? n + k : n;
        const int q = ell >= 0 ? n : n + k;
        r(p, q) = coarse.right(n, i) / norm;
        l(q, p) = coarse.left(i, n) * norm;  // Tr{l |p><q|} = l(q, p)
      }
      modes.push_back({level, ell, a, closed, Operator(space, r), Operator(space, l)});
    }
  }
  return modes;
}

SuperOperator phonon_effective_liouvillian(const PhononRates& coeffs, int n_max) {
  const FockOperators f = build_fock_operators(n_max);
  const Operator num = f.a_dag * f.a;
  SuperOperator out = Complex(coeffs.nu_bar) * commutator_superop(num);
  out += lindblad_superop(f.a, 2.0 * coeffs.g_minus);
  out += lindblad_superop(f.a_dag, 2.0 * coeffs.g_plus);
  return out;
}

}  // namespace lambdaspec
