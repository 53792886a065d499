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

#include "lambdaspec/oracle/oracle.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "lambdaspec/core/errors.hpp"
#include "lambdaspec/core/fock.hpp"
#include "lambdaspec/model/lambda_system.hpp"
#include "lambdaspec/oracle/hessenberg.hpp"

namespace lambdaspec {
namespace {

constexpr double kSteadyStateRcond = 1e-13;
constexpr double kCutoffWarning = 1e-6;

// exp(i theta x) for the truncated position operator.
struct PositionExponential {
  explicit PositionExponential(int n_max) {
    const CMatrix x = build_fock_operators(n_max).x.matrix();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(x.real());
    vectors = solver.eigenvectors();
    values = solver.eigenvalues();
  }

  CMatrix operator()(double theta) const {
    CVector phases(values.size());
    for (Index i = 0; i < values.size(); ++i) phases(i) = std::exp(kI * theta * values(i));
    return vectors.cast<Complex>() * phases.asDiagonal() * vectors.transpose().cast<Complex>();
  }

  Eigen::MatrixXd vectors;
  Eigen::VectorXd values;
};

}  // namespace

FullLiouvillian build_full_liouvillian(const ModelParams& params, int quadrature_nodes,
                                       DetuningConvention convention) {
  params.validate();
  if (quadrature_nodes < 1) throw InvalidArgument("quadrature_nodes must be >= 1");
  const SpaceLabel space = SpaceLabel::composite(params.n_max);
  const Operator id_m = Operator::identity(SpaceLabel::motional(params.n_max));
  const FockOperators f = build_fock_operators(params.n_max);
  const PositionExponential expx(params.n_max);
  auto motional = [&](const CMatrix& m) { return Operator(id_m.space(), m); };

  const double sign = convention == DetuningConvention::GroundShift ? 1.0 : -1.0;
  Operator h = tensor((sign * params.delta) * (internal_dyad(0, 0) + internal_dyad(1, 1)), id_m) +
               tensor(Operator::identity(SpaceLabel::internal()), f.a_dag * f.a);
  const double omega[] = {params.omega1, params.omega2};
  const double k[] = {params.eta1 * std::cos(params.phi1), params.eta2 * std::cos(params.phi2)};
  const double gamma[] = {params.gamma1, params.gamma2};
  const double eta[] = {params.eta1, params.eta2};
  for (int j = 0; j < 2; ++j) {
    const Operator up = tensor(Complex(0.5 * omega[j]) * internal_dyad(2, j), motional(expx(-k[j])));
    h += up + up.adjoint();
  }
  SuperOperator l = commutator_superop(h);
  const Operator p3 = tensor(internal_dyad(2, 2), id_m);
  l -= Complex(0.5 * params.gamma()) * (SuperOperator::left(p3) + SuperOperator::right(p3));

  FullLiouvillian full{std::move(l), angular_quadrature(params, quadrature_nodes), params};
  for (int j = 0; j < 2; ++j) {
    if (gamma[j] == 0.0) continue;
    for (const QuadratureNode& node : full.quadrature) {
      const Operator jump = tensor(internal_dyad(j, 2), motional(expx(eta[j] * node.cos_theta)));
      full.l += Complex(gamma[j] * node.weight) * SuperOperator::sandwich(jump, jump.adjoint());
    }
  }
  if (!(full.l.space() == space)) throw NumericalFailure("full Liouvillian: unexpected space");
  return full;
}

Operator steady_state(const FullLiouvillian& full) {
  const SpaceLabel space = full.l.space();
  const Index d = space.dim();
  CMatrix m = full.l.matrix();
  // Replace the first equation by the trace condition.
  m.row(0).setZero();
  for (Index i = 0; i < d; ++i) m(0, i + d * i) = 1.0;
  Eigen::PartialPivLU<CMatrix> lu(m);
  const double rcond = lu.rcond();
  if (!(rcond > kSteadyStateRcond)) {
    std::ostringstream msg;
    msg << "steady state is not unique (reciprocal condition " << rcond << ")";
    throw DegenerateSteadyState(msg.str());
  }
  CVector rhs = CVector::Zero(d * d);
  rhs(0) = 1.0;
  CMatrix rho = unvec(lu.solve(rhs), d);
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace();
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(rho, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-10) {
    std::ostringstream msg;
    msg << "steady state has negative eigenvalue " << eig.eigenvalues().minCoeff();
    throw NumericalFailure(msg.str());
  }
  return {space, std::move(rho)};
}

double fock_cutoff_population(const Operator& rho) {
  const Operator reduced = trace_internal(rho);
  const Index top = reduced.dim() - 1;
  return reduced.matrix()(top, top).real();
}

Operator detected_operator(const ModelParams& params, double psi) {
  const PositionExponential expx(params.n_max);
  return tensor(internal_dyad(0, 2),
                Operator(SpaceLabel::motional(params.n_max), expx(-params.eta1 * std::cos(psi))));
}

OracleSpectrum oracle_spectrum(const FullLiouvillian& full, const Operator& rho_st,
                               std::span<const double> omega_grid, double psi) {
  const Index d = full.l.space().dim();
  if (!(rho_st.space() == full.l.space())) throw InvalidArgument("oracle spectrum: state space mismatch");
  const CMatrix dop = detected_operator(full.params, psi).matrix();
  const CMatrix& rho = rho_st.matrix();
  const Complex amp = (dop * rho).trace();

  OracleSpectrum out;
  out.omega.assign(omega_grid.begin(), omega_grid.end());
  out.elastic_weight = std::norm(trace_product(dop.adjoint(), rho));
  out.cutoff_population = fock_cutoff_population(rho_st);
  if (out.cutoff_population > kCutoffWarning) {
    std::ostringstream msg;
    msg << "population " << out.cutoff_population << " at n_max = " << full.params.n_max
        << " exceeds 1e-6; increase n_max";
    out.warnings.push_back(msg.str());
  }

  // L' = L - |rho_st>><1| moves the stationary pole to -1.
  CMatrix deflated = full.l.matrix();
  const CVector r = vec(rho);
  for (Index i = 0; i < d; ++i) deflated.col(i + d * i) -= r;
  const ShiftedHessenbergSolver solver(deflated);
  const CVector source = vec(dop * rho - amp * rho);
  const CVector probe = vec(dop.adjoint().transpose());  // Tr{D^dag X} = probe . vec(X)

  for (double w : omega_grid) {
    try {
      const CVector x = solver.solve(kI * w, source);
      out.s.push_back((probe.transpose() * x)(0).real());
      out.errors.emplace_back();
    } catch (const NumericalFailure& e) {
      out.s.push_back(std::numeric_limits<double>::quiet_NaN());
      out.errors.emplace_back(e.what());
    }
  }
  return out;
}

PeakFit fit_peak(std::span<const double> omega, std::span<const double> values, double lo, double hi) {
  PeakFit fit;
  if (omega.size() != values.size()) throw InvalidArgument("fit_peak: size mismatch");
  std::size_t first = omega.size(), last = 0;
  for (std::size_t k = 0; k < omega.size(); ++k) {
    if (omega[k] < lo || omega[k] > hi) continue;
    first = std::min(first, k);
    last = k;
  }
  if (first >= omega.size() || last < first + 2) return fit;
  std::size_t peak = first;
  for (std::size_t k = first; k <= last; ++k) {
    if (values[k] > values[peak]) peak = k;
  }
  if (peak == first || peak == last) return fit;
  const double ym = values[peak - 1], y0 = values[peak], yp = values[peak + 1];
  const double h = omega[peak + 1] - omega[peak];
  const double curvature = ym - 2.0 * y0 + yp;
  const double shift = curvature != 0.0 ? 0.5 * (ym - yp) / curvature : 0.0;
  fit.center = omega[peak] + shift * h;
  fit.height = y0 - 0.25 * (ym - yp) * shift;
  const double half = 0.5 * fit.height;
  double left = std::numeric_limits<double>::quiet_NaN();
  double right = left;
  for (std::size_t k = peak; k > first; --k) {
    if (values[k - 1] <= half) {
      left = omega[k - 1] + (half - values[k - 1]) / (values[k] - values[k - 1]) * (omega[k] - omega[k - 1]);
      break;
    }
  }
  for (std::size_t k = peak; k < last; ++k) {
    if (values[k + 1] <= half) {
      right = omega[k] + (values[k] - half) / (values[k] - values[k + 1]) * (omega[k + 1] - omega[k]);
      break;
    }
  }
  if (std::isnan(left) || std::isnan(right)) return fit;
  fit.half_width = 0.5 * (right - left);
  fit.ok = true;
  return fit;
}

}  // namespace lambdaspec
