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

#include "lambdaspec/model/expansion.hpp"

#include <cmath>

namespace lambdaspec {
namespace {

CMatrix lift_i(const Operator& internal, Index n) { return kron(internal.matrix(), CMatrix::Identity(n, n)); }

CMatrix lift_m(const Operator& motional) {
  return kron(CMatrix::Identity(3, 3), motional.matrix());
}

}  // namespace

ExpansionOperators::ExpansionOperators(const ModelParams& params, DetuningConvention convention)
    : params_((params.validate(), params)),
      rho_dark_(dark_state(params)),
      h_int_(internal_hamiltonian(params, convention)),
      v_(interaction_derivatives(params)),
      k0_(internal_dissipator(params)),
      l_int_(internal_liouvillian(params, convention)),
      fock_(build_fock_operators(params.n_max)),
      x2_(fock_.x * fock_.x),
      d_{Operator::zero(SpaceLabel::composite(params.n_max)), Operator::zero(SpaceLabel::composite(params.n_max)),
         Operator::zero(SpaceLabel::composite(params.n_max))} {
  const Index n = fock_.x.dim();
  const double c = std::cos(params.psi);
  const Operator d = internal_dyad(0, 2);
  d_[0] = tensor(d, Operator::identity(fock_.x.space()));
  d_[1] = tensor(d, (-kI * params.eta1 * c) * fock_.x);
  d_[2] = tensor(d, Complex(-0.5 * params.eta1 * params.eta1 * c * c) * x2_);

  h_ = lift_i(h_int_, n) + lift_m(fock_.a_dag * fock_.a);
  w1_ = kron(v_.v1.matrix(), fock_.x.matrix());
  w2_ = kron(v_.v2.matrix(), x2_.matrix());
  x1_ = lift_m(fock_.x);
  x2c_ = lift_m(x2_);
  p3_ = lift_i(internal_dyad(2, 2), n);
  jump_ = {lift_i(internal_dyad(0, 2), n), lift_i(internal_dyad(1, 2), n)};
  gamma_ = {params.gamma1, params.gamma2};
  const double beta = params.beta();
  recoil_ = {0.5 * beta * params.gamma1 * params.eta1 * params.eta1,
             0.5 * beta * params.gamma2 * params.eta2 * params.eta2};
}

SuperOperator ExpansionOperators::l_external() const {
  return commutator_superop(fock_.a_dag * fock_.a);
}

CMatrix ExpansionOperators::apply_l0(const CMatrix& x) const {
  CMatrix out = -kI * (h_ * x - x * h_);
  for (int j = 0; j < 2; ++j) {
    if (gamma_[j] == 0.0) continue;
    out += gamma_[j] * (jump_[j] * x * jump_[j].adjoint());
  }
  out -= (0.5 * (gamma_[0] + gamma_[1])) * (p3_ * x + x * p3_);
  return out;
}

CMatrix ExpansionOperators::apply_l1(const CMatrix& x) const { return -kI * (w1_ * x - x * w1_); }

CMatrix ExpansionOperators::apply_k2(const CMatrix& x) const {
  const CMatrix inner = 2.0 * (x1_ * x * x1_) - x2c_ * x - x * x2c_;
  CMatrix out = CMatrix::Zero(x.rows(), x.cols());
  for (int j = 0; j < 2; ++j) {
    if (recoil_[j] == 0.0) continue;
    out += recoil_[j] * (jump_[j] * inner * jump_[j].adjoint());
  }
  return out;
}

CMatrix ExpansionOperators::apply_l2(const CMatrix& x) const {
  return -0.5 * kI * (w2_ * x - x * w2_) + apply_k2(x);
}

CMatrix ExpansionOperators::apply_l0_left(const CMatrix& a) const {
  CMatrix out = -kI * (a * h_ - h_ * a);
  for (int j = 0; j < 2; ++j) {
    if (gamma_[j] == 0.0) continue;
    out += gamma_[j] * (jump_[j].adjoint() * a * jump_[j]);
  }
  out -= (0.5 * (gamma_[0] + gamma_[1])) * (p3_ * a + a * p3_);
  return out;
}

CMatrix ExpansionOperators::apply_l1_left(const CMatrix& a) const { return -kI * (a * w1_ - w1_ * a); }

CMatrix ExpansionOperators::apply_l2_left(const CMatrix& a) const {
  CMatrix out = -0.5 * kI * (a * w2_ - w2_ * a);
  for (int j = 0; j < 2; ++j) {
    if (recoil_[j] == 0.0) continue;
    const CMatrix b = jump_[j].adjoint() * a * jump_[j];
    out += recoil_[j] * (2.0 * (x1_ * b * x1_) - b * x2c_ - x2c_ * b);
  }
  return out;
}

SuperOperator ExpansionOperators::l0() const {
  const SpaceLabel s = space();
  SuperOperator out = commutator_superop(Operator(s, h_));
  for (int j = 0; j < 2; ++j) out += lindblad_superop(Operator(s, jump_[j]), gamma_[j]);
  return out;
}

SuperOperator ExpansionOperators::l1() const { return commutator_superop(Operator(space(), w1_)); }

SuperOperator ExpansionOperators::k2() const {
  const SpaceLabel s = space();
  SuperOperator out = SuperOperator::zero(s);
  for (int j = 0; j < 2; ++j) {
    if (recoil_[j] == 0.0) continue;
    const Operator jx(s, jump_[j] * x1_);
    const Operator xjd(s, x1_ * jump_[j].adjoint());
    const Operator jx2(s, jump_[j] * x2c_);
    const Operator x2jd(s, x2c_ * jump_[j].adjoint());
    const Operator jj(s, jump_[j]);
    const Operator jd(s, jump_[j].adjoint());
    SuperOperator term = 2.0 * SuperOperator::sandwich(jx, xjd);
    term -= SuperOperator::sandwich(jx2, jd);
    term -= SuperOperator::sandwich(jj, x2jd);
    out += Complex(recoil_[j]) * term;
  }
  return out;
}

SuperOperator ExpansionOperators::l2() const {
  return Complex(0.5) * commutator_superop(Operator(space(), w2_)) + k2();
}

ExpansionOperators build_expansion(const ModelParams& params) { return ExpansionOperators(params); }

}  // namespace lambdaspec
