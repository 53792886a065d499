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

#include "lambdaspec/core/superoperator.hpp"

#include "lambdaspec/core/errors.hpp"

namespace lambdaspec {

SuperOperator::SuperOperator(SpaceLabel space, CMatrix matrix)
    : space_(space), matrix_(std::move(matrix)) {
  const Index d2 = space_.dim() * space_.dim();
  if (matrix_.rows() != d2 || matrix_.cols() != d2) {
    throw InvalidArgument("superoperator matrix must be d^2 x d^2 for " + space_.describe());
  }
}

SuperOperator SuperOperator::zero(SpaceLabel space) {
  const Index d2 = space.dim() * space.dim();
  return {space, CMatrix::Zero(d2, d2)};
}

SuperOperator SuperOperator::identity(SpaceLabel space) {
  const Index d2 = space.dim() * space.dim();
  return {space, CMatrix::Identity(d2, d2)};
}

SuperOperator SuperOperator::left(const Operator& a) {
  const CMatrix id = CMatrix::Identity(a.dim(), a.dim());
  return {a.space(), kron(id, a.matrix())};
}

SuperOperator SuperOperator::right(const Operator& b) {
  const CMatrix id = CMatrix::Identity(b.dim(), b.dim());
  return {b.space(), kron(b.matrix().transpose(), id)};
}

SuperOperator SuperOperator::sandwich(const Operator& a, const Operator& b) {
  if (!(a.space() == b.space())) throw InvalidArgument("sandwich: space mismatch");
  return {a.space(), kron(b.matrix().transpose(), a.matrix())};
}

Operator SuperOperator::apply(const Operator& x) const {
  if (!(x.space() == space_)) throw InvalidArgument("superoperator apply: space mismatch");
  return {space_, unvec(matrix_ * vec(x.matrix()), space_.dim())};
}

Operator SuperOperator::apply_left(const Operator& a) const {
  if (!(a.space() == space_)) throw InvalidArgument("superoperator apply_left: space mismatch");
  // Tr{A L[X]} = vec(A^T)^T M vec(X)  =>  vec(Y^T) = M^T vec(A^T)
  const CVector y = matrix_.transpose() * vec(a.matrix().transpose());
  return {space_, unvec(y, space_.dim()).transpose()};
}

SuperOperator& SuperOperator::operator+=(const SuperOperator& rhs) {
  if (!(space_ == rhs.space_)) throw InvalidArgument("superoperator sum: space mismatch");
  matrix_ += rhs.matrix_;
  return *this;
}

SuperOperator& SuperOperator::operator-=(const SuperOperator& rhs) {
  if (!(space_ == rhs.space_)) throw InvalidArgument("superoperator difference: space mismatch");
  matrix_ -= rhs.matrix_;
  return *this;
}

SuperOperator& SuperOperator::operator*=(Complex s) {
  matrix_ *= s;
  return *this;
}

SuperOperator operator*(const SuperOperator& l, const SuperOperator& r) {
  if (!(l.space_ == r.space_)) throw InvalidArgument("superoperator composition: space mismatch");
  return {l.space_, l.matrix_ * r.matrix_};
}

SuperOperator commutator_superop(const Operator& h) {
  return -kI * (SuperOperator::left(h) - SuperOperator::right(h));
}

SuperOperator lindblad_superop(const Operator& jump, double rate) {
  if (!(rate >= 0.0)) throw InvalidArgument("lindblad_superop: rate must be non-negative");
  const Operator jdj = jump.adjoint() * jump;
  SuperOperator out = 2.0 * SuperOperator::sandwich(jump, jump.adjoint());
  out -= SuperOperator::left(jdj);
  out -= SuperOperator::right(jdj);
  return Complex(0.5 * rate) * out;
}

SuperOperator lift_internal(const SuperOperator& internal, int n_max) {
  if (internal.space().kind() != SpaceKind::Internal) {
    throw InvalidArgument("lift_internal: internal superoperator required");
  }
  const SpaceLabel comp = SpaceLabel::composite(n_max);
  const Index n = comp.motional_dim();
  const Index d = comp.dim();
  CMatrix out = CMatrix::Zero(d * d, d * d);
  const CMatrix& s = internal.matrix();
  for (Index j = 0; j < 3; ++j)
    for (Index i = 0; i < 3; ++i)
      for (Index jp = 0; jp < 3; ++jp)
        for (Index ip = 0; ip < 3; ++ip) {
          const Complex v = s(i + 3 * j, ip + 3 * jp);
          if (v == Complex(0.0)) continue;
          for (Index m = 0; m < n; ++m)
            for (Index k = 0; k < n; ++k) {
              out((i * n + k) + d * (j * n + m), (ip * n + k) + d * (jp * n + m)) = v;
            }
        }
  return {comp, std::move(out)};
}

SuperOperator lift_motional(const SuperOperator& motional) {
  if (motional.space().kind() != SpaceKind::Motional) {
    throw InvalidArgument("lift_motional: motional superoperator required");
  }
  const SpaceLabel comp = SpaceLabel::composite(motional.space().n_max());
  const Index n = comp.motional_dim();
  const Index d = comp.dim();
  CMatrix out = CMatrix::Zero(d * d, d * d);
  const CMatrix& s = motional.matrix();
  for (Index m = 0; m < n; ++m)
    for (Index k = 0; k < n; ++k)
      for (Index mp = 0; mp < n; ++mp)
        for (Index kp = 0; kp < n; ++kp) {
          const Complex v = s(k + n * m, kp + n * mp);
          if (v == Complex(0.0)) continue;
          for (Index j = 0; j < 3; ++j)
            for (Index i = 0; i < 3; ++i) {
              out((i * n + k) + d * (j * n + m), (i * n + kp) + d * (j * n + mp)) = v;
            }
        }
  return {comp, std::move(out)};
}

}  // namespace lambdaspec
