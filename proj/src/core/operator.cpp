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

#include "lambdaspec/core/operator.hpp"

#include <cmath>

#include "lambdaspec/core/errors.hpp"

namespace lambdaspec {

SpaceLabel SpaceLabel::internal() { return {SpaceKind::Internal, 1}; }

SpaceLabel SpaceLabel::motional(int n_max) {
  if (n_max < 0) throw InvalidArgument("motional space: n_max must be >= 0");
  return {SpaceKind::Motional, n_max + 1};
}

SpaceLabel SpaceLabel::composite(int n_max) {
  if (n_max < 0) throw InvalidArgument("composite space: n_max must be >= 0");
  return {SpaceKind::Composite, n_max + 1};
}

std::string SpaceLabel::describe() const {
  switch (kind_) {
    case SpaceKind::Internal:
      return "internal(3)";
    case SpaceKind::Motional:
      return "motional(" + std::to_string(motional_dim_) + ")";
    case SpaceKind::Composite:
      return "internal(3)xmotional(" + std::to_string(motional_dim_) + ")";
  }
  return "unknown";
}

Operator::Operator(SpaceLabel space, CMatrix matrix) : space_(space), matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw InvalidArgument("operator matrix is not square");
  }
  if (matrix_.rows() != space_.dim()) {
    throw InvalidArgument("operator dimension " + std::to_string(matrix_.rows()) +
                          " does not match space " + space_.describe());
  }
}

Operator Operator::zero(SpaceLabel space) {
  return {space, CMatrix::Zero(space.dim(), space.dim())};
}

Operator Operator::identity(SpaceLabel space) {
  return {space, CMatrix::Identity(space.dim(), space.dim())};
}

bool Operator::is_hermitian(double tol) const {
  return max_abs(matrix_ - matrix_.adjoint()) <= tol;
}

bool Operator::is_density(double tol) const {
  return is_hermitian(tol) && std::abs(trace() - 1.0) <= tol;
}

Operator& Operator::operator+=(const Operator& rhs) {
  if (!(space_ == rhs.space_)) throw InvalidArgument("operator sum: space mismatch");
  matrix_ += rhs.matrix_;
  return *this;
}

Operator& Operator::operator-=(const Operator& rhs) {
  if (!(space_ == rhs.space_)) throw InvalidArgument("operator difference: space mismatch");
  matrix_ -= rhs.matrix_;
  return *this;
}

Operator& Operator::operator*=(Complex s) {
  matrix_ *= s;
  return *this;
}

Operator operator*(const Operator& lhs, const Operator& rhs) {
  if (!(lhs.space_ == rhs.space_)) throw InvalidArgument("operator product: space mismatch");
  return {lhs.space_, lhs.matrix_ * rhs.matrix_};
}

Operator tensor(const Operator& internal, const Operator& motional) {
  if (internal.space().kind() != SpaceKind::Internal ||
      motional.space().kind() != SpaceKind::Motional) {
    throw InvalidArgument("tensor: expected internal (x) motional");
  }
  return {SpaceLabel::composite(motional.space().n_max()), kron(internal.matrix(), motional.matrix())};
}

Operator internal_dyad(int i, int j) {
  if (i < 0 || i > 2 || j < 0 || j > 2) throw InvalidArgument("internal_dyad: level out of range");
  CMatrix m = CMatrix::Zero(3, 3);
  m(i, j) = 1.0;
  return {SpaceLabel::internal(), std::move(m)};
}

Operator trace_motional(const Operator& composite) {
  if (composite.space().kind() != SpaceKind::Composite) {
    throw InvalidArgument("trace_motional: composite operator required");
  }
  const Index n = composite.space().motional_dim();
  CMatrix out = CMatrix::Zero(3, 3);
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 3; ++j) {
      out(i, j) = composite.matrix().block(i * n, j * n, n, n).trace();
    }
  }
  return {SpaceLabel::internal(), std::move(out)};
}

Operator trace_internal(const Operator& composite) {
  if (composite.space().kind() != SpaceKind::Composite) {
    throw InvalidArgument("trace_internal: composite operator required");
  }
  const Index n = composite.space().motional_dim();
  CMatrix out = CMatrix::Zero(n, n);
  for (Index i = 0; i < 3; ++i) out += composite.matrix().block(i * n, i * n, n, n);
  return {SpaceLabel::motional(composite.space().n_max()), std::move(out)};
}

}  // namespace lambdaspec
