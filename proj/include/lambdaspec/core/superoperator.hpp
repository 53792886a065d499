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

#pragma once

#include "lambdaspec/core/operator.hpp"

namespace lambdaspec {

/// Linear map on operators, stored as a d^2 x d^2 matrix acting on vec(X)
/// (column stacking, see vec()).
class SuperOperator {
 public:
  SuperOperator(SpaceLabel space, CMatrix matrix);

  static SuperOperator zero(SpaceLabel space);
  static SuperOperator identity(SpaceLabel space);
  /// X -> A X
  static SuperOperator left(const Operator& a);
  /// X -> X B
  static SuperOperator right(const Operator& b);
  /// X -> A X B
  static SuperOperator sandwich(const Operator& a, const Operator& b);

  const SpaceLabel& space() const noexcept { return space_; }
  const CMatrix& matrix() const noexcept { return matrix_; }

  Operator apply(const Operator& x) const;

  /// Action to the left: the operator Y with Tr{Y X} = Tr{A L[X]} for all X.
  Operator apply_left(const Operator& a) const;

  SuperOperator& operator+=(const SuperOperator& rhs);
  SuperOperator& operator-=(const SuperOperator& rhs);
  SuperOperator& operator*=(Complex s);

  friend SuperOperator operator+(SuperOperator l, const SuperOperator& r) { return l += r; }
  friend SuperOperator operator-(SuperOperator l, const SuperOperator& r) { return l -= r; }
  friend SuperOperator operator*(SuperOperator l, Complex s) { return l *= s; }
  friend SuperOperator operator*(Complex s, SuperOperator r) { return r *= s; }
  /// Composition (l o r)[X] = l[r[X]].
  friend SuperOperator operator*(const SuperOperator& l, const SuperOperator& r);

 private:
  SpaceLabel space_;
  CMatrix matrix_;
};

/// X -> -i [H, X]  (hbar = 1).
SuperOperator commutator_superop(const Operator& h);

/// X -> (rate/2) (2 J X J^dag - J^dag J X - X J^dag J).
SuperOperator lindblad_superop(const Operator& jump, double rate);

/// Lift internal / motional superoperators to the composite space.
SuperOperator lift_internal(const SuperOperator& internal, int n_max);
SuperOperator lift_motional(const SuperOperator& motional);

}  // namespace lambdaspec
