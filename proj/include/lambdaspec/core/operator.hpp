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

#include <string>

#include "lambdaspec/core/linalg.hpp"

namespace lambdaspec {

enum class SpaceKind { Internal, Motional, Composite };

/// Hilbert space an operator lives on. The internal space is the three-level
/// atom {|1>,|2>,|3>}; the motional space is the Fock space truncated at n_max.
/// Composite basis index is internal * (n_max + 1) + n.
class SpaceLabel {
 public:
  static constexpr Index kInternalDim = 3;

  static SpaceLabel internal();
  static SpaceLabel motional(int n_max);
  static SpaceLabel composite(int n_max);

  SpaceKind kind() const noexcept { return kind_; }
  Index dim() const noexcept { return internal_dim() * motional_dim(); }
  Index internal_dim() const noexcept { return kind_ == SpaceKind::Motional ? 1 : kInternalDim; }
  Index motional_dim() const noexcept { return motional_dim_; }
  int n_max() const noexcept { return static_cast<int>(motional_dim_) - 1; }

  std::string describe() const;

  friend bool operator==(const SpaceLabel&, const SpaceLabel&) = default;

 private:
  SpaceLabel(SpaceKind kind, Index motional_dim) : kind_(kind), motional_dim_(motional_dim) {}

  SpaceKind kind_;
  Index motional_dim_;
};

/// Dense complex matrix tagged with its space. Units: hbar = nu = x0 = 1.
class Operator {
 public:
  Operator(SpaceLabel space, CMatrix matrix);

  static Operator zero(SpaceLabel space);
  static Operator identity(SpaceLabel space);

  const SpaceLabel& space() const noexcept { return space_; }
  const CMatrix& matrix() const noexcept { return matrix_; }
  Index dim() const noexcept { return matrix_.rows(); }

  Complex trace() const { return matrix_.trace(); }
  Operator adjoint() const { return {space_, matrix_.adjoint()}; }
  bool is_hermitian(double tol) const;

  /// Unit trace and Hermitian within tol.
  bool is_density(double tol = 1e-12) const;

  Operator& operator+=(const Operator& rhs);
  Operator& operator-=(const Operator& rhs);
  Operator& operator*=(Complex s);

  friend Operator operator+(Operator lhs, const Operator& rhs) { return lhs += rhs; }
  friend Operator operator-(Operator lhs, const Operator& rhs) { return lhs -= rhs; }
  friend Operator operator*(Operator lhs, Complex s) { return lhs *= s; }
  friend Operator operator*(Complex s, Operator rhs) { return rhs *= s; }
  friend Operator operator*(const Operator& lhs, const Operator& rhs);

 private:
  SpaceLabel space_;
  CMatrix matrix_;
};

/// internal (x) motional -> composite.
Operator tensor(const Operator& internal, const Operator& motional);

/// |i><j| on the internal space (0-based level indices).
Operator internal_dyad(int i, int j);

/// Partial traces of a composite operator.
Operator trace_motional(const Operator& composite);
Operator trace_internal(const Operator& composite);

}  // namespace lambdaspec
