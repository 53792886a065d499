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

#include <array>

#include "lambdaspec/core/fock.hpp"
#include "lambdaspec/core/superoperator.hpp"
#include "lambdaspec/model/lambda_system.hpp"

namespace lambdaspec {

/// Lamb-Dicke expansion of the composite Liouvillian L = L0 + L1 + L2 + O(eta^3)
/// and of the detected transition operator D = D0 + D1 + D2 + O(eta^3).
///
///   L0 = L_I (x) 1 + 1 (x) L_E,   L_E = -i [a^dag a, .]
///   L1 = -i [V1 x, .]
///   L2 = -(i/2) [V2 x^2, .] + K2
///   K2 = (beta/2) sum_j gamma_j eta_j^2 |j><3| (2 x . x - x^2 . - . x^2) |3><j|
///
/// The apply_* members act on composite matrices without forming the
/// (3N)^2 x (3N)^2 superoperators; the dense builders are meant for small n_max.
class ExpansionOperators {
 public:
  explicit ExpansionOperators(const ModelParams& params,
                              DetuningConvention convention = kDetuningConvention);

  const ModelParams& params() const noexcept { return params_; }
  int n_max() const noexcept { return params_.n_max; }
  SpaceLabel space() const { return SpaceLabel::composite(params_.n_max); }

  // Internal pieces.
  const Operator& rho_dark() const noexcept { return rho_dark_; }
  const Operator& hamiltonian() const noexcept { return h_int_; }
  const Operator& v0() const noexcept { return v_.v0; }
  const Operator& v1() const noexcept { return v_.v1; }
  const Operator& v2() const noexcept { return v_.v2; }
  const SuperOperator& k0() const noexcept { return k0_; }
  const SuperOperator& l_internal() const noexcept { return l_int_; }
  /// D0 = |1><3| on the internal space.
  Operator d_internal() const { return internal_dyad(0, 2); }

  // Motional pieces.
  const FockOperators& fock() const noexcept { return fock_; }
  const Operator& x_squared() const noexcept { return x2_; }
  SuperOperator l_external() const;

  // Composite transition operators for detector angle psi.
  const Operator& d0() const noexcept { return d_[0]; }
  const Operator& d1() const noexcept { return d_[1]; }
  const Operator& d2() const noexcept { return d_[2]; }

  CMatrix apply_l0(const CMatrix& x) const;
  CMatrix apply_l1(const CMatrix& x) const;
  CMatrix apply_l2(const CMatrix& x) const;
  CMatrix apply_k2(const CMatrix& x) const;
  /// Adjoint actions: Y with Tr{Y X} = Tr{A L[X]}.
  CMatrix apply_l0_left(const CMatrix& a) const;
  CMatrix apply_l1_left(const CMatrix& a) const;
  CMatrix apply_l2_left(const CMatrix& a) const;

  SuperOperator l0() const;
  SuperOperator l1() const;
  SuperOperator l2() const;
  SuperOperator k2() const;

 private:
  ModelParams params_;
  Operator rho_dark_;
  Operator h_int_;
  InteractionDerivatives v_;
  SuperOperator k0_;
  SuperOperator l_int_;
  FockOperators fock_;
  Operator x2_;
  std::array<Operator, 3> d_;

  // Composite building blocks.
  CMatrix h_;            // H_I (x) 1 + 1 (x) a^dag a
  CMatrix w1_;           // V1 (x) x
  CMatrix w2_;           // V2 (x) x^2
  CMatrix x1_;           // 1 (x) x
  CMatrix x2c_;          // 1 (x) x^2
  CMatrix p3_;           // |3><3| (x) 1
  std::array<CMatrix, 2> jump_;  // |j><3| (x) 1
  std::array<double, 2> gamma_;
  std::array<double, 2> recoil_;  // (beta/2) gamma_j eta_j^2
};

/// Validates params and builds the expansion with the library convention.
ExpansionOperators build_expansion(const ModelParams& params);

}  // namespace lambdaspec
