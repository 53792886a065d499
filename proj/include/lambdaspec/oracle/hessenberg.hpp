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

#include "lambdaspec/core/linalg.hpp"

namespace lambdaspec {

/// Solves (s I - A) x = b for many shifts s. A = Q H Q^dag is reduced to
/// upper Hessenberg form once; each shift then costs O(n^2).
class ShiftedHessenbergSolver {
 public:
  explicit ShiftedHessenbergSolver(const CMatrix& a);

  Index size() const noexcept { return q_.rows(); }

  /// Throws SingularResolvent when s I - A is numerically singular.
  CVector solve(Complex shift, const CVector& b) const;

 private:
  CMatrix q_;
  Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> h_;
};

}  // namespace lambdaspec
