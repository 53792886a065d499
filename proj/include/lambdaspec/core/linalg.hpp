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

#include <complex>

#include <Eigen/Dense>

namespace lambdaspec {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr Complex kI{0.0, 1.0};

/// Kronecker product, first factor is the slow (outer) index.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Column stacking: vec(X)[i + d*j] = X(i, j). Every superoperator in the
/// library acts on vectors in this layout, so vec(A X B) = (B^T (x) A) vec(X).
CVector vec(const CMatrix& x);
CMatrix unvec(const CVector& v, Index dim);

/// Tr{A B} without forming the product.
Complex trace_product(const CMatrix& a, const CMatrix& b);

/// Largest absolute entry; used for all "within tolerance" comparisons.
double max_abs(const CMatrix& m);

}  // namespace lambdaspec
