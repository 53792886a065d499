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

#include "lambdaspec/oracle/hessenberg.hpp"

#include <sstream>

#include <Eigen/Eigenvalues>

#include "lambdaspec/core/errors.hpp"
#include "lambdaspec/kernels/kernels.hpp"

namespace lambdaspec {

ShiftedHessenbergSolver::ShiftedHessenbergSolver(const CMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) throw InvalidArgument("Hessenberg solver: square matrix required");
  Eigen::HessenbergDecomposition<CMatrix> hd(a);
  q_ = hd.matrixQ();
  h_ = hd.matrixH();
}

CVector ShiftedHessenbergSolver::solve(Complex shift, const CVector& b) const {
  const Index n = size();
  if (b.size() != n) throw InvalidArgument("Hessenberg solver: right-hand side has wrong size");
  Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> m = -h_;
  m.diagonal().array() += shift;
  CVector c = q_.adjoint() * b;
  const double scale = m.cwiseAbs().maxCoeff();

  // Gaussian elimination with partial pivoting; only the subdiagonal needs clearing.
  for (Index k = 0; k + 1 < n; ++k) {
    if (std::abs(m(k + 1, k)) > std::abs(m(k, k))) {
      m.row(k).segment(k, n - k).swap(m.row(k + 1).segment(k, n - k));
      std::swap(c(k), c(k + 1));
    }
    if (std::abs(m(k, k)) <= 1e-18 * scale) {
      std::ostringstream msg;
      msg << "shifted solve at s = " << shift << " is singular";
      throw SingularResolvent(msg.str());
    }
    const Complex factor = m(k + 1, k) / m(k, k);
    if (factor == Complex(0.0)) continue;
    const Index len = n - k - 1;
    kernels::caxpy(-factor, std::span<const Complex>(m.row(k).data() + k + 1, static_cast<std::size_t>(len)),
                   std::span<Complex>(m.row(k + 1).data() + k + 1, static_cast<std::size_t>(len)));
    m(k + 1, k) = 0.0;
    c(k + 1) -= factor * c(k);
  }
  if (std::abs(m(n - 1, n - 1)) <= 1e-18 * scale) {
    std::ostringstream msg;
    msg << "shifted solve at s = " << shift << " is singular";
    throw SingularResolvent(msg.str());
  }
  CVector y(n);
  for (Index k = n - 1; k >= 0; --k) {
    Complex acc = c(k);
    if (k + 1 < n) acc -= (m.row(k).segment(k + 1, n - k - 1).transpose().array() * y.segment(k + 1, n - k - 1).array()).sum();
    y(k) = acc / m(k, k);
  }
  return q_ * y;
}

}  // namespace lambdaspec
