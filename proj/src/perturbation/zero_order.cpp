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

#include "lambdaspec/perturbation/zero_order.hpp"

#include <algorithm>
#include <sstream>

#include "lambdaspec/core/errors.hpp"

namespace lambdaspec {
namespace {

bool contains(std::span<const Sector> sectors, std::size_t group, int ell) {
  return std::any_of(sectors.begin(), sectors.end(),
                     [&](const Sector& s) { return s.internal_group == group && s.ell == ell; });
}

}  // namespace

ZeroOrderStructure::ZeroOrderStructure(SpectralDecomposition internal, int n_max)
    : internal_(std::move(internal)), n_max_(n_max) {
  if (internal_.space().kind() != SpaceKind::Internal) {
    throw InvalidArgument("zero-order structure needs an internal decomposition");
  }
  if (n_max_ < 1) throw InvalidArgument("zero-order structure: n_max must be >= 1");
  left_t_ = internal_.left_functionals().transpose();
}

Complex ZeroOrderStructure::eigenvalue(const Sector& sector) const {
  return internal_.group_eigenvalue(sector.internal_group) + kI * static_cast<double>(sector.ell);
}

std::vector<Sector> ZeroOrderStructure::sectors_near(Complex z, std::optional<double> tol) const {
  const double t = tol.value_or(internal_.grouping_tol());
  std::vector<Sector> out;
  for (int ell = -n_max_; ell <= n_max_; ++ell) {
    for (std::size_t g : internal_.groups_near(z - kI * static_cast<double>(ell), t)) out.push_back({g, ell});
  }
  return out;
}

std::size_t ZeroOrderStructure::stationary_group() const {
  const std::vector<std::size_t> zero = internal_.groups_near(0.0);
  if (zero.size() != 1 || internal_.groups()[zero.front()].size() != 1) {
    throw NumericalFailure("internal Liouvillian has no unique stationary state");
  }
  return zero.front();
}

template <class Weight>
CMatrix ZeroOrderStructure::map_blocks(const CMatrix& x, bool left, Weight&& weight) const {
  const Index n = n_max_ + 1;
  if (x.rows() != 3 * n || x.cols() != 3 * n) throw InvalidArgument("zero-order map: dimension mismatch");
  const CMatrix& r = internal_.right_vectors();
  const CMatrix& l = internal_.left_functionals();
  const Index size = static_cast<Index>(internal_.size());
  CMatrix out(3 * n, 3 * n);
  CVector b(9);
  CVector c(size);
  for (Index col = 0; col < n; ++col) {
    for (Index row = 0; row < n; ++row) {
      // Right action: block (n, m) sits in sector m - n. Left action: block
      // (m, n) of A pairs with block (n, m) of X, so the sector is row - col.
      const int ell = static_cast<int>(left ? row - col : col - row);
      for (Index j = 0; j < 3; ++j)
        for (Index i = 0; i < 3; ++i) b(i + 3 * j) = x(i * n + row, j * n + col);
      if (left) {
        // coefficients Tr{A_blk rho_k}: vec(A^T) . vec(rho_k)
        CVector bt(9);
        for (Index j = 0; j < 3; ++j)
          for (Index i = 0; i < 3; ++i) bt(i + 3 * j) = b(j + 3 * i);
        c.noalias() = r.transpose() * bt;
      } else {
        c.noalias() = l * b;
      }
      for (Index k = 0; k < size; ++k) c(k) *= weight(static_cast<std::size_t>(k), ell);
      CVector y = left ? CVector(left_t_ * c) : CVector(r * c);
      for (Index j = 0; j < 3; ++j)
        for (Index i = 0; i < 3; ++i) {
          out(i * n + row, j * n + col) = left ? y(j + 3 * i) : y(i + 3 * j);
        }
    }
  }
  return out;
}

CMatrix ZeroOrderStructure::apply_l0(const CMatrix& x) const {
  return map_blocks(x, false, [&](std::size_t k, int ell) {
    return internal_.eigenvalue(k) + kI * static_cast<double>(ell);
  });
}

CMatrix ZeroOrderStructure::project(std::span<const Sector> sectors, const CMatrix& x) const {
  return map_blocks(x, false, [&](std::size_t k, int ell) {
    return contains(sectors, internal_.group_of(k), ell) ? Complex(1.0) : Complex(0.0);
  });
}

CMatrix ZeroOrderStructure::project_left(std::span<const Sector> sectors, const CMatrix& a) const {
  return map_blocks(a, true, [&](std::size_t k, int ell) {
    return contains(sectors, internal_.group_of(k), ell) ? Complex(1.0) : Complex(0.0);
  });
}

CMatrix ZeroOrderStructure::resolvent(Complex z, std::span<const Sector> exclude, const CMatrix& x) const {
  const double tol = internal_.grouping_tol();
  auto weight = [&](std::size_t k, int ell) -> Complex {
    const std::size_t g = internal_.group_of(k);
    if (contains(exclude, g, ell)) return 0.0;
    const Complex gap = z - internal_.eigenvalue(k) - kI * static_cast<double>(ell);
    if (std::abs(gap) <= tol) {
      std::ostringstream msg;
      msg << "zero-order resolvent: z = " << z << " hits non-excluded sector (group " << g << ", ell " << ell
          << ")";
      throw SingularResolvent(msg.str());
    }
    return 1.0 / gap;
  };
  return map_blocks(x, false, weight);
}

CMatrix ZeroOrderStructure::resolvent_left(Complex z, std::span<const Sector> exclude, const CMatrix& a) const {
  const double tol = internal_.grouping_tol();
  auto weight = [&](std::size_t k, int ell) -> Complex {
    const std::size_t g = internal_.group_of(k);
    if (contains(exclude, g, ell)) return 0.0;
    const Complex gap = z - internal_.eigenvalue(k) - kI * static_cast<double>(ell);
    if (std::abs(gap) <= tol) {
      std::ostringstream msg;
      msg << "zero-order resolvent: z = " << z << " hits non-excluded sector (group " << g << ", ell " << ell
          << ")";
      throw SingularResolvent(msg.str());
    }
    return 1.0 / gap;
  };
  return map_blocks(a, true, weight);
}

}  // namespace lambdaspec
