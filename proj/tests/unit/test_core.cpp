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


#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "lambdaspec/core/errors.hpp"
#include "lambdaspec/core/fock.hpp"
#include "lambdaspec/core/spectral.hpp"
#include "lambdaspec/model/lambda_system.hpp"

using namespace lambdaspec;

TEST_CASE("ladder operators on a small Fock space") {
  const FockOperators f = build_fock_operators(2);
  CHECK(f.a.matrix()(0, 1) == Complex(1.0));
  CHECK(std::abs(f.a.matrix()(1, 2) - std::sqrt(2.0)) < 1e-15);
  CHECK(f.x.matrix()(1, 0) == Complex(1.0));
  CHECK(f.x.matrix()(0, 1) == Complex(1.0));
  CHECK(max_abs(f.a_dag.matrix() - f.a.matrix().adjoint()) == 0.0);
}

TEST_CASE("mean phonon number of a thermal state at n_max = 40") {
  const FockOperators f = build_fock_operators(40);
  const Operator mu = thermal_mu(1.0, 40);
  CHECK(std::abs(((f.a_dag * f.a) * mu).trace() - 1.0) < 1e-9);
}

TEST_CASE("commutator superoperator") {
  const Operator id = Operator::identity(SpaceLabel::internal());
  CHECK(max_abs(commutator_superop(id).matrix()) == 0.0);

  // -i[H, |1><3|] = i delta |1><3| for H = delta |3><3|.
  const double delta = 2.7;
  const Operator h = internal_dyad(2, 2) * Complex(delta);
  const Operator x = internal_dyad(0, 2);
  const Operator y = commutator_superop(h).apply(x);
  CHECK(max_abs(y.matrix() - kI * delta * x.matrix()) < 1e-14);

  std::mt19937_64 rng(11);
  for (int k = 0; k < 5; ++k) {
    const Operator hr(SpaceLabel::internal(), testing::random_hermitian(3, rng));
    const Operator xr(SpaceLabel::internal(), testing::random_matrix(3, rng));
    CHECK(std::abs(commutator_superop(hr).apply(xr).trace()) < 1e-12);
  }
}

TEST_CASE("lindblad superoperator") {
  const Operator j = internal_dyad(0, 2);
  CHECK(max_abs(lindblad_superop(j, 0.0).matrix()) == 0.0);

  const double g1 = 1.7;
  const Operator p3 = internal_dyad(2, 2);
  const Operator dp = lindblad_superop(j, g1).apply(p3);
  CHECK(std::abs(dp.matrix()(2, 2) + g1) < 1e-14);
  CHECK(std::abs(dp.matrix()(0, 0) - g1) < 1e-14);

  std::mt19937_64 rng(12);
  const SuperOperator l = lindblad_superop(Operator(SpaceLabel::internal(), testing::random_matrix(3, rng)), 0.9);
  for (int k = 0; k < 5; ++k) {
    const Operator x(SpaceLabel::internal(), testing::random_matrix(3, rng));
    CHECK(std::abs(l.apply(x).trace()) < 1e-12);
  }
}

TEST_CASE("apply_left is the adjoint action") {
  std::mt19937_64 rng(13);
  const Operator h(SpaceLabel::internal(), testing::random_hermitian(3, rng));
  const SuperOperator l = commutator_superop(h) + lindblad_superop(internal_dyad(1, 2), 0.4);
  const Operator a(SpaceLabel::internal(), testing::random_matrix(3, rng));
  const Operator x(SpaceLabel::internal(), testing::random_matrix(3, rng));
  CHECK(std::abs((a * l.apply(x)).trace() - (l.apply_left(a) * x).trace()) < 1e-12);
}

namespace {

ModelParams lambda_params() {
  ModelParams p;
  p.omega1 = 3.0;
  p.omega2 = 4.0;
  p.delta = 5.0;
  p.gamma1 = 2.0;
  p.gamma2 = 1.5;
  p.eta1 = p.eta2 = 0.05;
  return p;
}

}  // namespace

TEST_CASE("internal Liouvillian has the dark state as unique steady state") {
  const SpectralDecomposition dec = spectral_decompose(internal_liouvillian(lambda_params()));
  int zeros = 0;
  for (std::size_t k = 0; k < dec.size(); ++k) {
    if (std::abs(dec.eigenvalue(k)) < 1e-10) {
      ++zeros;
      CHECK(max_abs(dec.right(k).matrix() - dark_state(lambda_params()).matrix()) < 1e-10);
    } else {
      CHECK(dec.eigenvalue(k).real() < 0.0);
    }
  }
  CHECK(zeros == 1);
}

TEST_CASE("external Liouvillian spectrum") {
  const int n_max = 3;
  const FockOperators f = build_fock_operators(n_max);
  const SpectralDecomposition dec = spectral_decompose(commutator_superop(f.a_dag * f.a));
  for (int ell = -3; ell <= 3; ++ell) {
    const auto groups = dec.groups_near(Complex(0.0, ell), 1e-9);
    REQUIRE(groups.size() == 1);
    CHECK(dec.groups()[groups[0]].size() == static_cast<std::size_t>(4 - std::abs(ell)));
  }
}

TEST_CASE("reduced resolvent identities") {
  const SuperOperator l = internal_liouvillian(lambda_params());
  const SpectralDecomposition dec = spectral_decompose(l);
  std::mt19937_64 rng(14);
  const CMatrix x = testing::random_matrix(3, rng);

  SUBCASE("far from the spectrum") {
    const Complex z(40.0, 3.0);
    const CMatrix r = apply_reduced_resolvent(dec, z, {}, x);
    const CMatrix back = z * r - l.apply(Operator(SpaceLabel::internal(), r)).matrix();
    CHECK(max_abs(back - x) < 1e-9);
  }

  SUBCASE("stationary group excluded") {
    const std::vector<std::size_t> ex = dec.groups_near(Complex(0.0), 1e-9);
    REQUIRE(ex.size() == 1);
    const CMatrix rd = apply_reduced_resolvent(dec, Complex(0.0), ex, dark_state(lambda_params()).matrix());
    CHECK(max_abs(rd) < 1e-9);

    // R (z - L) = 1 - P_excluded
    const Complex z(0.0);
    const CMatrix zl = z * x - l.apply(Operator(SpaceLabel::internal(), x)).matrix();
    const CMatrix lhs = apply_reduced_resolvent(dec, z, ex, zl);
    const CMatrix rhs = x - apply_projector(dec, ex, x);
    CHECK(max_abs(lhs - rhs) < 1e-9);

    const SuperOperator dense = reduced_resolvent(dec, z, ex);
    CHECK(max_abs(dense.apply(Operator(SpaceLabel::internal(), x)).matrix() - apply_reduced_resolvent(dec, z, ex, x)) <
          1e-10);
  }

  SUBCASE("singular when a kept eigenvalue is hit") {
    CHECK_THROWS_AS(apply_reduced_resolvent(dec, Complex(0.0), {}, x), SingularResolvent);
  }
}

TEST_CASE("vec layout") {
  std::mt19937_64 rng(15);
  const CMatrix a = testing::random_matrix(3, rng), b = testing::random_matrix(3, rng), x = testing::random_matrix(3, rng);
  const CVector lhs = vec(a * x * b);
  const CVector rhs = kron(b.transpose(), a) * vec(x);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(max_abs(unvec(vec(x), 3) - x) == 0.0);
}

TEST_CASE("partial traces") {
  std::mt19937_64 rng(16);
  const Operator s(SpaceLabel::internal(), testing::random_matrix(3, rng));
  const Operator m(SpaceLabel::motional(2), testing::random_matrix(3, rng));
  const Operator c = tensor(s, m);
  CHECK(max_abs(trace_motional(c).matrix() - s.matrix() * m.trace()) < 1e-12);
  CHECK(max_abs(trace_internal(c).matrix() - m.matrix() * s.trace()) < 1e-12);
}
