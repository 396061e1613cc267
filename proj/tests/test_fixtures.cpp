// Copyright 2026 The spinqd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spinqd/error.hpp"
#include "spinqd/fixtures.hpp"
#include "spinqd/measures.hpp"
#include "spinqd/multipole.hpp"
#include "spinqd/qd.hpp"

using namespace spinqd;
using oracle::pi;

TEST(Density, KronOrdering) {
  CMatrix a(2, 2), b = CMatrix::Identity(2, 2);
  a << 1, 2, 3, 4;
  CMatrix k = kron(a, b);
  EXPECT_EQ(k(0, 2), cplx(2.0));
  EXPECT_EQ(k(2, 0), cplx(3.0));
  EXPECT_EQ(k(1, 3), cplx(2.0));
  EXPECT_EQ(total_dim({kHalf, HalfInt(1), HalfInt(2)}), 30);
}

TEST(Density, Validation) {
  CMatrix m = CMatrix::Identity(2, 2);
  EXPECT_THROW(validate_state(DensityMatrix({kHalf}, m)), DomainError);
  m(0, 0) = 1.5;
  m(1, 1) = -0.5;
  StateCheck s = check_state(DensityMatrix({kHalf}, m));
  EXPECT_NEAR(s.min_eigenvalue, -0.5, 1e-15);
  EXPECT_THROW(DensityMatrix({kHalf}, CMatrix::Identity(3, 3)), DomainError);
  CVector v(2);
  v << 1.0, 1.0;
  EXPECT_THROW(pure_state({kHalf}, v), DomainError);
}

TEST(Density, RotationMatchesExponential) {
  DensityMatrix rho = atomic_coherent_state(HalfInt(1), 0.3, 0.9);
  oracle::SpinOps s = oracle::spin_ops(2);
  CMatrix u = (cplx(0.0, -0.2) * s.jz).exp() * (cplx(0.0, -1.1) * s.jy).exp() * (cplx(0.0, -0.7) * s.jz).exp();
  DensityMatrix r = rotate_euler(rho, 0.2, 1.1, 0.7);
  EXPECT_NEAR((r.data - u * rho.data * u.adjoint()).cwiseAbs().maxCoeff(), 0.0, 1e-14);
  CMatrix uy = (cplx(0.0, -1.1) * s.jy).exp();
  EXPECT_NEAR((rotate_y(rho, 1.1).data - uy * rho.data * uy.adjoint()).cwiseAbs().maxCoeff(), 0.0, 1e-14);
}

TEST(CoherentState, QubitExamples) {
  DensityMatrix a = atomic_coherent_state(kHalf, pi / 2, 0.0);
  EXPECT_NEAR((a.data - CMatrix::Constant(2, 2, 0.5)).cwiseAbs().maxCoeff(), 0.0, 1e-15);
  DensityMatrix b = atomic_coherent_state(kHalf, 0.0, 1.0);
  CMatrix pole = CMatrix::Zero(2, 2);
  pole(1, 1) = 1.0;
  EXPECT_NEAR((b.data - pole).cwiseAbs().maxCoeff(), 0.0, 1e-15);
}

TEST(CoherentState, QMaximumAtLabel) {
  QuadratureSpec q{48, 48};
  SphereRule rule = sphere_rule(q);
  for (int twoj = 1; twoj <= 4; ++twoj) {
    HalfInt j = HalfInt::from_twice(twoj);
    MultipoleCoeffs c = decompose(atomic_coherent_state(j, 1.2, 2.4));
    double at_label = (twoj + 1) / (4 * pi);
    EXPECT_NEAR(evaluate(QDKind::Q, c, {{1.2, 2.4}}), at_label, 1e-14);
    for (const auto& n : rule.nodes) EXPECT_LE(evaluate(QDKind::Q, c, {n}), at_label + 1e-14);
  }
}

TEST(NamedStates, Structure) {
  DensityMatrix s = singlet_state();
  EXPECT_NEAR(s.data(1, 1).real(), 0.5, 1e-15);
  EXPECT_NEAR(s.data(1, 2).real(), -0.5, 1e-15);
  EXPECT_NEAR(s.data(0, 0).real() + s.data(3, 3).real(), 0.0, 1e-15);

  DensityMatrix g = ghz_state();
  for (int r : {0, 7})
    for (int c : {0, 7}) EXPECT_NEAR(g.data(r, c).real(), 0.5, 1e-15);
  EXPECT_NEAR(g.data.cwiseAbs().sum(), 2.0, 1e-14);

  DensityMatrix w = w_state();
  for (int r : {1, 2, 4})
    for (int c : {1, 2, 4}) EXPECT_NEAR(w.data(r, c).real(), 1.0 / 3.0, 1e-15);

  const double a = 1.0 / std::sqrt(3.0);
  DensityMatrix s1 = spin1_state(a, a, a);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(s1.data);
  EXPECT_NEAR(es.eigenvalues()(2), 1.0, 1e-14);
  EXPECT_NEAR(es.eigenvalues()(1), 0.0, 1e-14);
  EXPECT_THROW(spin1_state(1.0, 1.0, 0.0), DomainError);

  EXPECT_NEAR((named_state("ghz").data - g.data).norm(), 0.0, 0.0);
  EXPECT_THROW(named_state("nope"), DomainError);
}

TEST(NamedStates, AllFixturesValid) {
  for (const auto& f : fixture_set()) {
    StateCheck s = check_state(f.rho);
    EXPECT_LT(s.hermiticity, 1e-10) << f.name;
    EXPECT_LT(s.trace_error, 1e-10) << f.name;
    EXPECT_GT(s.min_eigenvalue, -1e-10) << f.name;
  }
}
