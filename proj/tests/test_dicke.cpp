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

#include "spinqd/dicke.hpp"
#include "spinqd/error.hpp"
#include "spinqd/multipole.hpp"

using namespace spinqd;

TEST(DressedBasis, DiagonalizesSx) {
  for (int n = 1; n <= 6; ++n) {
    DressedBasis b = dressed_basis(n);
    CMatrix d = b.C.conjugate() * collective_sx(n) * b.C.transpose();
    CMatrix expect = b.lambdas.cast<cplx>().asDiagonal();
    EXPECT_NEAR((d - expect).cwiseAbs().maxCoeff(), 0.0, 1e-13) << n;
    EXPECT_NEAR((b.C * b.C.adjoint() - CMatrix::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff(), 0.0, 1e-14);
    EXPECT_NEAR(b.C.imag().cwiseAbs().maxCoeff(), 0.0, 0.0);
  }
  DressedBasis b4 = dressed_basis(4);
  for (int q = 0; q <= 4; ++q) EXPECT_EQ(b4.lambdas(q), q - 2.0);
  DressedBasis b1 = dressed_basis(1);
  EXPECT_EQ(b1.lambdas(0), -0.5);
  EXPECT_THROW(dressed_basis(0), DomainError);
}

TEST(Spin2Fixtures, MatchMultipoleOperators) {
  auto f = spin2_multipole_fixtures();
  ASSERT_EQ(f.size(), 15u);
  for (const auto& x : f) {
    CMatrix lib = bare_to_library(x.ascending);
    EXPECT_NEAR((lib - multipole_operator(HalfInt(2), x.K, x.Q)).cwiseAbs().maxCoeff(), 0.0, 1e-14) << x.K << x.Q;
  }
  EXPECT_NEAR(f[0].ascending(0, 0).real(), 1 / std::sqrt(5.0), 1e-16);
  EXPECT_NEAR(f[10].ascending(4, 0).real(), 1.0, 0.0);
}

TEST(Dicke, InitialGroundState) {
  DickeParams p;
  CMatrix rho = evolve_dicke_bare(p, 0.0);
  EXPECT_NEAR(std::abs(rho(0, 0) - 1.0), 0.0, 1e-10);
  EXPECT_NEAR(rho.cwiseAbs().sum() - std::abs(rho(0, 0)), 0.0, 1e-10);
  DensityMatrix lib = evolve_dicke(p, 0.0);
  EXPECT_NEAR(lib.data(4, 4).real(), 1.0, 1e-12);
}

TEST(Dicke, ValidStateOverWindow) {
  DickeParams p;
  for (double t : {5.0, 50.0, 120.0, 200.0}) {
    DickeDiagnostics d;
    CMatrix rho = evolve_dicke_bare(p, t, {}, &d);
    EXPECT_LT((rho - rho.adjoint()).cwiseAbs().maxCoeff(), 1e-8) << t;
    EXPECT_LT(d.trace_drift, 1e-6) << t;
    EXPECT_LT(d.skipped_weight, 1e-6);
    EXPECT_LT(d.tail_bound, 1e-12);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (rho + rho.adjoint()));
    EXPECT_GT(es.eigenvalues().minCoeff(), -1e-8) << t;
  }
}

TEST(Dicke, CutoffConvergence) {
  DickeParams p;
  DickeOptions a, b;
  a.n_max = 120;
  b.n_max = 160;
  EXPECT_NEAR((evolve_dicke_bare(p, 30.0, a) - evolve_dicke_bare(p, 30.0, b)).cwiseAbs().maxCoeff(), 0.0, 1e-12);
  DickeOptions tiny;
  tiny.n_max = 10;
  EXPECT_THROW(evolve_dicke_bare(p, 30.0, tiny), NumericalError);
}

TEST(Dicke, GIndexReadingsDiffer) {
  DickeParams p;
  DickeOptions swap;
  swap.swap_g_indices = true;
  EXPECT_GT((evolve_dicke_bare(p, 40.0) - evolve_dicke_bare(p, 40.0, swap)).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(Dicke, RegimeWarnings) {
  EXPECT_TRUE(dicke_regime_warnings(DickeParams{}).empty());
  EXPECT_EQ(dicke_regime_warnings(DickeParams{4, 10.0, 0.1, 1e-3}).size(), 1u);
  DickeParams weak{4, 1.0, 0.1, 1.0};
  EXPECT_THROW(evolve_dicke_bare(weak, 5.0), NumericalError);
}
