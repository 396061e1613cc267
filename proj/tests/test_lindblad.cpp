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
#include <unsupported/Eigen/MatrixFunctions>

#include "spinqd/error.hpp"
#include "spinqd/fixtures.hpp"
#include "spinqd/lindblad.hpp"

using namespace spinqd;

namespace {

CMatrix lowering() {
  CMatrix s = CMatrix::Zero(2, 2);
  s(1, 0) = 1.0;
  return s;
}

std::vector<double> grid(double stop, int n) {
  std::vector<double> t;
  for (int i = 0; i <= n; ++i) t.push_back(stop * i / n);
  return t;
}

}  // namespace

TEST(Lindblad, NoDynamics) {
  DensityMatrix rho = atomic_coherent_state(kHalf, 0.7, 0.2);
  auto out = integrate_lindblad(CMatrix::Zero(2, 2), {}, rho, grid(5.0, 5));
  ASSERT_EQ(out.size(), 6u);
  for (const auto& r : out) EXPECT_NEAR((r.data - rho.data).cwiseAbs().maxCoeff(), 0.0, 0.0);
}

TEST(Lindblad, SpontaneousDecay) {
  CVector e = CVector::Zero(2);
  e(0) = 1.0;
  auto t = grid(4.0, 8);
  auto out = integrate_lindblad(CMatrix::Zero(2, 2), {{0.7, lowering()}}, pure_state({kHalf}, e), t);
  for (std::size_t k = 0; k < t.size(); ++k) EXPECT_NEAR(out[k].data(0, 0).real(), std::exp(-0.7 * t[k]), 1e-6);
}

TEST(Lindblad, PrecessionAndDephasing) {
  CMatrix sz = CMatrix::Zero(2, 2);
  sz(0, 0) = 1.0;
  sz(1, 1) = -1.0;
  CMatrix h = 0.5 * 1.3 * sz;
  DensityMatrix rho = atomic_coherent_state(kHalf, std::numbers::pi / 2, 0.0);
  auto t = grid(3.0, 6);
  auto out = integrate_lindblad(h, {{0.2, sz}}, rho, t);
  for (std::size_t k = 0; k < t.size(); ++k) {
    cplx expect = rho.data(0, 1) * std::polar(std::exp(-2.0 * 0.2 * t[k]), -1.3 * t[k]);
    EXPECT_NEAR(std::abs(out[k].data(0, 1) - expect), 0.0, 1e-8);
  }
}

TEST(Lindblad, RejectsBadInput) {
  DensityMatrix rho = maximally_mixed({kHalf});
  CMatrix h = CMatrix::Zero(2, 2);
  h(0, 1) = 1.0;
  EXPECT_THROW(integrate_lindblad(h, {}, rho, {0.0, 1.0}), DomainError);
  EXPECT_THROW(integrate_lindblad(CMatrix::Zero(2, 2), {}, rho, {1.0, 0.5}), DomainError);
}

TEST(TwoAtom, CollectiveRates) {
  TwoAtomModel near = two_atom_collective_model(1.0, 1e-3);
  EXPECT_NEAR(near.gamma12, 1.0, 1e-6);
  TwoAtomModel far = two_atom_collective_model(1.0, 500.0);
  EXPECT_LT(std::abs(far.gamma12), 5e-3);
  EXPECT_THROW(two_atom_collective_model(1.0, 0.0), DomainError);
}

TEST(TwoAtom, SymmetricAndAntisymmetricDecay) {
  const double g = 0.05, x = 0.8;
  TwoAtomModel m = two_atom_collective_model(g, x);
  const double r = 1.0 / std::sqrt(2.0);
  auto t = grid(10.0, 5);
  for (int sign : {1, -1}) {
    CVector v = CVector::Zero(4);
    v(1) = r;
    v(2) = sign * r;
    auto out = integrate_lindblad(m.h, m.terms, pure_state({kHalf, kHalf}, v), t);
    const double rate = g + sign * m.gamma12;
    for (std::size_t k = 0; k < t.size(); ++k) {
      cplx pop = (v.adjoint() * out[k].data * v)(0);
      EXPECT_NEAR(pop.real(), std::exp(-rate * t[k]), 1e-7);
      EXPECT_NEAR(out[k].data.trace().real(), 1.0, 1e-10);
    }
  }
}

TEST(TwoAtom, ThermalSteadyState) {
  TwoAtomModel m = two_atom_collective_model(0.2, 500.0, 1.0, 0.5);
  auto out = integrate_lindblad(m.h, m.terms, maximally_mixed({kHalf, kHalf}), {0.0, 80.0});
  const double pe = 0.5 / 2.0;  // n / (2n + 1)
  EXPECT_NEAR(out.back().data(0, 0).real(), pe * pe, 2e-3);
  EXPECT_NEAR(out.back().data(3, 3).real(), (1 - pe) * (1 - pe), 2e-3);
}

TEST(TwoAtom, StrongDipoleCouplingMatchesPropagator) {
  TwoAtomModel m = two_atom_collective_model(0.05, 0.05);
  ASSERT_GT(std::abs(m.omega12), 100.0);
  CMatrix gen(16, 16);
  for (int k = 0; k < 16; ++k) {
    CMatrix e = CMatrix::Zero(4, 4);
    e(k % 4, k / 4) = 1.0;
    gen.col(k) = lindblad_rhs(m.h, m.terms, e).reshaped();
  }
  CVector v = CVector::Zero(4);
  v(1) = 1.0;
  const DensityMatrix rho0 = pure_state({kHalf, kHalf}, v);
  const std::vector<double> t = {0.0, 1.0, 4.0};
  auto out = integrate_lindblad(m.h, m.terms, rho0, t);
  for (std::size_t k = 1; k < t.size(); ++k) {
    CMatrix g = (gen * t[k]).exp();
    CVector exact = g * rho0.data.reshaped();
    EXPECT_LT((out[k].data.reshaped() - exact).cwiseAbs().maxCoeff(), 1e-5) << "t=" << t[k];
  }
}
