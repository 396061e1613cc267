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
#include "spinqd/channels.hpp"
#include "spinqd/error.hpp"
#include "spinqd/fixtures.hpp"
#include "spinqd/measures.hpp"
#include "spinqd/multipole.hpp"
#include "spinqd/quadrature.hpp"

using namespace spinqd;
using oracle::pi;

TEST(SphereRule, WeightsAndValidation) {
  SphereRule r = sphere_rule({16, 12});
  ASSERT_EQ(r.nodes.size(), 16u * 12u);
  double s = 0.0;
  for (double w : r.weights) s += w;
  EXPECT_NEAR(s, 4 * pi, 1e-13);
  EXPECT_THROW(validate({4, 64}), ConfigError);
  EXPECT_THROW(sphere_rule({64, 2}), ConfigError);
}

TEST(Normalization, Fixtures) {
  QuadratureSpec q;
  for (const auto& f : fixture_set()) {
    MultipoleCoeffs c = decompose(f.rho);
    for (QDKind k : kAllKinds) EXPECT_LT(normalization_residual(k, c, q), 1e-10) << f.name << " " << to_string(k);
  }
}

TEST(Normalization, GridIntegralAgrees) {
  QuadratureSpec q{16, 16};
  MultipoleCoeffs c = decompose(singlet_state());
  QDGrid g = evaluate_grid(QDKind::P, c, q);
  EXPECT_EQ(g.values.size(), 256u * 256u);
  EXPECT_NEAR(g.integral(), 1.0, 1e-12);
  EXPECT_EQ(g.point(257).size(), 2u);
  QuadratureSpec tight{16, 16, 1000};
  EXPECT_THROW(evaluate_grid(QDKind::P, c, tight), NumericalError);
}

TEST(Negativity, SingletAndQ) {
  QuadratureSpec q{24, 24};
  MultipoleCoeffs c = decompose(singlet_state());
  NegativityReport p = negativity_scan(QDKind::P, c, q);
  EXPECT_LT(p.min_value, 0.0);
  EXPECT_GT(p.negative_fraction, 0.0);
  ASSERT_EQ(p.argmin.size(), 2u);
  EXPECT_NEAR(evaluate(QDKind::P, c, p.argmin), p.min_value, 1e-15);
  NegativityReport qq = negativity_scan(QDKind::Q, c, q);
  EXPECT_EQ(qq.negative_fraction, 0.0);
  EXPECT_GE(qq.min_value, -1e-12);
  nlohmann::json j = to_json(p);
  EXPECT_EQ(j["argmin"].size(), 2u);
  EXPECT_DOUBLE_EQ(j["min"].get<double>(), p.min_value);
}

TEST(Volume, MixedAndCoherent) {
  QuadratureSpec q;
  EXPECT_NEAR(nonclassical_volume(decompose(maximally_mixed({kHalf})), q), 0.0, 1e-12);
  EXPECT_NEAR(nonclassical_volume(decompose(maximally_mixed({kHalf, kHalf})), q), 0.0, 1e-12);
  const double expect = 2.0 / std::sqrt(3.0) - 1.0;
  for (auto [a, b] : {std::pair{0.0, 0.0}, {pi / 2, 0.0}, {1.1, 2.3}, {2.9, 5.0}})
    EXPECT_NEAR(nonclassical_volume(decompose(atomic_coherent_state(kHalf, a, b)), q), expect, 1e-8);
}

// Outer spheres use the fixed product rule, so multi-sphere volumes converge algebraically.
TEST(Volume, ProductStatesFactorize) {
  QuadratureSpec q{32, 32};
  DensityMatrix a = atomic_coherent_state(kHalf, 0.4, 1.0), b = atomic_coherent_state(kHalf, 2.0, 0.3);
  DensityMatrix ab({kHalf, kHalf}, kron(a.data, b.data));
  const double one = 2.0 / std::sqrt(3.0);
  EXPECT_NEAR(nonclassical_volume(decompose(ab), q), one * one - 1.0, 5e-4);
  DensityMatrix abc({kHalf, kHalf, kHalf}, kron(ab.data, a.data));
  EXPECT_NEAR(nonclassical_volume(decompose(abc), {16, 16}), one * one * one - 1.0, 5e-4);
}

TEST(Volume, AxialSpinStatesAgainstOneDimensionalIntegral) {
  for (int twoj = 2; twoj <= 4; ++twoj) {
    MultipoleCoeffs c = decompose(atomic_coherent_state(HalfInt::from_twice(twoj), 0.0, 0.0));
    auto f = [&](double th) { return std::abs(evaluate(QDKind::W, c, {{th, 0.0}})) * std::sin(th); };
    double oracle_value = 2 * pi * integrate_adaptive(f, 0.0, pi, 64, 1e-12).value - 1.0;
    EXPECT_NEAR(nonclassical_volume(c, {}), oracle_value, 1e-8) << twoj;
  }
}

TEST(Volume, RotationInvariant) {
  DensityMatrix s1 = spin1_state(cplx(0.6, 0.0), cplx(0.0, 0.48), cplx(0.64, 0.0));
  double base = nonclassical_volume(decompose(s1), {});
  EXPECT_GT(base, 0.01);
  EXPECT_NEAR(nonclassical_volume(decompose(rotate_euler(s1, 0.3, 1.2, 2.0)), {}), base, 1e-6);
}
