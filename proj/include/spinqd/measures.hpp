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

#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "spinqd/qd.hpp"

namespace spinqd {

// Per sphere: Gauss-Legendre in cos(theta), periodic trapezoid in phi.
struct QuadratureSpec {
  int n_theta = 64;
  int n_phi = 64;
  std::size_t max_nodes = 20'000'000;  // budget on evaluated node tuples
};

void validate(const QuadratureSpec& q);

struct SphereRule {
  std::vector<SphericalPoint> nodes;
  std::vector<double> weights;  // sin(theta) dtheta dphi measure, sums to 4 pi
};

SphereRule sphere_rule(const QuadratureSpec& q);

struct QDGrid {
  std::vector<SphereRule> spheres;
  std::vector<double> values;  // row-major over spheres, sphere 0 slowest

  double weight(std::size_t flat) const;
  std::vector<SphericalPoint> point(std::size_t flat) const;
  double integral() const;
};

// Throws NumericalError when the tuple count exceeds q.max_nodes.
QDGrid evaluate_grid(QDKind kind, const MultipoleCoeffs& c, const QuadratureSpec& q);

// |integral - 1| using the product rule, factorized term by term over spheres.
double normalization_residual(QDKind kind, const MultipoleCoeffs& c, const QuadratureSpec& q);

inline constexpr double kNegativityEpsilon = 1e-10;

struct NegativityReport {
  double min_value = 0.0;
  std::vector<SphericalPoint> argmin;
  double negative_fraction = 0.0;  // share of quadrature weight where value < -epsilon
};

NegativityReport negativity_scan(QDKind kind, const MultipoleCoeffs& c, const QuadratureSpec& q);

// delta = integral |W| - 1 over the product of spheres. The last sphere is integrated
// with sign-change splitting in theta; one sphere uses adaptive quadrature in phi.
double nonclassical_volume(const MultipoleCoeffs& c, const QuadratureSpec& q);

nlohmann::json to_json(const NegativityReport& r);

}  // namespace spinqd
