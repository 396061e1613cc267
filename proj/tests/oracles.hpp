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

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "spinqd/angular.hpp"
#include "spinqd/density.hpp"

namespace oracle {

using spinqd::cplx;
using spinqd::CMatrix;
inline constexpr double pi = std::numbers::pi;

// Spin matrices from the ladder action, basis m = j..-j.
struct SpinOps {
  CMatrix jx, jy, jz;
};

inline SpinOps spin_ops(int twoj) {
  const int d = twoj + 1;
  const double j = 0.5 * twoj;
  CMatrix jp = CMatrix::Zero(d, d), jz = CMatrix::Zero(d, d);
  for (int r = 0; r < d; ++r) {
    const double m = j - r;
    jz(r, r) = m;
    if (r > 0) jp(r - 1, r) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  CMatrix jm = jp.adjoint();
  return {(jp + jm) / 2.0, (jp - jm) / cplx(0.0, 2.0), jz};
}

// Associated Legendre P_l^m(x), m >= 0, Condon-Shortley phase, by upward recursion in l.
inline double assoc_legendre(int l, int m, double x) {
  double pmm = 1.0;
  const double s = std::sqrt((1.0 - x) * (1.0 + x));
  for (int i = 1; i <= m; ++i) pmm *= -(2.0 * i - 1.0) * s;
  if (l == m) return pmm;
  double pm1 = x * (2.0 * m + 1.0) * pmm;
  if (l == m + 1) return pm1;
  double pll = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pll = (x * (2.0 * ll - 1.0) * pm1 - (ll + m - 1.0) * pmm) / (ll - m);
    pmm = pm1;
    pm1 = pll;
  }
  return pll;
}

inline cplx ylm(int l, int m, double theta, double phi) {
  const int am = std::abs(m);
  double norm = std::sqrt((2.0 * l + 1.0) / (4.0 * pi) * std::tgamma(l - am + 1.0) / std::tgamma(l + am + 1.0));
  cplx y = norm * assoc_legendre(l, am, std::cos(theta)) * std::polar(1.0, am * phi);
  if (m < 0) y = ((am % 2) ? -1.0 : 1.0) * std::conj(y);
  return y;
}

// Coherent state obtained by rotating |j, -j> with exp(-i phi J_z) exp(-i theta J_y), up to a global phase.
inline Eigen::VectorXcd rotated_lowest(int twoj, double theta, double phi) {
  SpinOps s = spin_ops(twoj);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(twoj + 1);
  v(twoj) = 1.0;
  CMatrix rz = (cplx(0.0, -phi) * s.jz).exp();
  CMatrix ry = (cplx(0.0, -theta) * s.jy).exp();
  return rz * ry * v;
}

inline Eigen::VectorXcd rotated_highest(int twoj, double theta, double phi) {
  SpinOps s = spin_ops(twoj);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(twoj + 1);
  v(0) = 1.0;
  CMatrix rz = (cplx(0.0, -phi) * s.jz).exp();
  CMatrix ry = (cplx(0.0, -theta) * s.jy).exp();
  return rz * ry * v;
}

}  // namespace oracle
