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

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "spinqd/half_int.hpp"

namespace spinqd {

struct SphericalPoint {
  double theta = 0.0;
  double phi = 0.0;
};

// n! in extended precision, n < 171.
long double factorial(int n);

double wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);

// <j1 m1 j2 m2 | j m>
double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m);

// Condon-Shortley phase.
std::complex<double> spherical_harmonic(int K, int Q, SphericalPoint p);

// Y_KM(theta, 0) for 0 <= M <= K <= kmax, stored at K (K + 1) / 2 + M; same values as std::sph_legendre.
class SphLegendre {
 public:
  explicit SphLegendre(int kmax);
  void operator()(double theta, std::vector<double>& out) const;
  int kmax() const { return kmax_; }

 private:
  int kmax_;
  std::vector<double> diag_, a_, b_;
};

void sph_legendre_table(int kmax, double theta, std::vector<double>& out);

double wigner_small_d(HalfInt j, HalfInt mp, HalfInt m, double beta);

// Matrix of d^j_{m'm}(beta), rows and columns ordered m = j..-j.
Eigen::MatrixXd small_d_matrix(HalfInt j, double beta);

}  // namespace spinqd
