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

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Basis per particle ordered m = j, j-1, ..., -j. Multi-particle states use the
// Kronecker product with particle 0 as the most significant index. For qubits
// index 0 is m = +1/2.
struct DensityMatrix {
  std::vector<HalfInt> spins;
  CMatrix data;

  DensityMatrix() = default;
  DensityMatrix(std::vector<HalfInt> s, CMatrix d);

  std::vector<int> dims() const;
  int size() const { return static_cast<int>(data.rows()); }
};

int total_dim(const std::vector<HalfInt>& spins);

CMatrix kron(const CMatrix& a, const CMatrix& b);

struct StateCheck {
  double hermiticity = 0.0;  // max |rho - rho^dagger|
  double trace_error = 0.0;  // |tr rho - 1|
  double min_eigenvalue = 0.0;
};

StateCheck check_state(const DensityMatrix& rho);

// Throws DomainError when any check exceeds tol.
void validate_state(const DensityMatrix& rho, double tol = 1e-10);

DensityMatrix pure_state(const std::vector<HalfInt>& spins, const CVector& psi);

DensityMatrix maximally_mixed(const std::vector<HalfInt>& spins);

// Applies the same rotation exp(-i beta J_y) to every particle.
DensityMatrix rotate_y(const DensityMatrix& rho, double beta);

// Rotation exp(-i a J_z) exp(-i b J_y) exp(-i c J_z) on every particle.
DensityMatrix rotate_euler(const DensityMatrix& rho, double a, double b, double c);

}  // namespace spinqd
