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

#include "spinqd/density.hpp"

#include <cmath>

#include "spinqd/angular.hpp"
#include "spinqd/error.hpp"

namespace spinqd {

DensityMatrix::DensityMatrix(std::vector<HalfInt> s, CMatrix d) : spins(std::move(s)), data(std::move(d)) {
  if (data.rows() != data.cols() || data.rows() != total_dim(spins))
    throw DomainError("density matrix size does not match spins");
}

std::vector<int> DensityMatrix::dims() const {
  std::vector<int> out;
  for (HalfInt j : spins) out.push_back(j.twice() + 1);
  return out;
}

int total_dim(const std::vector<HalfInt>& spins) {
  int n = 1;
  for (HalfInt j : spins) {
    if (j.twice() < 0) throw DomainError("negative spin");
    n *= j.twice() + 1;
  }
  return n;
}

StateCheck check_state(const DensityMatrix& rho) {
  StateCheck c;
  c.hermiticity = (rho.data - rho.data.adjoint()).cwiseAbs().maxCoeff();
  c.trace_error = std::abs(rho.data.trace() - cplx(1.0, 0.0));
  CMatrix h = 0.5 * (rho.data + rho.data.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  c.min_eigenvalue = es.eigenvalues().minCoeff();
  return c;
}

void validate_state(const DensityMatrix& rho, double tol) {
  StateCheck c = check_state(rho);
  if (c.hermiticity > tol) throw DomainError("density matrix not Hermitian");
  if (c.trace_error > tol) throw DomainError("density matrix trace is not 1");
  if (c.min_eigenvalue < -tol) throw DomainError("density matrix not positive semidefinite");
}

DensityMatrix pure_state(const std::vector<HalfInt>& spins, const CVector& psi) {
  if (psi.size() != total_dim(spins)) throw DomainError("state vector size does not match spins");
  if (std::abs(psi.squaredNorm() - 1.0) > 1e-12) throw DomainError("state vector not normalized");
  return DensityMatrix(spins, psi * psi.adjoint());
}

DensityMatrix maximally_mixed(const std::vector<HalfInt>& spins) {
  int n = total_dim(spins);
  return DensityMatrix(spins, CMatrix::Identity(n, n) / static_cast<double>(n));
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

namespace {

DensityMatrix apply_local(const DensityMatrix& rho, const std::vector<CMatrix>& u) {
  CMatrix full = CMatrix::Identity(1, 1);
  for (const auto& m : u) full = kron(full, m);
  return DensityMatrix(rho.spins, full * rho.data * full.adjoint());
}

CMatrix euler_matrix(HalfInt j, double a, double b, double c) {
  const int n = j.twice() + 1;
  CMatrix d = small_d_matrix(j, b).cast<cplx>();
  for (int r = 0; r < n; ++r) {
    double mr = 0.5 * (j.twice() - 2 * r);
    for (int k = 0; k < n; ++k) {
      double mk = 0.5 * (j.twice() - 2 * k);
      d(r, k) *= std::polar(1.0, -a * mr - c * mk);
    }
  }
  return d;
}

}  // namespace

DensityMatrix rotate_y(const DensityMatrix& rho, double beta) { return rotate_euler(rho, 0.0, beta, 0.0); }

DensityMatrix rotate_euler(const DensityMatrix& rho, double a, double b, double c) {
  std::vector<CMatrix> u;
  for (HalfInt j : rho.spins) u.push_back(euler_matrix(j, a, b, c));
  return apply_local(rho, u);
}

}  // namespace spinqd
