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

#include "spinqd/lindblad.hpp"

#include <cmath>

#include "spinqd/error.hpp"

namespace spinqd {

CMatrix lindblad_rhs(const CMatrix& h, const std::vector<LindbladTerm>& terms, const CMatrix& rho) {
  const cplx i(0.0, 1.0);
  CMatrix d = -i * (h * rho - rho * h);
  for (const auto& t : terms) {
    CMatrix ld = t.op.adjoint();
    CMatrix ldl = ld * t.op;
    d += t.rate * (t.op * rho * ld - 0.5 * (ldl * rho + rho * ldl));
  }
  return d;
}

std::vector<DensityMatrix> integrate_lindblad(const CMatrix& h, const std::vector<LindbladTerm>& terms,
                                              const DensityMatrix& rho0, const std::vector<double>& t_grid) {
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12) throw DomainError("Hamiltonian not Hermitian");
  for (std::size_t k = 1; k < t_grid.size(); ++k)
    if (!(t_grid[k] > t_grid[k - 1])) throw DomainError("time grid must be increasing");

  double gen_norm = 2.0 * h.norm();
  for (const auto& t : terms) gen_norm += std::abs(t.rate) * t.op.squaredNorm();
  const double h_max = gen_norm > 0.0 ? 0.03 / gen_norm : 0.01;

  std::vector<DensityMatrix> out;
  out.reserve(t_grid.size());
  CMatrix rho = rho0.data;
  const cplx tr0 = rho.trace();
  double t = t_grid.empty() ? 0.0 : t_grid.front();
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    if (k > 0) {
      const double span = t_grid[k] - t_grid[k - 1];
      const double step = std::min({0.01, span / 10.0, h_max});
      const int n = static_cast<int>(std::ceil(span / step - 1e-9));
      const double hh = span / n;
      for (int s = 0; s < n; ++s) {
        CMatrix k1 = lindblad_rhs(h, terms, rho);
        CMatrix k2 = lindblad_rhs(h, terms, rho + 0.5 * hh * k1);
        CMatrix k3 = lindblad_rhs(h, terms, rho + 0.5 * hh * k2);
        CMatrix k4 = lindblad_rhs(h, terms, rho + hh * k3);
        rho += (hh / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      }
      t = t_grid[k];
      const double drift = std::abs(rho.trace() - tr0);
      const double elapsed = std::max(t - t_grid.front(), 1.0);
      if (!std::isfinite(drift) || drift > 1e-8 * elapsed)
        throw NumericalError("Lindblad integration unstable: trace drift", drift);
    }
    out.emplace_back(rho0.spins, rho);
  }
  return out;
}

TwoAtomModel two_atom_collective_model(double gamma, double kr12, double omega0, double thermal_n) {
  if (thermal_n < 0.0) throw DomainError("negative thermal occupation");
  if (!(kr12 > 0.0)) throw DomainError("atomic separation must be positive");
  const double x = kr12;
  const double sx = std::sin(x), cx = std::cos(x);
  TwoAtomModel m;
  m.gamma12 = 1.5 * gamma * (sx / x + cx / (x * x) - sx / (x * x * x));
  m.omega12 = 0.75 * gamma * (-cx / x + sx / (x * x) + cx / (x * x * x));

  CMatrix sm = CMatrix::Zero(2, 2);
  sm(1, 0) = 1.0;  // |e> = index 0 decays to |g> = index 1
  const CMatrix id = CMatrix::Identity(2, 2);
  CMatrix sz = CMatrix::Zero(2, 2);
  sz(0, 0) = 0.5;
  sz(1, 1) = -0.5;
  const CMatrix s1 = kron(sm, id), s2 = kron(id, sm);
  m.h = omega0 * (kron(sz, id) + kron(id, sz)) + m.omega12 * (s1.adjoint() * s2 + s2.adjoint() * s1);

  const double gs = gamma + m.gamma12, ga = gamma - m.gamma12;
  const double r = 1.0 / std::sqrt(2.0);
  if (gs < -1e-15 || ga < -1e-15) throw DomainError("collective rates negative");
  const CMatrix ls = r * (s1 + s2), la = r * (s1 - s2);
  m.terms.push_back({(thermal_n + 1.0) * std::max(gs, 0.0), ls});
  m.terms.push_back({(thermal_n + 1.0) * std::max(ga, 0.0), la});
  if (thermal_n > 0.0) {
    m.terms.push_back({thermal_n * std::max(gs, 0.0), ls.adjoint()});
    m.terms.push_back({thermal_n * std::max(ga, 0.0), la.adjoint()});
  }
  return m;
}

}  // namespace spinqd
