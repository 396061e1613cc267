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

#include <vector>

#include "spinqd/density.hpp"

namespace spinqd {

struct LindbladTerm {
  double rate = 0.0;
  CMatrix op;
};

// drho/dt = -i[H, rho] + sum_k rate_k (L rho L^dagger - {L^dagger L, rho} / 2)
CMatrix lindblad_rhs(const CMatrix& h, const std::vector<LindbladTerm>& terms, const CMatrix& rho);

// Fixed-step RK4. Step h = min(0.01, dt / 10, 0.5 / ||L||) per grid interval.
// Throws NumericalError when the trace drifts by more than 1e-8 per unit time.
std::vector<DensityMatrix> integrate_lindblad(const CMatrix& h, const std::vector<LindbladTerm>& terms,
                                              const DensityMatrix& rho0, const std::vector<double>& t_grid);

// Two identical two-level atoms with collective decay and dipole-dipole coupling,
// dipoles perpendicular to the separation, x = k0 r12. thermal_n adds thermal
// excitation at the same collective rates (no squeezing).
struct TwoAtomModel {
  CMatrix h;
  std::vector<LindbladTerm> terms;
  double gamma12 = 0.0;
  double omega12 = 0.0;
};

TwoAtomModel two_atom_collective_model(double gamma, double kr12, double omega0 = 1.0, double thermal_n = 0.0);

}  // namespace spinqd
