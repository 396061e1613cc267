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

#include <functional>
#include <optional>
#include <vector>

#include "spinqd/density.hpp"

namespace spinqd {

// Ohmic bath with squeezing. Units hbar = k_B = 1; squeezing phase Phi(w) = a * w.
struct BathParams {
  double gamma0 = 0.0;
  double omega_c = 100.0;
  double temperature = 0.0;
  double r = 0.0;
  double a = 0.0;
  double omega = 1.0;  // system frequency
};

struct KrausChannel {
  std::vector<HalfInt> spins;
  std::vector<CMatrix> ops;

  // max |sum E^dagger E - I|
  double completeness_residual() const;
};

struct SgadParams {
  double lambda = 0.0;
  double mu = 0.0;
  double nu = 0.0;
  double p = 1.0;
  double xi = 0.0;
};

// Relative tolerance of the frequency integrals.
inline constexpr double kBathRelTol = 1e-9;

double qnd_decoherence_gamma(const BathParams& b, double t);
double qnd_phase_eta(const BathParams& b, double t);

DensityMatrix qnd_evolve_qubit(const DensityMatrix& rho0, const BathParams& b, double t);
// Any single spin j; includes the eta(t) phase.
DensityMatrix qnd_evolve_spin(const DensityMatrix& rho0, const BathParams& b, double t);

double thermal_occupation(const BathParams& b);

// Mixing weight used when none is given: 1 for a zero-temperature unsqueezed
// bath, (N+1)/(2N+1) for r = 0. Throws ConfigError when r != 0.
double sgad_default_p(const BathParams& b);

SgadParams sgad_params(const BathParams& b, std::optional<double> p, double t, double xi = 0.0);

// Throws DomainError unless lambda, mu, nu, p lie in [0, 1].
KrausChannel sgad_kraus(const SgadParams& s);
KrausChannel ad_kraus(double lambda);
KrausChannel identity_channel(HalfInt j);

KrausChannel tensor_channel(const std::vector<KrausChannel>& factors);

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho);

// Two-qubit QND, localized model. Element indices below are library indices.
// t_s = kr / b.omega.
double two_qubit_theta(const BathParams& b, double kr, double t);
double two_qubit_lambda(const BathParams& b, double kr, double t);

// Exponent of exp(-Gamma) for element (row, col) at time t.
using GammaSq = std::function<double(int row, int col, double t)>;

// (E_row - E_col)^2 gamma(t) with E = omega (m1 + m2).
GammaSq default_gamma_sq(const BathParams& b);

// Phase exponent Theta - Lambda applied to element (row, col).
double two_qubit_phase(int row, int col, double theta, double lambda);

// gamma_sq may be empty; strict then throws ConfigError, otherwise the default is used.
DensityMatrix two_qubit_qnd_evolve(const DensityMatrix& rho0, const BathParams& b, double kr, double t,
                                   const GammaSq& gamma_sq, bool strict = false);

}  // namespace spinqd
