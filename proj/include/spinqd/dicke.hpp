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

#include <string>
#include <vector>

#include "spinqd/density.hpp"

namespace spinqd {

struct DickeParams {
  int n_atoms = 4;
  double nbar = 30.0;
  double g = 0.1;
  double gamma = 1e-3;
};

// Empty when the strong-field regime holds (nbar >= 5 N, gamma / g <= 0.1 sqrt(nbar)).
std::vector<std::string> dicke_regime_warnings(const DickeParams& p);

// C(q, k) = <k|q~> with k the number of excited atoms; real orthogonal.
// C^T S_x C = diag(lambdas).
struct DressedBasis {
  CMatrix C;
  Eigen::VectorXd lambdas;
};

DressedBasis dressed_basis(int n_atoms);

// Collective S_x, S_z in the bare basis k = 0..N.
CMatrix collective_sx(int n_atoms);

struct DickeOptions {
  int n_max = 0;                // photon cutoff; 0 selects ceil(nbar + 12 sqrt(nbar))
  bool swap_g_indices = false;  // use G_qp instead of G_pq in the double sum
  double max_skipped_weight = 1e-6;
  double tail_tolerance = 1e-12;
};

struct DickeDiagnostics {
  double skipped_weight = 0.0;  // Poisson weight of photon numbers with n_N < 0
  double tail_bound = 0.0;
  double trace_drift = 0.0;
  int n_max = 0;
};

// Bare basis, ordered k = 0..N (k = m + N/2).
CMatrix evolve_dicke_bare(const DickeParams& p, double t, const DickeOptions& opt = {},
                          DickeDiagnostics* diag = nullptr);

// Spin N/2 state in the library ordering (m = N/2 first). Renormalized to unit trace.
DensityMatrix evolve_dicke(const DickeParams& p, double t, const DickeOptions& opt = {},
                           DickeDiagnostics* diag = nullptr);

// Reverse the k-ordering into the library's m = j..-j ordering.
CMatrix bare_to_library(const CMatrix& bare);

struct Spin2Fixture {
  int K = 0;
  int Q = 0;
  CMatrix ascending;  // rows and columns ordered m = -2..2
};

std::vector<Spin2Fixture> spin2_multipole_fixtures();

}  // namespace spinqd
