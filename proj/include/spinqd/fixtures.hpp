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

// |alpha, beta> = sum_m sqrt(C(2j, j+m)) sin^{j+m}(alpha/2) cos^{j-m}(alpha/2) e^{-i(j+m) beta} |j, m>
CVector atomic_coherent_vector(HalfInt j, double alpha, double beta);
DensityMatrix atomic_coherent_state(HalfInt j, double alpha, double beta);

// (|+1/2, -1/2> - |-1/2, +1/2>) / sqrt(2)
DensityMatrix singlet_state();
// (|000> + |111>) / sqrt(2)
DensityMatrix ghz_state();
// (|001> + |010> + |100>) / sqrt(3)
DensityMatrix w_state();
// Amplitudes on m = +1, 0, -1; must be normalized.
DensityMatrix spin1_state(cplx a_plus, cplx a_zero, cplx a_minus);

// Ids: singlet, ghz, w, spin1 (equal amplitudes), mixed-qubit.
DensityMatrix named_state(const std::string& id);

// Every fixture used by the normalization and W == F checks, with a label.
struct NamedFixture {
  std::string name;
  DensityMatrix rho;
};
std::vector<NamedFixture> fixture_set();

}  // namespace spinqd
