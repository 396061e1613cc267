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

#include <utility>
#include <vector>

#include "spinqd/density.hpp"

namespace spinqd {

struct KQ {
  int K = 0;
  int Q = 0;
};

// Position of (K, Q) in the per-particle ordering K = 0..2j, Q = -K..K.
constexpr int kq_index(int K, int Q) { return K * K + K + Q; }
KQ kq_from_index(int l);

// T_KQ for spin j, rows and columns ordered m = j..-j.
CMatrix multipole_operator(HalfInt j, int K, int Q);

// Dense table of rho_{K1 Q1 ... Kn Qn}. Flat index is row-major over particles
// with particle 0 slowest; each particle contributes kq_index(K, Q).
struct MultipoleCoeffs {
  std::vector<HalfInt> spins;
  std::vector<cplx> values;

  std::vector<int> extents() const;  // (2j+1)^2 per particle
  cplx at(const std::vector<KQ>& kq) const;
  cplx& at(const std::vector<KQ>& kq);
  std::vector<KQ> unflatten(std::size_t flat) const;
};

MultipoleCoeffs decompose(const DensityMatrix& rho);

DensityMatrix reconstruct(const MultipoleCoeffs& c);

}  // namespace spinqd
