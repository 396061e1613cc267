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

#include "spinqd/fixtures.hpp"

#include <cmath>
#include <numbers>

#include "spinqd/angular.hpp"
#include "spinqd/channels.hpp"
#include "spinqd/dicke.hpp"
#include "spinqd/error.hpp"

namespace spinqd {

CVector atomic_coherent_vector(HalfInt j, double alpha, double beta) {
  const int n = j.twice() + 1;
  CVector v(n);
  const double s = std::sin(0.5 * alpha), c = std::cos(0.5 * alpha);
  for (int r = 0; r < n; ++r) {
    const int up = j.twice() - r;  // j + m
    const int down = r;            // j - m
    const double binom = static_cast<double>(factorial(j.twice()) / (factorial(up) * factorial(down)));
    v(r) = std::sqrt(binom) * std::pow(s, up) * std::pow(c, down) * std::polar(1.0, -up * beta);
  }
  return v;
}

DensityMatrix atomic_coherent_state(HalfInt j, double alpha, double beta) {
  CVector v = atomic_coherent_vector(j, alpha, beta);
  return DensityMatrix({j}, v * v.adjoint());
}

DensityMatrix singlet_state() {
  CVector v = CVector::Zero(4);
  v(1) = 1.0 / std::sqrt(2.0);
  v(2) = -1.0 / std::sqrt(2.0);
  return pure_state({kHalf, kHalf}, v);
}

DensityMatrix ghz_state() {
  CVector v = CVector::Zero(8);
  v(0) = v(7) = 1.0 / std::sqrt(2.0);
  return pure_state({kHalf, kHalf, kHalf}, v);
}

DensityMatrix w_state() {
  CVector v = CVector::Zero(8);
  v(1) = v(2) = v(4) = 1.0 / std::sqrt(3.0);
  return pure_state({kHalf, kHalf, kHalf}, v);
}

DensityMatrix spin1_state(cplx a_plus, cplx a_zero, cplx a_minus) {
  CVector v(3);
  v << a_plus, a_zero, a_minus;
  if (std::abs(v.squaredNorm() - 1.0) > 1e-12) throw DomainError("spin-1 amplitudes not normalized");
  return DensityMatrix({HalfInt(1)}, v * v.adjoint());
}

DensityMatrix named_state(const std::string& id) {
  if (id == "singlet") return singlet_state();
  if (id == "ghz") return ghz_state();
  if (id == "w") return w_state();
  if (id == "spin1") {
    const double a = 1.0 / std::sqrt(3.0);
    return spin1_state(a, a, a);
  }
  if (id == "mixed-qubit") return maximally_mixed({kHalf});
  throw DomainError("unknown named state: " + id);
}

std::vector<NamedFixture> fixture_set() {
  std::vector<NamedFixture> f;
  f.push_back({"coherent(pi/2,0)", atomic_coherent_state(kHalf, std::numbers::pi / 2, 0.0)});
  f.push_back({"coherent(pi/3,pi/4)", atomic_coherent_state(kHalf, std::numbers::pi / 3, std::numbers::pi / 4)});
  f.push_back({"mixed-qubit", maximally_mixed({kHalf})});
  f.push_back({"singlet", singlet_state()});
  f.push_back({"singlet-ad(0.3)", apply_channel(tensor_channel({ad_kraus(0.3), ad_kraus(0.3)}), singlet_state())});
  f.push_back({"mixed-two-qubit", maximally_mixed({kHalf, kHalf})});
  f.push_back({"ghz", ghz_state()});
  f.push_back({"ghz-ad(0.3)",
               apply_channel(tensor_channel({ad_kraus(0.3), identity_channel(kHalf), identity_channel(kHalf)}), ghz_state())});
  f.push_back({"w", w_state()});
  f.push_back({"w-ad(0.3)",
               apply_channel(tensor_channel({ad_kraus(0.3), identity_channel(kHalf), identity_channel(kHalf)}), w_state())});
  f.push_back({"spin1-equal", named_state("spin1")});
  f.push_back({"coherent-spin1", atomic_coherent_state(HalfInt(1), 1.0, 0.5)});
  f.push_back({"coherent-spin2", atomic_coherent_state(HalfInt(2), 2.0, -0.7)});
  f.push_back({"dicke(t=50)", evolve_dicke(DickeParams{}, 50.0)});
  return f;
}

}  // namespace spinqd
