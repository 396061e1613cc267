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

#include <array>
#include <string>
#include <vector>

#include "spinqd/angular.hpp"
#include "spinqd/multipole.hpp"

namespace spinqd {

enum class QDKind { W, P, Q, F };

inline constexpr std::array<QDKind, 4> kAllKinds = {QDKind::W, QDKind::P, QDKind::Q, QDKind::F};

std::string to_string(QDKind k);
QDKind qd_kind_from_string(const std::string& s);

double kernel_weight(QDKind kind, HalfInt j, int K, int Q);

// Imaginary parts above this are reported as DomainError (non-Hermitian input).
inline constexpr double kImagTolerance = 1e-10;

double evaluate(QDKind kind, const MultipoleCoeffs& c, const std::vector<SphericalPoint>& points);

// Reusable evaluator: drops zero coefficients once and caches kernel weights.
class QDEvaluator {
 public:
  QDEvaluator(QDKind kind, const MultipoleCoeffs& c);

  double operator()(const std::vector<SphericalPoint>& points) const;
  // Complex sum, for callers that want to inspect the imaginary residue.
  cplx raw(const std::vector<SphericalPoint>& points) const;

  QDKind kind() const { return kind_; }
  const std::vector<HalfInt>& spins() const { return spins_; }

 private:
  struct Term {
    cplx value;
    std::vector<int> l;  // kq_index per particle
  };
  QDKind kind_;
  std::vector<HalfInt> spins_;
  std::vector<Term> terms_;
  std::vector<std::vector<double>> weights_;  // [particle][kq_index]
};

}  // namespace spinqd
