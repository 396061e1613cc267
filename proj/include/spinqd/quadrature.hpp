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
#include <vector>

namespace spinqd {

struct GaussRule {
  std::vector<double> x;  // nodes on [-1, 1]
  std::vector<double> w;
};

// Cached, thread-safe.
const GaussRule& gauss_legendre(int n);

double integrate_gl(const std::function<double(double)>& f, double a, double b, int n);

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // absolute estimate
  double l1 = 0.0;     // integral of |f|
};

// Adaptive Gauss-Kronrod (15 point) over [a, b] split into `panels` equal pieces.
// Throws NumericalError when the summed estimate exceeds rel_tol * max(l1, abs_floor).
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b, int panels,
                              double rel_tol, double abs_floor = 0.0);

// Neumaier compensated sum.
class CompensatedSum {
 public:
  void add(double v);
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace spinqd
