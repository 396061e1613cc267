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

// Numeric CSV with a header row. Lines starting with '#' are skipped.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  int column(const std::string& name) const;  // -1 when absent
};

CsvTable read_csv(const std::string& path);

// Piecewise-linear interpolation on increasing abscissae. Outside the range throws DomainError.
class LinearTable {
 public:
  LinearTable(std::vector<double> x, std::vector<double> y);
  double operator()(double x) const;
  double front() const { return x_.front(); }
  double back() const { return x_.back(); }

 private:
  std::vector<double> x_, y_;
};

// Density-matrix trajectory: column t, then re_ij, im_ij for all i, j row-major.
struct Trajectory {
  std::vector<double> t;
  std::vector<DensityMatrix> states;
};

Trajectory read_trajectory(const std::string& path, const std::vector<HalfInt>& spins);
void write_trajectory(const std::string& path, const Trajectory& traj);

}  // namespace spinqd
