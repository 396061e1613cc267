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

#include "spinqd/table.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "spinqd/error.hpp"

namespace spinqd {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    auto b = cell.find_first_not_of(" \t\r");
    auto e = cell.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace

int CsvTable::column(const std::string& name) const {
  auto it = std::find(columns.begin(), columns.end(), name);
  return it == columns.end() ? -1 : static_cast<int>(it - columns.begin());
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  CsvTable t;
  std::string line;
  bool header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto cells = split(line);
    if (!header) {
      t.columns = cells;
      header = true;
      continue;
    }
    if (cells.size() != t.columns.size())
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected " + std::to_string(t.columns.size()) + " fields");
    std::vector<double> row;
    for (const auto& c : cells) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(c, &used));
        if (used != c.size()) throw std::invalid_argument(c);
      } catch (const std::exception&) {
        throw ConfigError(path + ":" + std::to_string(lineno) + ": not a number: " + c);
      }
    }
    t.rows.push_back(std::move(row));
  }
  if (!header) throw ConfigError(path + ": empty table");
  return t;
}

LinearTable::LinearTable(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.size() != y_.size() || x_.empty()) throw DomainError("interpolation table needs matching non-empty columns");
  for (std::size_t i = 1; i < x_.size(); ++i)
    if (!(x_[i] > x_[i - 1])) throw DomainError("interpolation abscissae must increase");
}

double LinearTable::operator()(double x) const {
  const double tol = 1e-12 * std::max(1.0, std::abs(x_.back()));
  if (x < x_.front() - tol || x > x_.back() + tol) throw DomainError("interpolation outside tabulated range");
  if (x_.size() == 1) return y_[0];
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  std::size_t i = std::clamp<std::size_t>(static_cast<std::size_t>(it - x_.begin()), 1, x_.size() - 1);
  const double s = (x - x_[i - 1]) / (x_[i] - x_[i - 1]);
  return y_[i - 1] + s * (y_[i] - y_[i - 1]);
}

Trajectory read_trajectory(const std::string& path, const std::vector<HalfInt>& spins) {
  CsvTable t = read_csv(path);
  const int n = total_dim(spins);
  if (t.columns.size() != static_cast<std::size_t>(1 + 2 * n * n))
    throw ConfigError(path + ": trajectory needs 1 + 2 * " + std::to_string(n * n) + " columns");
  Trajectory tr;
  for (const auto& row : t.rows) {
    tr.t.push_back(row[0]);
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = cplx(row[1 + 2 * (i * n + j)], row[2 + 2 * (i * n + j)]);
    tr.states.emplace_back(spins, m);
  }
  return tr;
}

void write_trajectory(const std::string& path, const Trajectory& traj) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  if (traj.states.empty()) throw DomainError("empty trajectory");
  const int n = traj.states.front().size();
  out << "t";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out << ",re" << i << j << ",im" << i << j;
  out << "\n" << std::setprecision(17);
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    out << traj.t[k];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out << "," << traj.states[k].data(i, j).real() << "," << traj.states[k].data(i, j).imag();
    out << "\n";
  }
}

}  // namespace spinqd
