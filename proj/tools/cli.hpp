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
#include <string>
#include <vector>

#include "spinqd/measures.hpp"
#include "spinqd/scenario.hpp"

namespace spinqd::cli {

inline constexpr const char* kCsvVersion = "spinqd-csv 1";

struct RunOptions {
  std::string out_dir = ".";
  std::optional<QuadratureSpec> quad;
  bool strict = false;
  int threads = 1;
  std::vector<std::string> inject;  // figure mode, one trajectory per external series
};

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

QuadratureSpec parse_quad(const std::string& text);

struct Table {
  std::string x_name;
  std::vector<double> x;
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;
  std::vector<std::string> status;  // "ok" or a note
};

struct SeriesManifest {
  std::string label;
  std::string sweep;  // empty for time series
  ScenarioConfig config;
};

struct FigureResult {
  std::string id;
  std::string title;
  std::string y_label;
  Provenance mode = Provenance::exact;
  std::vector<std::string> warnings;
  std::vector<SeriesManifest> series;
  Table table;
};

std::vector<std::string> figure_ids();
FigureResult build_figure(const std::string& id, const RunOptions& opt);

// One value per state, NaN for states marked invalid.
std::vector<std::vector<double>> qd_series(const ScenarioRun& run, const std::vector<SphericalPoint>& library_points,
                                           const std::vector<QDKind>& kinds, int threads);
std::vector<double> volume_series(const ScenarioRun& run, const QuadratureSpec& q, int threads);

std::string format_number(double v);
std::string status_text(const EvolvedState& s);

int cmd_eval(const std::string& scenario_path, const RunOptions& opt);
int cmd_volume(const std::string& scenario_path, const RunOptions& opt);
int cmd_figure(const std::string& id, const RunOptions& opt);

}  // namespace spinqd::cli
