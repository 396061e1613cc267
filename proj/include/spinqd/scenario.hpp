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

#include <optional>
#include <string>
#include <vector>

#include "spinqd/channels.hpp"
#include "spinqd/dicke.hpp"
#include "spinqd/measures.hpp"

namespace spinqd {

enum class StateKind { coherent, singlet, ghz, w, spin1, mixed, uniform, basis };
enum class ChannelKind {
  identity,
  qnd,
  sgad,
  ad_first,
  ad_each,
  gad_each,
  two_qubit_qnd,
  dicke,
  lindblad_two_atom,
  trajectory
};
enum class Provenance { exact, approximation, injected };

std::string to_string(StateKind k);
std::string to_string(ChannelKind k);
std::string to_string(Provenance p);

struct StateSpec {
  StateKind kind = StateKind::coherent;
  double j = 0.5;
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<cplx> amplitudes;  // spin1: m = +1, 0, -1
  int qubits = 1;                // mixed, uniform, basis
  int index = 0;                 // basis
};

struct LindbladSpec {
  double gamma = 0.05;
  double kr12 = 0.05;
  double omega0 = 1.0;
  double thermal_n = 0.0;
};

struct ChannelSpec {
  ChannelKind kind = ChannelKind::identity;
  BathParams bath;
  std::optional<double> p;
  double xi = 0.0;
  std::vector<double> temperatures;  // gad_each, one per qubit
  double kr = 0.05;                  // two_qubit_qnd
  std::string gamma_sq_file;
  DickeParams dicke;
  int dicke_n_max = 0;
  LindbladSpec lindblad;
  std::string trajectory_file;
};

// Azimuth convention of reported angles. printed: the library is evaluated at -phi,
// matching the single-qubit curves as they appear in the literature forms.
enum class Azimuth { library, printed };

struct ScenarioConfig {
  std::string name = "scenario";
  StateSpec state;
  ChannelSpec channel;
  std::vector<SphericalPoint> angles;
  std::vector<double> times{0.0};
  Azimuth azimuth = Azimuth::library;
  QuadratureSpec quad;
  unsigned seed = 1;
};

// Throws ConfigError with a field path on any schema or range violation.
ScenarioConfig parse_scenario(const std::string& yaml_text, const std::string& base_dir = ".");
ScenarioConfig load_scenario(const std::string& path);
std::string to_yaml(const ScenarioConfig& c);
// FNV-1a of the canonical YAML rendering, as 16 hex digits.
std::string scenario_hash(const ScenarioConfig& c);

DensityMatrix initial_state(const StateSpec& s);
std::vector<HalfInt> scenario_spins(const ScenarioConfig& c);

struct EvolvedState {
  double t = 0.0;
  bool valid = true;
  std::string note;
  DensityMatrix rho;
};

struct ScenarioRun {
  Provenance mode = Provenance::exact;
  std::vector<std::string> warnings;
  std::vector<EvolvedState> states;
};

ScenarioRun run_scenario(const ScenarioConfig& c, bool strict = false);

// Angles as used by the library after the azimuth convention is applied.
std::vector<SphericalPoint> library_angles(const ScenarioConfig& c, std::vector<SphericalPoint> pts);

}  // namespace spinqd
