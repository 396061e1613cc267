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

#include "spinqd/scenario.hpp"

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "spinqd/error.hpp"
#include "spinqd/fixtures.hpp"
#include "spinqd/lindblad.hpp"
#include "spinqd/table.hpp"

namespace spinqd {
namespace {

template <typename E>
E enum_from(const std::string& s, std::initializer_list<E> all, const std::string& field) {
  for (E e : all)
    if (to_string(e) == s) return e;
  throw ConfigError(field + ": unknown value '" + s + "'");
}

double get_double(const YAML::Node& n, const std::string& path) {
  try {
    double v = n.as<double>();
    if (!std::isfinite(v)) throw ConfigError(path + ": not finite");
    return v;
  } catch (const YAML::Exception&) {
    throw ConfigError(path + ": expected a number");
  }
}

int get_int(const YAML::Node& n, const std::string& path) {
  try {
    return n.as<int>();
  } catch (const YAML::Exception&) {
    throw ConfigError(path + ": expected an integer");
  }
}

std::string get_string(const YAML::Node& n, const std::string& path) {
  try {
    return n.as<std::string>();
  } catch (const YAML::Exception&) {
    throw ConfigError(path + ": expected a string");
  }
}

void check_keys(const YAML::Node& n, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!n.IsMap()) throw ConfigError(path + ": expected a mapping");
  for (auto it = n.begin(); it != n.end(); ++it) {
    std::string k = it->first.as<std::string>();
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) throw ConfigError(path + "." + k + ": unknown key");
  }
}

void read_double(const YAML::Node& parent, const char* key, const std::string& path, double& out) {
  if (parent[key]) out = get_double(parent[key], path + "." + key);
}

void require_probability(double v, const std::string& path) {
  if (!(v >= 0.0 && v <= 1.0)) throw ConfigError(path + ": probability outside [0, 1]");
}

BathParams parse_bath(const YAML::Node& n, const std::string& path) {
  check_keys(n, path, {"gamma0", "omega_c", "temperature", "r", "a", "omega"});
  BathParams b;
  read_double(n, "gamma0", path, b.gamma0);
  read_double(n, "omega_c", path, b.omega_c);
  read_double(n, "temperature", path, b.temperature);
  read_double(n, "r", path, b.r);
  read_double(n, "a", path, b.a);
  read_double(n, "omega", path, b.omega);
  if (b.gamma0 < 0.0 || b.omega_c <= 0.0 || b.temperature < 0.0 || b.omega <= 0.0)
    throw ConfigError(path + ": bath parameters out of range");
  return b;
}

std::string resolve(const std::string& base, const std::string& file) {
  if (file.empty()) return file;
  std::filesystem::path p(file);
  if (p.is_absolute()) return file;
  return (std::filesystem::path(base) / p).string();
}

std::vector<double> parse_times(const YAML::Node& n, const std::string& path) {
  std::vector<double> t;
  if (n.IsSequence()) {
    for (std::size_t i = 0; i < n.size(); ++i) t.push_back(get_double(n[i], path + "[" + std::to_string(i) + "]"));
  } else {
    check_keys(n, path, {"start", "stop", "count"});
    if (!n["start"] || !n["stop"] || !n["count"]) throw ConfigError(path + ": start, stop and count are required");
    double a = get_double(n["start"], path + ".start"), b = get_double(n["stop"], path + ".stop");
    int c = get_int(n["count"], path + ".count");
    if (c < 1) throw ConfigError(path + ".count: must be positive");
    for (int i = 0; i < c; ++i) t.push_back(c == 1 ? a : a + (b - a) * i / (c - 1));
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 0.0) throw ConfigError(path + ": negative time");
    if (i > 0 && !(t[i] > t[i - 1])) throw ConfigError(path + ": times must increase");
  }
  if (t.empty()) throw ConfigError(path + ": no times");
  return t;
}

}  // namespace

std::string to_string(StateKind k) {
  switch (k) {
    case StateKind::coherent: return "coherent";
    case StateKind::singlet: return "singlet";
    case StateKind::ghz: return "ghz";
    case StateKind::w: return "w";
    case StateKind::spin1: return "spin1";
    case StateKind::mixed: return "mixed";
    case StateKind::uniform: return "uniform";
    case StateKind::basis: return "basis";
  }
  return "?";
}

std::string to_string(ChannelKind k) {
  switch (k) {
    case ChannelKind::identity: return "identity";
    case ChannelKind::qnd: return "qnd";
    case ChannelKind::sgad: return "sgad";
    case ChannelKind::ad_first: return "ad_first";
    case ChannelKind::ad_each: return "ad_each";
    case ChannelKind::gad_each: return "gad_each";
    case ChannelKind::two_qubit_qnd: return "two_qubit_qnd";
    case ChannelKind::dicke: return "dicke";
    case ChannelKind::lindblad_two_atom: return "lindblad_two_atom";
    case ChannelKind::trajectory: return "trajectory";
  }
  return "?";
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::exact: return "exact";
    case Provenance::approximation: return "approximation";
    case Provenance::injected: return "injected";
  }
  return "?";
}

ScenarioConfig parse_scenario(const std::string& yaml_text, const std::string& base_dir) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("scenario is not valid YAML: ") + e.what());
  }
  check_keys(root, "scenario", {"name", "state", "channel", "angles", "time", "azimuth", "quad", "seed"});
  ScenarioConfig c;
  if (root["name"]) c.name = get_string(root["name"], "name");

  if (!root["state"]) throw ConfigError("state: required");
  {
    const YAML::Node s = root["state"];
    check_keys(s, "state", {"kind", "j", "alpha", "beta", "amplitudes", "qubits", "index"});
    if (!s["kind"]) throw ConfigError("state.kind: required");
    c.state.kind = enum_from(get_string(s["kind"], "state.kind"),
                             {StateKind::coherent, StateKind::singlet, StateKind::ghz, StateKind::w, StateKind::spin1,
                              StateKind::mixed, StateKind::uniform, StateKind::basis},
                             "state.kind");
    read_double(s, "j", "state", c.state.j);
    read_double(s, "alpha", "state", c.state.alpha);
    read_double(s, "beta", "state", c.state.beta);
    if (s["qubits"]) c.state.qubits = get_int(s["qubits"], "state.qubits");
    if (s["index"]) c.state.index = get_int(s["index"], "state.index");
    if (s["amplitudes"]) {
      const YAML::Node a = s["amplitudes"];
      if (!a.IsSequence() || a.size() != 3) throw ConfigError("state.amplitudes: expected three [re, im] pairs");
      for (std::size_t i = 0; i < 3; ++i) {
        std::string p = "state.amplitudes[" + std::to_string(i) + "]";
        if (a[i].IsSequence() && a[i].size() == 2)
          c.state.amplitudes.emplace_back(get_double(a[i][0], p), get_double(a[i][1], p));
        else
          c.state.amplitudes.emplace_back(get_double(a[i], p), 0.0);
      }
    }
    try {
      HalfInt::from_double(c.state.j);
    } catch (const DomainError&) {
      throw ConfigError("state.j: not a half-integer");
    }
    if (c.state.qubits < 1 || c.state.qubits > 3) throw ConfigError("state.qubits: must be 1, 2 or 3");
    if (c.state.index < 0 || c.state.index >= (1 << c.state.qubits)) throw ConfigError("state.index: out of range");
    if (c.state.kind == StateKind::spin1 && c.state.amplitudes.empty()) {
      const double a = 1.0 / std::sqrt(3.0);
      c.state.amplitudes = {a, a, a};
    }
  }

  if (root["channel"]) {
    const YAML::Node ch = root["channel"];
    check_keys(ch, "channel",
               {"kind", "bath", "p", "xi", "temperatures", "kr", "gamma_sq_file", "dicke", "lindblad", "trajectory_file"});
    if (!ch["kind"]) throw ConfigError("channel.kind: required");
    c.channel.kind = enum_from(get_string(ch["kind"], "channel.kind"),
                               {ChannelKind::identity, ChannelKind::qnd, ChannelKind::sgad, ChannelKind::ad_first,
                                ChannelKind::ad_each, ChannelKind::gad_each, ChannelKind::two_qubit_qnd,
                                ChannelKind::dicke, ChannelKind::lindblad_two_atom, ChannelKind::trajectory},
                               "channel.kind");
    if (ch["bath"]) c.channel.bath = parse_bath(ch["bath"], "channel.bath");
    if (ch["p"]) {
      double p = get_double(ch["p"], "channel.p");
      require_probability(p, "channel.p");
      c.channel.p = p;
    }
    read_double(ch, "xi", "channel", c.channel.xi);
    read_double(ch, "kr", "channel", c.channel.kr);
    if (ch["temperatures"]) {
      const YAML::Node t = ch["temperatures"];
      if (!t.IsSequence()) throw ConfigError("channel.temperatures: expected a list");
      for (std::size_t i = 0; i < t.size(); ++i) {
        double v = get_double(t[i], "channel.temperatures[" + std::to_string(i) + "]");
        if (v < 0.0) throw ConfigError("channel.temperatures: negative temperature");
        c.channel.temperatures.push_back(v);
      }
    }
    if (ch["gamma_sq_file"]) c.channel.gamma_sq_file = resolve(base_dir, get_string(ch["gamma_sq_file"], "channel.gamma_sq_file"));
    if (ch["trajectory_file"])
      c.channel.trajectory_file = resolve(base_dir, get_string(ch["trajectory_file"], "channel.trajectory_file"));
    if (ch["dicke"]) {
      const YAML::Node d = ch["dicke"];
      check_keys(d, "channel.dicke", {"atoms", "nbar", "g", "gamma", "n_max"});
      if (d["atoms"]) c.channel.dicke.n_atoms = get_int(d["atoms"], "channel.dicke.atoms");
      read_double(d, "nbar", "channel.dicke", c.channel.dicke.nbar);
      read_double(d, "g", "channel.dicke", c.channel.dicke.g);
      read_double(d, "gamma", "channel.dicke", c.channel.dicke.gamma);
      if (d["n_max"]) c.channel.dicke_n_max = get_int(d["n_max"], "channel.dicke.n_max");
      if (c.channel.dicke.n_atoms < 1 || c.channel.dicke.nbar <= 0.0 || c.channel.dicke.gamma < 0.0)
        throw ConfigError("channel.dicke: parameters out of range");
    }
    if (ch["lindblad"]) {
      const YAML::Node l = ch["lindblad"];
      check_keys(l, "channel.lindblad", {"gamma", "kr12", "omega0", "thermal_n"});
      read_double(l, "gamma", "channel.lindblad", c.channel.lindblad.gamma);
      read_double(l, "kr12", "channel.lindblad", c.channel.lindblad.kr12);
      read_double(l, "omega0", "channel.lindblad", c.channel.lindblad.omega0);
      read_double(l, "thermal_n", "channel.lindblad", c.channel.lindblad.thermal_n);
      if (c.channel.lindblad.kr12 <= 0.0 || c.channel.lindblad.gamma < 0.0 || c.channel.lindblad.thermal_n < 0.0)
        throw ConfigError("channel.lindblad: parameters out of range");
    }
  }

  if (root["angles"]) {
    const YAML::Node a = root["angles"];
    if (!a.IsSequence()) throw ConfigError("angles: expected a list of [theta, phi]");
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::string p = "angles[" + std::to_string(i) + "]";
      if (!a[i].IsSequence() || a[i].size() != 2) throw ConfigError(p + ": expected [theta, phi]");
      c.angles.push_back({get_double(a[i][0], p), get_double(a[i][1], p)});
    }
  }
  if (root["time"]) c.times = parse_times(root["time"], "time");
  if (root["azimuth"]) {
    std::string a = get_string(root["azimuth"], "azimuth");
    if (a == "library")
      c.azimuth = Azimuth::library;
    else if (a == "printed")
      c.azimuth = Azimuth::printed;
    else
      throw ConfigError("azimuth: expected library or printed");
  }
  if (root["quad"]) {
    const YAML::Node q = root["quad"];
    check_keys(q, "quad", {"n_theta", "n_phi", "max_nodes"});
    if (q["n_theta"]) c.quad.n_theta = get_int(q["n_theta"], "quad.n_theta");
    if (q["n_phi"]) c.quad.n_phi = get_int(q["n_phi"], "quad.n_phi");
    if (q["max_nodes"]) c.quad.max_nodes = static_cast<std::size_t>(get_double(q["max_nodes"], "quad.max_nodes"));
    validate(c.quad);
  }
  if (root["seed"]) c.seed = static_cast<unsigned>(get_int(root["seed"], "seed"));

  const std::size_t particles = scenario_spins(c).size();
  if (!c.angles.empty() && c.angles.size() != particles)
    throw ConfigError("angles: expected " + std::to_string(particles) + " [theta, phi] pairs");
  if (c.channel.kind == ChannelKind::gad_each && c.channel.temperatures.size() != particles)
    throw ConfigError("channel.temperatures: one temperature per qubit required");
  if (c.channel.kind == ChannelKind::trajectory && c.channel.trajectory_file.empty())
    throw ConfigError("channel.trajectory_file: required for trajectory channel");
  return c;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::filesystem::path p(path);
  return parse_scenario(ss.str(), p.has_parent_path() ? p.parent_path().string() : ".");
}

std::string to_yaml(const ScenarioConfig& c) {
  YAML::Emitter e;
  e.SetDoublePrecision(17);
  e << YAML::BeginMap;
  e << YAML::Key << "name" << YAML::Value << c.name;
  e << YAML::Key << "state" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "kind" << YAML::Value << to_string(c.state.kind);
  e << YAML::Key << "j" << YAML::Value << c.state.j;
  e << YAML::Key << "alpha" << YAML::Value << c.state.alpha;
  e << YAML::Key << "beta" << YAML::Value << c.state.beta;
  e << YAML::Key << "qubits" << YAML::Value << c.state.qubits;
  e << YAML::Key << "index" << YAML::Value << c.state.index;
  if (!c.state.amplitudes.empty()) {
    e << YAML::Key << "amplitudes" << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (cplx a : c.state.amplitudes) e << YAML::BeginSeq << a.real() << a.imag() << YAML::EndSeq;
    e << YAML::EndSeq;
  }
  e << YAML::EndMap;
  const ChannelSpec& ch = c.channel;
  e << YAML::Key << "channel" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "kind" << YAML::Value << to_string(ch.kind);
  e << YAML::Key << "bath" << YAML::Value << YAML::Flow << YAML::BeginMap;
  e << YAML::Key << "gamma0" << YAML::Value << ch.bath.gamma0 << YAML::Key << "omega_c" << YAML::Value << ch.bath.omega_c;
  e << YAML::Key << "temperature" << YAML::Value << ch.bath.temperature << YAML::Key << "r" << YAML::Value << ch.bath.r;
  e << YAML::Key << "a" << YAML::Value << ch.bath.a << YAML::Key << "omega" << YAML::Value << ch.bath.omega;
  e << YAML::EndMap;
  if (ch.p) e << YAML::Key << "p" << YAML::Value << *ch.p;
  e << YAML::Key << "xi" << YAML::Value << ch.xi;
  if (!ch.temperatures.empty()) e << YAML::Key << "temperatures" << YAML::Value << YAML::Flow << ch.temperatures;
  e << YAML::Key << "kr" << YAML::Value << ch.kr;
  if (!ch.gamma_sq_file.empty()) e << YAML::Key << "gamma_sq_file" << YAML::Value << ch.gamma_sq_file;
  if (!ch.trajectory_file.empty()) e << YAML::Key << "trajectory_file" << YAML::Value << ch.trajectory_file;
  e << YAML::Key << "dicke" << YAML::Value << YAML::Flow << YAML::BeginMap;
  e << YAML::Key << "atoms" << YAML::Value << ch.dicke.n_atoms << YAML::Key << "nbar" << YAML::Value << ch.dicke.nbar;
  e << YAML::Key << "g" << YAML::Value << ch.dicke.g << YAML::Key << "gamma" << YAML::Value << ch.dicke.gamma;
  e << YAML::Key << "n_max" << YAML::Value << ch.dicke_n_max << YAML::EndMap;
  e << YAML::Key << "lindblad" << YAML::Value << YAML::Flow << YAML::BeginMap;
  e << YAML::Key << "gamma" << YAML::Value << ch.lindblad.gamma << YAML::Key << "kr12" << YAML::Value << ch.lindblad.kr12;
  e << YAML::Key << "omega0" << YAML::Value << ch.lindblad.omega0 << YAML::Key << "thermal_n" << YAML::Value
    << ch.lindblad.thermal_n << YAML::EndMap;
  e << YAML::EndMap;
  e << YAML::Key << "angles" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (const auto& a : c.angles) e << YAML::BeginSeq << a.theta << a.phi << YAML::EndSeq;
  e << YAML::EndSeq;
  e << YAML::Key << "time" << YAML::Value << YAML::Flow << c.times;
  e << YAML::Key << "azimuth" << YAML::Value << (c.azimuth == Azimuth::library ? "library" : "printed");
  e << YAML::Key << "quad" << YAML::Value << YAML::Flow << YAML::BeginMap;
  e << YAML::Key << "n_theta" << YAML::Value << c.quad.n_theta << YAML::Key << "n_phi" << YAML::Value << c.quad.n_phi;
  e << YAML::Key << "max_nodes" << YAML::Value << static_cast<double>(c.quad.max_nodes) << YAML::EndMap;
  e << YAML::Key << "seed" << YAML::Value << c.seed;
  e << YAML::EndMap;
  return e.c_str();
}

std::string scenario_hash(const ScenarioConfig& c) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : to_yaml(c)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

DensityMatrix initial_state(const StateSpec& s) {
  switch (s.kind) {
    case StateKind::coherent: return atomic_coherent_state(HalfInt::from_double(s.j), s.alpha, s.beta);
    case StateKind::singlet: return singlet_state();
    case StateKind::ghz: return ghz_state();
    case StateKind::w: return w_state();
    case StateKind::spin1: return spin1_state(s.amplitudes.at(0), s.amplitudes.at(1), s.amplitudes.at(2));
    case StateKind::mixed: return maximally_mixed(std::vector<HalfInt>(s.qubits, kHalf));
    case StateKind::uniform: {
      const int n = 1 << s.qubits;
      CVector v = CVector::Constant(n, cplx(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
      return pure_state(std::vector<HalfInt>(s.qubits, kHalf), v);
    }
    case StateKind::basis: {
      CVector v = CVector::Zero(1 << s.qubits);
      v(s.index) = 1.0;
      return pure_state(std::vector<HalfInt>(s.qubits, kHalf), v);
    }
  }
  throw ConfigError("unknown state kind");
}

std::vector<HalfInt> scenario_spins(const ScenarioConfig& c) {
  if (c.channel.kind == ChannelKind::dicke) return {HalfInt::from_twice(c.channel.dicke.n_atoms)};
  switch (c.state.kind) {
    case StateKind::coherent: return {HalfInt::from_double(c.state.j)};
    case StateKind::singlet: return {kHalf, kHalf};
    case StateKind::ghz:
    case StateKind::w: return {kHalf, kHalf, kHalf};
    case StateKind::spin1: return {HalfInt(1)};
    default: return std::vector<HalfInt>(c.state.qubits, kHalf);
  }
}

std::vector<SphericalPoint> library_angles(const ScenarioConfig& c, std::vector<SphericalPoint> pts) {
  if (c.azimuth == Azimuth::printed)
    for (auto& p : pts) p.phi = -p.phi;
  return pts;
}

namespace {

GammaSq load_gamma_sq(const std::string& path, const BathParams& b) {
  CsvTable t = read_csv(path);
  int tc = t.column("t");
  if (tc < 0) throw ConfigError(path + ": column t required");
  std::vector<double> x;
  for (const auto& r : t.rows) x.push_back(r[tc]);
  std::map<std::pair<int, int>, LinearTable> direct;
  std::optional<LinearTable> scaled;
  for (std::size_t k = 0; k < t.columns.size(); ++k) {
    const std::string& name = t.columns[k];
    if (static_cast<int>(k) == tc) continue;
    std::vector<double> y;
    for (const auto& r : t.rows) y.push_back(r[k]);
    if (name == "gamma") {
      scaled.emplace(x, y);
    } else if (name.size() == 3 && name[0] == 'g' && name[1] >= '0' && name[1] <= '3' && name[2] >= '0' && name[2] <= '3') {
      int a = name[1] - '0', c = name[2] - '0';
      direct.emplace(std::make_pair(std::min(a, c), std::max(a, c)), LinearTable(x, y));
    } else {
      throw ConfigError(path + ": unknown column " + name);
    }
  }
  const double w = b.omega;
  return [direct, scaled, w](int row, int col, double tt) {
    auto it = direct.find({std::min(row, col), std::max(row, col)});
    if (it != direct.end()) return it->second(tt);
    if (!scaled) throw ConfigError("Gamma^sq table has no entry for element (" + std::to_string(row) + "," + std::to_string(col) + ")");
    auto m = [](int i) { return i == 0 ? 1.0 : (i == 3 ? -1.0 : 0.0); };
    double d = w * (m(row) - m(col));
    return d * d * (*scaled)(tt);
  };
}

KrausChannel gad_qubit(const BathParams& base, double temperature, double t) {
  BathParams b = base;
  b.temperature = temperature;
  b.r = 0.0;
  return sgad_kraus(sgad_params(b, std::nullopt, t));
}

}  // namespace

ScenarioRun run_scenario(const ScenarioConfig& c, bool strict) {
  ScenarioRun run;
  const ChannelSpec& ch = c.channel;
  const std::vector<HalfInt> spins = scenario_spins(c);

  if (ch.kind == ChannelKind::trajectory) {
    run.mode = Provenance::injected;
    Trajectory tr = read_trajectory(ch.trajectory_file, spins);
    for (std::size_t k = 0; k < tr.t.size(); ++k) run.states.push_back({tr.t[k], true, "", tr.states[k]});
    return run;
  }
  if (ch.kind == ChannelKind::dicke) {
    run.warnings = dicke_regime_warnings(ch.dicke);
    DickeOptions opt;
    opt.n_max = ch.dicke_n_max;
    for (double t : c.times) run.states.push_back({t, true, "", evolve_dicke(ch.dicke, t, opt)});
    return run;
  }

  const DensityMatrix rho0 = initial_state(c.state);
  if (ch.kind == ChannelKind::lindblad_two_atom) {
    if (spins.size() != 2) throw ConfigError("lindblad_two_atom needs a two-qubit state");
    if (strict) throw ConfigError("two-atom bath dynamics need an injected trajectory in strict mode");
    run.mode = Provenance::approximation;
    run.warnings.push_back("two-atom dynamics from the generic collective master equation (approximation)");
    TwoAtomModel m = two_atom_collective_model(ch.lindblad.gamma, ch.lindblad.kr12, ch.lindblad.omega0, ch.lindblad.thermal_n);
    std::vector<double> grid = c.times;
    bool prepend = grid.front() > 0.0;
    if (prepend) grid.insert(grid.begin(), 0.0);
    auto states = integrate_lindblad(m.h, m.terms, rho0, grid);
    for (std::size_t k = prepend ? 1 : 0; k < grid.size(); ++k) run.states.push_back({grid[k], true, "", states[k]});
    return run;
  }

  GammaSq gsq;
  if (ch.kind == ChannelKind::two_qubit_qnd) {
    if (!ch.gamma_sq_file.empty()) {
      gsq = load_gamma_sq(ch.gamma_sq_file, ch.bath);
      run.mode = Provenance::injected;
    } else {
      if (strict) throw ConfigError("two_qubit_qnd needs channel.gamma_sq_file in strict mode");
      run.mode = Provenance::approximation;
      run.warnings.push_back("Gamma^sq from the single-qubit decoherence function scaled by (E_a - E_b)^2 (approximation)");
    }
  }

  for (double t : c.times) {
    EvolvedState es{t, true, "", rho0};
    try {
      switch (ch.kind) {
        case ChannelKind::identity: break;
        case ChannelKind::qnd: es.rho = qnd_evolve_spin(rho0, ch.bath, t); break;
        case ChannelKind::sgad: {
          if (spins.size() != 1 || spins[0] != kHalf) throw ConfigError("sgad acts on a single qubit");
          es.rho = apply_channel(sgad_kraus(sgad_params(ch.bath, ch.p, t, ch.xi)), rho0);
          break;
        }
        case ChannelKind::ad_first:
        case ChannelKind::ad_each: {
          const double lam = -std::expm1(-ch.bath.gamma0 * t);
          std::vector<KrausChannel> f;
          for (std::size_t i = 0; i < spins.size(); ++i) {
            if (spins[i] != kHalf) throw ConfigError("amplitude damping acts on qubits");
            f.push_back(i == 0 || ch.kind == ChannelKind::ad_each ? ad_kraus(lam) : identity_channel(kHalf));
          }
          es.rho = apply_channel(tensor_channel(f), rho0);
          break;
        }
        case ChannelKind::gad_each: {
          std::vector<KrausChannel> f;
          for (std::size_t i = 0; i < spins.size(); ++i) f.push_back(gad_qubit(ch.bath, ch.temperatures[i], t));
          es.rho = apply_channel(tensor_channel(f), rho0);
          break;
        }
        case ChannelKind::two_qubit_qnd: es.rho = two_qubit_qnd_evolve(rho0, ch.bath, ch.kr, t, gsq, strict); break;
        default: throw ConfigError("unsupported channel");
      }
    } catch (const DomainError& e) {
      es.valid = false;
      es.note = e.what();
    }
    run.states.push_back(std::move(es));
  }
  return run;
}

}  // namespace spinqd
