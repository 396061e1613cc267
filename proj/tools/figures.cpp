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


#include <cmath>
#include <map>
#include <numbers>

#include "cli.hpp"
#include "spinqd/error.hpp"
#include "spinqd/multipole.hpp"

namespace spinqd::cli {
namespace {

constexpr double pi = std::numbers::pi;

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

struct Series {
  std::string label;
  ScenarioConfig cfg;
  std::vector<QDKind> kinds;
  bool volume = false;
  // Non-time sweep: each x gets its own run at cfg.times.
  std::string sweep_name;
  std::vector<double> sweep;
  std::function<void(ScenarioConfig&, double)> set;
};

struct FigureSpec {
  std::string title;
  std::string y_label = "value";
  std::string x_name = "t";
  std::vector<Series> series;
  std::vector<std::string> warnings;
};

const std::vector<QDKind> kWPQ = {QDKind::W, QDKind::P, QDKind::Q};
const std::vector<QDKind> kWPQF = {QDKind::W, QDKind::P, QDKind::Q, QDKind::F};

ScenarioConfig named(const std::string& name, std::vector<double> times) {
  ScenarioConfig c;
  c.name = name;
  c.times = std::move(times);
  return c;
}

ScenarioConfig qnd_single(const std::string& name, double T) {
  ScenarioConfig c = named(name, linspace(0.0, 10.0, 101));
  c.state.kind = StateKind::coherent;
  c.state.alpha = pi / 2;
  c.state.beta = pi / 3;
  c.channel.kind = ChannelKind::qnd;
  c.channel.bath.gamma0 = 0.1;
  c.channel.bath.omega_c = 100.0;
  c.channel.bath.temperature = T;
  c.angles = {{pi / 3, pi / 4}};
  c.azimuth = Azimuth::printed;
  return c;
}

ScenarioConfig sgad_single(const std::string& name, double r, double T, std::optional<double> p, std::vector<double> times) {
  ScenarioConfig c = named(name, std::move(times));
  c.state.kind = StateKind::coherent;
  c.state.alpha = pi / 2;
  c.state.beta = pi / 3;
  c.channel.kind = ChannelKind::sgad;
  c.channel.bath.gamma0 = 0.05;
  c.channel.bath.temperature = T;
  c.channel.bath.r = r;
  c.channel.p = p;
  c.angles = {{pi / 2, pi / 3}};
  c.azimuth = Azimuth::printed;
  return c;
}

double squeezed_occupation(double T, double r) {
  BathParams b;
  b.temperature = T;
  const double nth = thermal_occupation(b);
  const double ch = std::cosh(r), sh = std::sinh(r);
  return nth * (ch * ch + sh * sh) + sh * sh;
}

ScenarioConfig two_atom(const std::string& name, double kr12, std::vector<double> times, std::vector<SphericalPoint> angles) {
  ScenarioConfig c = named(name, std::move(times));
  c.state.kind = StateKind::basis;
  c.state.qubits = 2;
  c.state.index = 1;
  c.channel.kind = ChannelKind::lindblad_two_atom;
  c.channel.lindblad.gamma = 0.05;
  c.channel.lindblad.kr12 = kr12;
  c.angles = std::move(angles);
  return c;
}

const std::vector<SphericalPoint> kVacuumAngles = {{pi / 8, pi / 4}, {pi / 3, pi / 4}};
const std::vector<SphericalPoint> kSqueezedAngles = {{pi / 4, pi / 6}, {pi / 8, pi / 8}};

ScenarioConfig three_qubit(const std::string& name, StateKind s, ChannelKind ch, std::vector<SphericalPoint> angles) {
  ScenarioConfig c = named(name, linspace(0.0, 10.0, 101));
  c.state.kind = s;
  c.state.qubits = 3;
  c.channel.kind = ch;
  c.channel.bath.gamma0 = 0.1;
  if (ch == ChannelKind::gad_each) c.channel.temperatures = {0.0, 1.0, 2.0};
  c.angles = std::move(angles);
  return c;
}

ScenarioConfig dicke(const std::string& name) {
  ScenarioConfig c = named(name, linspace(0.0, 200.0, 201));
  c.channel.kind = ChannelKind::dicke;
  c.channel.dicke = DickeParams{4, 30.0, 0.1, 1e-3};
  c.angles = {{pi / 3, pi / 2}};
  return c;
}

const char* kSqueezeWarning = "bath squeezing enters the two-atom approximation only through the mean occupation";

FigureSpec spacing_figure(const std::string& title, const std::vector<double>& ts, std::vector<QDKind> kinds,
                          bool label_by_time) {
  FigureSpec f{title, "value", "kr12", {}, {}};
  for (double t : ts) {
    Series s;
    s.label = label_by_time ? "t" + format_number(t) : "";
    s.cfg = two_atom("vacuum_spacing_t" + format_number(t), 0.05, {t}, kVacuumAngles);
    s.kinds = kinds;
    s.sweep_name = "kr12";
    s.sweep = linspace(0.05, 2.0, 40);
    s.set = [](ScenarioConfig& c, double x) { c.channel.lindblad.kr12 = x; };
    f.series.push_back(std::move(s));
  }
  return f;
}

FigureSpec spec_for(const std::string& id) {
  if (id == "fig1a") return {"QND, single qubit, T = 1", "value", "t", {{"", qnd_single("qnd_T1", 1.0), kWPQ}}, {}};
  if (id == "fig1b" || id == "fig1c") {
    const QDKind k = id == "fig1b" ? QDKind::W : QDKind::P;
    FigureSpec f{"QND, single qubit, " + to_string(k) + " for T = 0, 1, 2", to_string(k), "t", {}, {}};
    for (int T = 0; T <= 2; ++T)
      f.series.push_back({"T" + std::to_string(T), qnd_single("qnd_T" + std::to_string(T), T), {k}});
    return f;
  }
  if (id == "fig2a") return {"SGAD, r = 0, T = 3", "value", "t", {{"", sgad_single("sgad_r0_T3", 0.0, 3.0, std::nullopt, linspace(0, 20, 201)), kWPQ}}, {}};
  if (id == "fig2b") return {"SGAD, r = 1, T = 3, p = 0.5", "value", "t", {{"", sgad_single("sgad_r1_T3", 1.0, 3.0, 0.5, linspace(0, 20, 201)), kWPQ}}, {}};
  if (id == "fig2c") return {"SGAD, r = 1, T = 10, p = 0.5", "value", "t", {{"", sgad_single("sgad_r1_T10", 1.0, 10.0, 0.5, linspace(0, 5, 101)), kWPQ}}, {}};
  if (id == "fig3") {
    ScenarioConfig c = named("two_qubit_qnd", linspace(0.0, 10.0, 101));
    c.state.kind = StateKind::uniform;
    c.state.qubits = 2;
    c.channel.kind = ChannelKind::two_qubit_qnd;
    c.channel.bath.gamma0 = 0.01;
    c.channel.bath.omega_c = 100.0;
    c.channel.bath.r = 0.05;
    c.channel.bath.temperature = 2.0;
    c.channel.kr = 0.05;
    c.angles = {{pi / 3, pi}, {pi / 4, pi / 3}};
    return {"two-qubit QND, kr = 0.05, T = 2", "value", "t", {{"", c, kWPQ}}, {}};
  }
  if (id == "fig4a" || id == "fig4b" || id == "fig4c") {
    const QDKind k = id == "fig4a" ? QDKind::W : (id == "fig4b" ? QDKind::P : QDKind::Q);
    FigureSpec f{"two atoms, vacuum bath, " + to_string(k), to_string(k), "t", {}, {}};
    for (double kr : {0.05, 2.0})
      f.series.push_back({"r" + format_number(kr), two_atom("vacuum_kr" + format_number(kr), kr, linspace(0, 10, 101), kVacuumAngles), {k}});
    return f;
  }
  if (id == "fig4d")
    return {"two atoms, vacuum bath, kr12 = 0.05", "value", "t",
            {{"", two_atom("vacuum_kr0.05", 0.05, linspace(0, 10, 101), kVacuumAngles), kWPQ}}, {}};
  if (id == "fig5a") return spacing_figure("two atoms, vacuum bath, W vs spacing", {1.0, 5.0}, {QDKind::W}, true);
  if (id == "fig5b") return spacing_figure("two atoms, vacuum bath, P vs spacing", {1.0, 5.0}, {QDKind::P}, true);
  if (id == "fig5c") return spacing_figure("two atoms, vacuum bath, t = 1", {1.0}, kWPQ, false);
  if (id == "fig5d") return spacing_figure("two atoms, vacuum bath, t = 5", {5.0}, kWPQ, false);
  if (id == "fig6a") {
    Series s;
    s.cfg = two_atom("squeezed_vs_T", 0.08, {2.0}, kSqueezedAngles);
    s.kinds = kWPQ;
    s.sweep_name = "T";
    s.sweep = linspace(0.0, 5.0, 51);
    s.set = [](ScenarioConfig& c, double T) { c.channel.lindblad.thermal_n = squeezed_occupation(T, 0.5); };
    return {"two atoms, squeezed thermal bath, r = 0.5, kr12 = 0.08, t = 2", "value", "T", {s}, {kSqueezeWarning}};
  }
  if (id == "fig6b") {
    ScenarioConfig c = two_atom("squeezed_vs_t", 0.05, linspace(0, 10, 101), kSqueezedAngles);
    c.channel.lindblad.thermal_n = squeezed_occupation(1.0, 0.1);
    return {"two atoms, squeezed thermal bath, T = 1, r = 0.1, kr12 = 0.05", "value", "t", {{"", c, kWPQ}}, {kSqueezeWarning}};
  }
  if (id == "fig6c") {
    ScenarioConfig c = named("epr_ad", linspace(0.0, 10.0, 101));
    c.state.kind = StateKind::singlet;
    c.channel.kind = ChannelKind::ad_each;
    c.channel.bath.gamma0 = 0.1;
    c.angles = {{pi / 2, pi / 4}, {pi / 2, pi / 3}};
    return {"EPR singlet, amplitude damping", "value", "t", {{"", c, kWPQ}}, {}};
  }
  const std::vector<SphericalPoint> ghz_angles = {{pi / 2, pi / 4}, {pi / 2, pi / 3}, {pi / 2, pi / 6}};
  const std::vector<SphericalPoint> w_angles = {{pi / 4, pi / 8}, {pi / 6, pi / 4}, {pi / 3, pi / 6}};
  if (id == "fig7a") return {"GHZ, AD on the first qubit", "value", "t", {{"", three_qubit("ghz_ad", StateKind::ghz, ChannelKind::ad_first, ghz_angles), kWPQ}}, {}};
  if (id == "fig7b") return {"GHZ, GAD at T = 0, 1, 2", "value", "t", {{"", three_qubit("ghz_gad", StateKind::ghz, ChannelKind::gad_each, ghz_angles), kWPQ}}, {}};
  if (id == "fig7c") return {"W state, AD on the first qubit", "value", "t", {{"", three_qubit("w_ad", StateKind::w, ChannelKind::ad_first, w_angles), kWPQ}}, {}};
  if (id == "fig7d") return {"W state, GAD at T = 0, 1, 2", "value", "t", {{"", three_qubit("w_gad", StateKind::w, ChannelKind::gad_each, w_angles), kWPQ}}, {}};
  if (id == "fig8a") {
    FigureSpec f{"nonclassical volume, QND", "delta", "t", {}, {}};
    for (int T = 0; T <= 2; ++T) {
      Series s{"T" + std::to_string(T), qnd_single("qnd_T" + std::to_string(T), T), {}, true};
      s.cfg.angles.clear();
      f.series.push_back(std::move(s));
    }
    return f;
  }
  if (id == "fig8b") {
    FigureSpec f{"nonclassical volume, AD / GAD / SGAD", "delta", "t", {}, {}};
    const auto ts = linspace(0.0, 20.0, 101);
    f.series.push_back({"AD", sgad_single("ad_T0", 0.0, 0.0, std::nullopt, ts), {}, true});
    f.series.push_back({"GAD", sgad_single("gad_T3", 0.0, 3.0, std::nullopt, ts), {}, true});
    f.series.push_back({"SGAD", sgad_single("sgad_r1_T3", 1.0, 3.0, 0.5, ts), {}, true});
    for (auto& s : f.series) s.cfg.angles.clear();
    return f;
  }
  if (id == "fig8c") {
    FigureSpec f{"nonclassical volume, two atoms, vacuum bath", "delta", "t", {}, {}};
    for (double kr : {0.05, 2.0}) {
      Series s{"r" + format_number(kr), two_atom("vacuum_kr" + format_number(kr), kr, linspace(0, 10, 51), {}), {}, true};
      s.cfg.quad.n_theta = s.cfg.quad.n_phi = 24;
      f.series.push_back(std::move(s));
    }
    return f;
  }
  if (id == "fig8d") {
    Series s{"", dicke("dicke_volume"), {}, true};
    s.cfg.angles.clear();
    return {"nonclassical volume, four-atom Dicke model", "delta", "t", {s}, {}};
  }
  if (id == "fig9") return {"four-atom Dicke model", "value", "t", {{"", dicke("dicke"), kWPQF}}, {}};
  throw ConfigError("unknown figure id '" + id + "'");
}

bool external(const Series& s) { return s.cfg.channel.kind == ChannelKind::lindblad_two_atom; }

void apply_injection(FigureSpec& f, const std::vector<std::string>& files) {
  if (files.empty()) return;
  std::vector<Series*> ext;
  for (auto& s : f.series)
    if (external(s)) ext.push_back(&s);
  if (ext.empty()) throw ConfigError("--inject: this figure has no externally supplied series");
  if (ext.size() != files.size())
    throw ConfigError("--inject: this figure needs " + std::to_string(ext.size()) + " trajectory file(s)");
  for (std::size_t i = 0; i < ext.size(); ++i) {
    ext[i]->cfg.channel.kind = ChannelKind::trajectory;
    ext[i]->cfg.channel.trajectory_file = files[i];
    ext[i]->set = nullptr;
    ext[i]->sweep.clear();
  }
}

struct SeriesRun {
  std::vector<double> x;
  ScenarioRun run;
};

SeriesRun run_series(const Series& s, const RunOptions& opt) {
  SeriesRun out;
  if (!s.set) {
    out.run = run_scenario(s.cfg, opt.strict);
    for (const auto& st : out.run.states) out.x.push_back(st.t);
    return out;
  }
  std::vector<ScenarioRun> runs(s.sweep.size());
  parallel_for(s.sweep.size(), opt.threads, [&](std::size_t i) {
    ScenarioConfig c = s.cfg;
    s.set(c, s.sweep[i]);
    runs[i] = run_scenario(c, opt.strict);
  });
  out.x = s.sweep;
  out.run.mode = runs.front().mode;
  out.run.warnings = runs.front().warnings;
  for (auto& r : runs) out.run.states.push_back(std::move(r.states.front()));
  return out;
}

bool same_grid(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > 1e-12 * std::max(1.0, std::abs(a[i]))) return false;
  return true;
}

FigureResult spin1_figure(const std::string& id) {
  ScenarioConfig c = named("spin1", {0.0});
  c.state.kind = StateKind::spin1;
  const double a = 1.0 / std::sqrt(3.0);
  c.state.amplitudes = {a, a, a};
  FigureResult f;
  f.id = id;
  f.y_label = "value";
  const bool vs_theta = id == "fig10a";
  f.title = vs_theta ? "spin-1, phi = 2 pi / 3" : "spin-1, theta = pi / 4";
  f.table.x_name = vs_theta ? "theta" : "phi";
  f.table.x = vs_theta ? linspace(0.0, pi, 181) : linspace(0.0, 2 * pi, 181);
  f.series.push_back({"", vs_theta ? "theta in [0, pi], phi = 2 pi / 3" : "phi in [0, 2 pi], theta = pi / 4", c});
  const MultipoleCoeffs mc = decompose(initial_state(c.state));
  for (QDKind k : kWPQF) {
    f.table.names.push_back(to_string(k));
    std::vector<double> col;
    for (double x : f.table.x) {
      const SphericalPoint p = vs_theta ? SphericalPoint{x, 2 * pi / 3} : SphericalPoint{pi / 4, x};
      col.push_back(evaluate(k, mc, {p}));
    }
    f.table.columns.push_back(std::move(col));
  }
  f.table.status.assign(f.table.x.size(), "ok");
  return f;
}

}  // namespace

std::vector<std::string> figure_ids() {
  return {"fig1a", "fig1b", "fig1c", "fig2a", "fig2b", "fig2c", "fig3",  "fig4a", "fig4b", "fig4c", "fig4d",
          "fig5a", "fig5b", "fig5c", "fig5d", "fig6a", "fig6b", "fig6c", "fig7a", "fig7b", "fig7c", "fig7d",
          "fig8a", "fig8b", "fig8c", "fig8d", "fig9",  "fig10a", "fig10b"};
}

FigureResult build_figure(const std::string& id, const RunOptions& opt) {
  if (id == "fig10a" || id == "fig10b") {
    if (!opt.inject.empty()) throw ConfigError("--inject: this figure has no externally supplied series");
    return spin1_figure(id);
  }
  FigureSpec spec = spec_for(id);
  apply_injection(spec, opt.inject);
  if (opt.quad)
    for (auto& s : spec.series) {
      const std::size_t budget = s.cfg.quad.max_nodes;
      s.cfg.quad = *opt.quad;
      s.cfg.quad.max_nodes = budget;
    }

  FigureResult f;
  f.id = id;
  f.title = spec.title;
  f.y_label = spec.y_label;
  f.warnings = spec.warnings;
  f.table.x_name = spec.x_name;
  bool approx = false, injected = false;
  for (const auto& s : spec.series) {
    SeriesRun sr = run_series(s, opt);
    approx = approx || sr.run.mode == Provenance::approximation;
    injected = injected || sr.run.mode == Provenance::injected;
    for (const auto& w : sr.run.warnings)
      if (std::find(f.warnings.begin(), f.warnings.end(), w) == f.warnings.end()) f.warnings.push_back(w);
    if (f.table.x.empty()) {
      f.table.x = sr.x;
      f.table.status.assign(sr.x.size(), "ok");
    } else if (!same_grid(f.table.x, sr.x)) {
      throw ConfigError("series '" + s.label + "' does not share the figure's " + spec.x_name + " grid");
    }
    const std::string suffix = s.label.empty() ? "" : "_" + s.label;
    if (s.volume) {
      f.table.names.push_back("delta" + suffix);
      f.table.columns.push_back(volume_series(sr.run, s.cfg.quad, opt.threads));
    } else {
      auto cols = qd_series(sr.run, library_angles(s.cfg, s.cfg.angles), s.kinds, opt.threads);
      for (std::size_t k = 0; k < s.kinds.size(); ++k) {
        f.table.names.push_back(to_string(s.kinds[k]) + suffix);
        f.table.columns.push_back(std::move(cols[k]));
      }
    }
    for (std::size_t i = 0; i < sr.run.states.size(); ++i) {
      if (sr.run.states[i].valid) continue;
      std::string note = (s.label.empty() ? "" : s.label + ": ") + status_text(sr.run.states[i]);
      f.table.status[i] = f.table.status[i] == "ok" ? note : f.table.status[i] + "; " + note;
    }
    std::string sweep;
    if (s.set)
      sweep = s.sweep_name + " in [" + format_number(s.sweep.front()) + ", " + format_number(s.sweep.back()) + "], " +
              std::to_string(s.sweep.size()) + " points";
    f.series.push_back({s.label.empty() ? "main" : s.label, sweep, s.cfg});
  }
  f.mode = approx ? Provenance::approximation : (injected ? Provenance::injected : Provenance::exact);
  return f;
}

}  // namespace spinqd::cli
