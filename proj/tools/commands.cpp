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


#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "cli.hpp"
#include "spinqd/error.hpp"
#include "spinqd/multipole.hpp"

namespace spinqd::cli {

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex m;
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(m);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t k = 0; k < workers; ++k) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

QuadratureSpec parse_quad(const std::string& text) {
  QuadratureSpec q;
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    q.n_theta = std::stoi(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(text);
    q.n_phi = std::stoi(text.substr(x + 1), &used);
    if (used != text.size() - x - 1) throw std::invalid_argument(text);
  } catch (const std::logic_error&) {
    throw ConfigError("--quad: expected <n_theta>x<n_phi>, got '" + text + "'");
  }
  validate(q);
  return q;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string status_text(const EvolvedState& s) {
  if (s.valid) return "ok";
  std::string n = s.note.empty() ? "invalid" : s.note;
  for (char& ch : n)
    if (ch == ',' || ch == '\n' || ch == '"') ch = ';';
  return n;
}

std::vector<std::vector<double>> qd_series(const ScenarioRun& run, const std::vector<SphericalPoint>& library_points,
                                           const std::vector<QDKind>& kinds, int threads) {
  std::vector<std::vector<double>> out(kinds.size(), std::vector<double>(run.states.size(), std::nan("")));
  parallel_for(run.states.size(), threads, [&](std::size_t i) {
    const EvolvedState& s = run.states[i];
    if (!s.valid) return;
    MultipoleCoeffs c = decompose(s.rho);
    for (std::size_t k = 0; k < kinds.size(); ++k) out[k][i] = evaluate(kinds[k], c, library_points);
  });
  return out;
}

std::vector<double> volume_series(const ScenarioRun& run, const QuadratureSpec& q, int threads) {
  std::vector<double> out(run.states.size(), std::nan(""));
  parallel_for(run.states.size(), threads, [&](std::size_t i) {
    if (run.states[i].valid) out[i] = nonclassical_volume(decompose(run.states[i].rho), q);
  });
  return out;
}

namespace {

std::filesystem::path prepare_out(const RunOptions& opt) {
  std::filesystem::path dir(opt.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (!std::filesystem::is_directory(dir)) throw ConfigError("--out: cannot create directory " + opt.out_dir);
  return dir;
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + p.string());
  return out;
}

void write_comment_block(std::ostream& out, const std::string& key, const std::string& text) {
  out << "# " << key << ":\n";
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out << "#   " << line << "\n";
}

void write_run_header(std::ostream& out, const std::string& command, const ScenarioConfig& c, const ScenarioRun& run) {
  out << "# " << kCsvVersion << "\n";
  out << "# command: " << command << "\n";
  out << "# scenario: " << c.name << "\n";
  out << "# hash: " << scenario_hash(c) << "\n";
  out << "# provenance: " << to_string(run.mode) << "\n";
  for (const auto& w : run.warnings) out << "# warning: " << w << "\n";
  write_comment_block(out, "params", to_yaml(c));
}

ScenarioConfig load_with_overrides(const std::string& path, const RunOptions& opt) {
  ScenarioConfig c = load_scenario(path);
  if (opt.quad) {
    const std::size_t budget = c.quad.max_nodes;
    c.quad = *opt.quad;
    c.quad.max_nodes = budget;
  }
  return c;
}

void print_warnings(const std::vector<std::string>& w) {
  for (const auto& s : w) std::cerr << "warning: " << s << "\n";
}

}  // namespace

int cmd_eval(const std::string& scenario_path, const RunOptions& opt) {
  const ScenarioConfig c = load_with_overrides(scenario_path, opt);
  const std::size_t particles = scenario_spins(c).size();
  std::vector<std::vector<SphericalPoint>> points;
  if (!c.angles.empty()) {
    points.push_back(c.angles);
  } else {
    if (particles != 1) throw ConfigError("angles: required for multi-particle scenarios");
    for (const auto& p : sphere_rule(c.quad).nodes) points.push_back({p});
  }
  const ScenarioRun run = run_scenario(c, opt.strict);
  print_warnings(run.warnings);

  const std::size_t np = points.size();
  std::vector<std::vector<SphericalPoint>> lib;
  for (const auto& p : points) lib.push_back(library_angles(c, p));
  std::vector<std::array<double, 4>> values(run.states.size() * np);
  parallel_for(run.states.size(), opt.threads, [&](std::size_t i) {
    const EvolvedState& s = run.states[i];
    if (!s.valid) {
      for (std::size_t k = 0; k < np; ++k) values[i * np + k].fill(std::nan(""));
      return;
    }
    const MultipoleCoeffs mc = decompose(s.rho);
    for (std::size_t q = 0; q < kAllKinds.size(); ++q) {
      QDEvaluator ev(kAllKinds[q], mc);
      for (std::size_t k = 0; k < np; ++k) values[i * np + k][q] = ev(lib[k]);
    }
  });

  const auto path = prepare_out(opt) / (c.name + "_eval.csv");
  std::ofstream out = open_out(path);
  write_run_header(out, "eval", c, run);
  out << "t";
  for (std::size_t k = 1; k <= particles; ++k) out << ",theta" << k << ",phi" << k;
  out << ",W,P,Q,F,status\n";
  for (std::size_t i = 0; i < run.states.size(); ++i) {
    for (std::size_t k = 0; k < np; ++k) {
      out << format_number(run.states[i].t);
      for (const auto& p : points[k]) out << "," << format_number(p.theta) << "," << format_number(p.phi);
      for (double v : values[i * np + k]) out << "," << format_number(v);
      out << "," << status_text(run.states[i]) << "\n";
    }
  }
  std::cout << path.string() << "\n";
  return 0;
}

int cmd_volume(const std::string& scenario_path, const RunOptions& opt) {
  const ScenarioConfig c = load_with_overrides(scenario_path, opt);
  const ScenarioRun run = run_scenario(c, opt.strict);
  print_warnings(run.warnings);
  const std::vector<double> delta = volume_series(run, c.quad, opt.threads);

  const std::size_t spheres = scenario_spins(c).size();
  const double tuples = std::pow(static_cast<double>(c.quad.n_theta) * c.quad.n_phi, static_cast<double>(spheres));
  const bool scan = tuples <= static_cast<double>(c.quad.max_nodes);
  std::vector<nlohmann::json> scans(run.states.size());
  parallel_for(run.states.size(), opt.threads, [&](std::size_t i) {
    nlohmann::json row;
    row["t"] = run.states[i].t;
    row["status"] = status_text(run.states[i]);
    if (run.states[i].valid) {
      row["delta"] = delta[i];
      if (scan) {
        const MultipoleCoeffs mc = decompose(run.states[i].rho);
        row["W"] = to_json(negativity_scan(QDKind::W, mc, c.quad));
        row["P"] = to_json(negativity_scan(QDKind::P, mc, c.quad));
      }
    }
    scans[i] = std::move(row);
  });

  const auto dir = prepare_out(opt);
  const auto csv = dir / (c.name + "_volume.csv");
  std::ofstream out = open_out(csv);
  write_run_header(out, "volume", c, run);
  out << "t,delta,status\n";
  for (std::size_t i = 0; i < run.states.size(); ++i)
    out << format_number(run.states[i].t) << "," << format_number(delta[i]) << "," << status_text(run.states[i]) << "\n";

  nlohmann::json report;
  report["version"] = kCsvVersion;
  report["scenario"] = c.name;
  report["hash"] = scenario_hash(c);
  report["provenance"] = to_string(run.mode);
  report["warnings"] = run.warnings;
  report["negativity_scan"] = scan ? "grid" : "skipped: node budget exceeded";
  report["rows"] = scans;
  const auto json_path = dir / (c.name + "_volume.json");
  std::ofstream js = open_out(json_path);
  js << report.dump(2) << "\n";
  std::cout << csv.string() << "\n" << json_path.string() << "\n";
  return 0;
}

namespace {

std::string quote_gp(const std::string& s) {
  std::string r = "'";
  for (char ch : s) r += ch == '\'' ? std::string("''") : std::string(1, ch);
  return r + "'";
}

}  // namespace

int cmd_figure(const std::string& id, const RunOptions& opt) {
  const FigureResult f = build_figure(id, opt);
  print_warnings(f.warnings);
  const auto dir = prepare_out(opt);

  const auto csv = dir / (id + ".csv");
  {
    std::ofstream out = open_out(csv);
    out << "# " << kCsvVersion << "\n";
    out << "# command: figure " << id << "\n";
    out << "# title: " << f.title << "\n";
    out << "# provenance: " << to_string(f.mode) << "\n";
    for (const auto& w : f.warnings) out << "# warning: " << w << "\n";
    for (const auto& s : f.series) {
      out << "# series " << s.label << ": " << s.config.name << " hash " << scenario_hash(s.config);
      if (!s.sweep.empty()) out << " sweep " << s.sweep;
      out << "\n";
    }
    const Table& t = f.table;
    out << t.x_name;
    for (const auto& n : t.names) out << "," << n;
    out << ",status\n";
    for (std::size_t i = 0; i < t.x.size(); ++i) {
      out << format_number(t.x[i]);
      for (const auto& col : t.columns) out << "," << format_number(col[i]);
      out << "," << t.status[i] << "\n";
    }
  }

  const auto gp = dir / (id + ".gp");
  {
    std::ofstream out = open_out(gp);
    out << "# " << kCsvVersion << " " << id << " (" << to_string(f.mode) << ")\n";
    out << "set datafile separator ','\n";
    out << "set datafile missing 'nan'\n";
    out << "set key autotitle columnhead\n";
    out << "set title " << quote_gp(f.title) << "\n";
    out << "set xlabel " << quote_gp(f.table.x_name) << "\n";
    out << "set ylabel " << quote_gp(f.y_label) << "\n";
    out << "set terminal pngcairo size 800,600\n";
    out << "set output " << quote_gp(id + ".png") << "\n";
    out << "plot ";
    for (std::size_t k = 0; k < f.table.names.size(); ++k) {
      if (k) out << ", \\\n     ";
      out << quote_gp(id + ".csv") << " using 1:" << k + 2 << " with lines";
    }
    out << "\n";
  }

  std::ostringstream manifest;
  manifest << "figure: " << id << "\n";
  manifest << "title: \"" << f.title << "\"\n";
  manifest << "provenance: " << to_string(f.mode) << "\n";
  manifest << "strict: " << (opt.strict ? "true" : "false") << "\n";
  manifest << "outputs: [" << csv.filename().string() << ", " << gp.filename().string() << "]\n";
  manifest << "series:\n";
  for (const auto& s : f.series) {
    manifest << "  - label: \"" << s.label << "\"\n";
    if (!s.sweep.empty()) manifest << "    sweep: \"" << s.sweep << "\"\n";
    manifest << "    hash: \"" << scenario_hash(s.config) << "\"\n";
    manifest << "    scenario:\n";
    std::istringstream in(to_yaml(s.config));
    for (std::string line; std::getline(in, line);) manifest << "      " << line << "\n";
  }
  const auto mf = dir / (id + "_manifest.yaml");
  std::ofstream mo = open_out(mf);
  mo << manifest.str();
  std::cout << manifest.str();
  return 0;
}

}  // namespace spinqd::cli
