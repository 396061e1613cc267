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


#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "spinqd/lindblad.hpp"
#include "spinqd/table.hpp"

namespace fs = std::filesystem;

namespace {

struct Csv {
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  int col(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
      if (columns[i] == name) return static_cast<int>(i);
    return -1;
  }
  std::vector<double> values(const std::string& name) const {
    const int c = col(name);
    EXPECT_GE(c, 0) << name;
    std::vector<double> v;
    for (const auto& r : rows) v.push_back(std::stod(r.at(c)));
    return v;
  }
  bool has_comment(const std::string& s) const {
    for (const auto& c : comments)
      if (c.find(s) != std::string::npos) return true;
    return false;
  }
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  for (std::string cell; std::getline(ss, cell, ',');) out.push_back(cell);
  return out;
}

Csv read(const fs::path& p) {
  Csv c;
  std::ifstream in(p);
  EXPECT_TRUE(in.good()) << p;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("#", 0) == 0) {
      c.comments.push_back(line);
    } else if (c.columns.empty()) {
      c.columns = split(line);
    } else if (!line.empty()) {
      c.rows.push_back(split(line));
    }
  }
  return c;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / "spinqd_test_cli" / name;
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

fs::path write(const fs::path& d, const std::string& name, const std::string& text) {
  std::ofstream(d / name) << text;
  return d / name;
}

int run(const std::string& args) {
  const std::string cmd = std::string(SPINQD_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const char* kQnd = R"(name: qnd
state: {kind: coherent, alpha: 1.5707963267948966, beta: 1.0471975511965976}
channel: {kind: qnd, bath: {gamma0: 0.1, omega_c: 100, temperature: 0}}
angles: [[1.0471975511965976, 0.7853981633974483]]
time: {start: 0, stop: 5, count: 11}
)";

}  // namespace

TEST(Cli, ExitCodes) {
  const fs::path d = dir("exit");
  EXPECT_EQ(run("--help"), 0);
  EXPECT_EQ(run("eval --scenario " + (d / "missing.yaml").string()), 2);
  EXPECT_EQ(run("eval --bogus"), 2);
  EXPECT_EQ(run("figure --figure fig99 --out " + d.string()), 2);
  const auto s = write(d, "s.yaml", kQnd);
  EXPECT_EQ(run("eval --scenario " + s.string() + " --quad 4x64 --out " + d.string()), 2);
  EXPECT_EQ(run("eval --scenario " + s.string() + " --quad 8by8 --out " + d.string()), 2);
  const auto bad = write(d, "bad.yaml", "name: x\nstate: {kind: coherent}\ncolour: red\n");
  EXPECT_EQ(run("eval --scenario " + bad.string() + " --out " + d.string()), 2);
  const auto multi = write(d, "multi.yaml", "name: m\nstate: {kind: singlet}\n");
  EXPECT_EQ(run("eval --scenario " + multi.string() + " --out " + d.string()), 2);
  const auto budget = write(d, "budget.yaml",
                            "name: b\nstate: {kind: mixed, qubits: 2}\nquad: {n_theta: 8, n_phi: 8, max_nodes: 10}\n");
  EXPECT_EQ(run("volume --scenario " + budget.string() + " --out " + d.string()), 3);
}

TEST(Cli, EvalIsDeterministicAcrossRunsAndThreads) {
  const fs::path d = dir("determinism");
  const auto s = write(d, "s.yaml", kQnd);
  ASSERT_EQ(run("eval --scenario " + s.string() + " --out " + (d / "a").string()), 0);
  ASSERT_EQ(run("eval --scenario " + s.string() + " --out " + (d / "b").string() + " --threads 3"), 0);
  const std::string a = slurp(d / "a" / "qnd_eval.csv");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, slurp(d / "b" / "qnd_eval.csv"));
  Csv c = read(d / "a" / "qnd_eval.csv");
  EXPECT_EQ(c.columns, (std::vector<std::string>{"t", "theta1", "phi1", "W", "P", "Q", "F", "status"}));
  EXPECT_EQ(c.rows.size(), 11u);
  EXPECT_TRUE(c.has_comment("# hash: "));
  EXPECT_TRUE(c.has_comment("# provenance: exact"));
}

TEST(Cli, EvalGridWithoutAngles) {
  const fs::path d = dir("grid");
  const auto s = write(d, "s.yaml", "name: g\nstate: {kind: coherent, j: 1}\nquad: {n_theta: 8, n_phi: 10}\n");
  ASSERT_EQ(run("eval --scenario " + s.string() + " --out " + d.string()), 0);
  EXPECT_EQ(read(d / "g_eval.csv").rows.size(), 80u);
}

TEST(Cli, IdentityScenarioGivesConstantRows) {
  const fs::path d = dir("identity");
  const auto s = write(d, "s.yaml",
                       "name: id\nstate: {kind: w}\nchannel: {kind: identity}\n"
                       "angles: [[0.3, 0.2], [1.1, 2.0], [2.5, -1.0]]\ntime: {start: 0, stop: 9, count: 10}\n");
  ASSERT_EQ(run("eval --scenario " + s.string() + " --out " + d.string()), 0);
  Csv c = read(d / "id_eval.csv");
  ASSERT_EQ(c.rows.size(), 10u);
  for (const char* k : {"W", "P", "Q", "F"})
    for (const auto& r : c.rows) EXPECT_EQ(r[c.col(k)], c.rows.front()[c.col(k)]) << k;
}

TEST(Cli, VolumeCsvAndReport) {
  const fs::path d = dir("volume");
  const auto mixed = write(d, "m.yaml", "name: mixed\nstate: {kind: mixed, qubits: 1}\ntime: [0, 1, 2]\n");
  ASSERT_EQ(run("volume --scenario " + mixed.string() + " --out " + d.string()), 0);
  for (double v : read(d / "mixed_volume.csv").values("delta")) EXPECT_NEAR(v, 0.0, 1e-8);
  const std::string report = slurp(d / "mixed_volume.json");
  EXPECT_NE(report.find("\"negative_fraction\""), std::string::npos);

  const auto s = write(d, "q.yaml", kQnd);
  ASSERT_EQ(run("volume --scenario " + s.string() + " --out " + d.string()), 0);
  auto delta = read(d / "qnd_volume.csv").values("delta");
  EXPECT_NEAR(delta.front(), 2.0 / std::sqrt(3.0) - 1.0, 1e-6);
  EXPECT_LT(delta.back(), delta.front());
}

TEST(Cli, DickeWandFDiffer) {
  const fs::path d = dir("dicke");
  const auto s = write(d, "s.yaml",
                       "name: dicke\nstate: {kind: coherent}\n"
                       "channel: {kind: dicke, dicke: {atoms: 4, nbar: 30, g: 0.1, gamma: 0.001}}\n"
                       "angles: [[1.0471975511965976, 1.5707963267948966]]\ntime: [0, 20, 40, 60]\n");
  ASSERT_EQ(run("eval --scenario " + s.string() + " --out " + d.string()), 0);
  Csv c = read(d / "dicke_eval.csv");
  auto w = c.values("W"), f = c.values("F");
  double diff = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) diff = std::max(diff, std::abs(w[i] - f[i]));
  EXPECT_GT(diff, 1e-3);
}

TEST(Cli, Fig1aSignPattern) {
  const fs::path d = dir("fig1a");
  ASSERT_EQ(run("figure --figure fig1a --out " + d.string()), 0);
  Csv c = read(d / "fig1a.csv");
  EXPECT_TRUE(c.has_comment("# provenance: exact"));
  EXPECT_EQ(c.columns, (std::vector<std::string>{"t", "W", "P", "Q", "status"}));
  auto has_both_signs = [](const std::vector<double>& v) {
    return *std::min_element(v.begin(), v.end()) < 0.0 && *std::max_element(v.begin(), v.end()) > 0.0;
  };
  EXPECT_TRUE(has_both_signs(c.values("W")));
  EXPECT_TRUE(has_both_signs(c.values("P")));
  for (double q : c.values("Q")) EXPECT_GE(q, 0.0);
  EXPECT_TRUE(fs::exists(d / "fig1a.gp"));
  EXPECT_NE(slurp(d / "fig1a.gp").find("set datafile separator ','"), std::string::npos);
  EXPECT_NE(slurp(d / "fig1a_manifest.yaml").find("kind: qnd"), std::string::npos);
}

TEST(Cli, Fig7aNegativeThroughout) {
  const fs::path d = dir("fig7a");
  ASSERT_EQ(run("figure --figure fig7a --out " + d.string()), 0);
  Csv c = read(d / "fig7a.csv");
  for (double w : c.values("W")) EXPECT_LT(w, 0.0);
  for (double p : c.values("P")) EXPECT_LT(p, 0.0);
}

TEST(Cli, Fig10aSpin1) {
  const fs::path d = dir("fig10a");
  ASSERT_EQ(run("figure --figure fig10a --out " + d.string()), 0);
  Csv c = read(d / "fig10a.csv");
  EXPECT_EQ(c.columns.front(), "theta");
  auto w = c.values("W"), f = c.values("F");
  double diff = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) diff = std::max(diff, std::abs(w[i] - f[i]));
  EXPECT_GT(diff, 0.01);
}

TEST(Cli, ExternalFiguresNeedInjectionInStrictMode) {
  const fs::path d = dir("strict");
  EXPECT_EQ(run("figure --figure fig4d --strict --out " + d.string()), 2);
  ASSERT_EQ(run("figure --figure fig4d --out " + d.string()), 0);
  Csv c = read(d / "fig4d.csv");
  EXPECT_TRUE(c.has_comment("# provenance: approximation"));
  EXPECT_TRUE(c.has_comment("# warning: "));
}

TEST(Cli, InjectedTrajectory) {
  const fs::path d = dir("inject");
  using namespace spinqd;
  TwoAtomModel m = two_atom_collective_model(0.05, 0.05);
  CVector v = CVector::Zero(4);
  v(1) = 1.0;
  Trajectory tr;
  for (int i = 0; i <= 20; ++i) tr.t.push_back(0.25 * i);
  tr.states = integrate_lindblad(m.h, m.terms, pure_state({kHalf, kHalf}, v), tr.t);
  write_trajectory((d / "traj.csv").string(), tr);

  const std::string traj = (d / "traj.csv").string();
  EXPECT_EQ(run("figure --figure fig4d --strict --inject " + traj + " --out " + d.string()), 0);
  Csv c = read(d / "fig4d.csv");
  EXPECT_TRUE(c.has_comment("# provenance: injected"));
  EXPECT_EQ(c.rows.size(), 21u);
  EXPECT_EQ(run("figure --figure fig4a --inject " + traj + " --out " + d.string()), 2);
  EXPECT_EQ(run("figure --figure fig1a --inject " + traj + " --out " + d.string()), 2);
}
