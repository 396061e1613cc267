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


#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "spinqd/error.hpp"
#include "spinqd/fixtures.hpp"
#include "spinqd/scenario.hpp"
#include "spinqd/table.hpp"

using namespace spinqd;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path d = fs::temp_directory_path() / "spinqd_test_scenario";
  fs::create_directories(d);
  return d / name;
}

void write(const fs::path& p, const std::string& s) { std::ofstream(p) << s; }

const char* kQnd = R"(
name: qnd
state: {kind: coherent, j: 0.5, alpha: 1.5707963267948966, beta: 1.0471975511965976}
channel:
  kind: qnd
  bath: {gamma0: 0.1, omega_c: 100, temperature: 1}
angles: [[1.0471975511965976, 0.7853981633974483]]
time: {start: 0, stop: 2, count: 5}
)";

}  // namespace

TEST(Scenario, ParsesAndRuns) {
  ScenarioConfig c = parse_scenario(kQnd);
  EXPECT_EQ(c.name, "qnd");
  EXPECT_EQ(c.channel.kind, ChannelKind::qnd);
  EXPECT_EQ(c.times.size(), 5u);
  EXPECT_DOUBLE_EQ(c.times[4], 2.0);
  ScenarioRun r = run_scenario(c);
  EXPECT_EQ(r.mode, Provenance::exact);
  ASSERT_EQ(r.states.size(), 5u);
  EXPECT_NEAR(r.states[4].rho.data(0, 0).real(), 0.5, 1e-15);
  EXPECT_LT(std::abs(r.states[4].rho.data(0, 1)), 0.5);
}

TEST(Scenario, HashIsStableAndSensitive) {
  ScenarioConfig a = parse_scenario(kQnd), b = parse_scenario(kQnd);
  EXPECT_EQ(scenario_hash(a), scenario_hash(b));
  EXPECT_EQ(scenario_hash(a).size(), 16u);
  b.channel.bath.temperature = 2.0;
  EXPECT_NE(scenario_hash(a), scenario_hash(b));
  ScenarioConfig again = parse_scenario(to_yaml(a));
  EXPECT_EQ(scenario_hash(again), scenario_hash(a));
}

TEST(Scenario, ConfigErrors) {
  EXPECT_THROW(parse_scenario("state: {kind: coherent}\nbogus: 1\n"), ConfigError);
  EXPECT_THROW(parse_scenario("state: {kind: cat}\n"), ConfigError);
  EXPECT_THROW(parse_scenario("state: {kind: coherent, j: 0.3}\n"), ConfigError);
  EXPECT_THROW(parse_scenario("state: {kind: coherent}\nchannel: {kind: sgad, p: 1.5}\n"), ConfigError);
  EXPECT_THROW(parse_scenario("state: {kind: coherent}\ntime: {start: 1, stop: 0, count: 3}\n"), ConfigError);
  EXPECT_THROW(parse_scenario("state: {kind: singlet}\nangles: [[0, 0]]\n"), ConfigError);
  EXPECT_THROW(parse_scenario("state: {kind: coherent}\nquad: {n_theta: 4}\n"), ConfigError);
  EXPECT_THROW(parse_scenario("state: [\n"), ConfigError);
  EXPECT_THROW(parse_scenario("state: {kind: ghz}\nchannel: {kind: gad_each, temperatures: [1]}\n"), ConfigError);
  EXPECT_THROW(load_scenario("/nonexistent/x.yaml"), ConfigError);
}

TEST(Scenario, StrictModeNeedsInjection) {
  ScenarioConfig c = parse_scenario(R"(
state: {kind: uniform, qubits: 2}
channel: {kind: two_qubit_qnd, bath: {gamma0: 0.01, temperature: 2, r: 0.05}}
time: [0.5, 1.0]
)");
  EXPECT_THROW(run_scenario(c, true), ConfigError);
  ScenarioRun r = run_scenario(c, false);
  EXPECT_EQ(r.mode, Provenance::approximation);
  EXPECT_FALSE(r.warnings.empty());

  fs::path g = scratch("gsq.csv");
  write(g, "t,gamma\n0,0\n2,0.5\n");
  c.channel.gamma_sq_file = g.string();
  ScenarioRun inj = run_scenario(c, true);
  EXPECT_EQ(inj.mode, Provenance::injected);
  EXPECT_NEAR(std::abs(inj.states[1].rho.data(0, 3)), 0.25 * std::exp(-4 * 0.25), 1e-15);
}

TEST(Scenario, SgadInvalidRowsAreFlagged) {
  ScenarioConfig c = parse_scenario(R"(
state: {kind: coherent, alpha: 1.0}
channel: {kind: sgad, p: 0.5, bath: {gamma0: 0.05, temperature: 3, r: 1}}
time: [0.5, 6.0]
)");
  ScenarioRun r = run_scenario(c);
  ASSERT_EQ(r.states.size(), 2u);
  EXPECT_FALSE(r.states[0].valid);
  EXPECT_FALSE(r.states[0].note.empty());
  EXPECT_TRUE(r.states[1].valid);
}

TEST(Scenario, InitialStates) {
  StateSpec s;
  s.kind = StateKind::uniform;
  s.qubits = 2;
  EXPECT_NEAR(initial_state(s).data(0, 3).real(), 0.25, 1e-15);
  s.kind = StateKind::basis;
  s.index = 1;
  EXPECT_EQ(initial_state(s).data(1, 1), cplx(1.0));
  s.kind = StateKind::ghz;
  EXPECT_EQ(initial_state(s).size(), 8);
}

TEST(Scenario, PrintedAzimuthMirrors) {
  ScenarioConfig c = parse_scenario(std::string(kQnd) + "azimuth: printed\n");
  auto pts = library_angles(c, c.angles);
  EXPECT_DOUBLE_EQ(pts[0].phi, -c.angles[0].phi);
}

TEST(Table, CsvAndInterpolation) {
  fs::path p = scratch("t.csv");
  write(p, "# comment\nt,y\n0,1\n2,5\n");
  CsvTable t = read_csv(p.string());
  EXPECT_EQ(t.column("y"), 1);
  EXPECT_EQ(t.column("z"), -1);
  LinearTable l({0.0, 2.0}, {1.0, 5.0});
  EXPECT_DOUBLE_EQ(l(0.5), 2.0);
  EXPECT_THROW(l(3.0), DomainError);
  write(p, "t,y\n0,abc\n");
  EXPECT_THROW(read_csv(p.string()), ConfigError);
}

TEST(Table, TrajectoryRoundTrip) {
  Trajectory tr;
  tr.t = {0.0, 0.25};
  tr.states = {singlet_state(), maximally_mixed({kHalf, kHalf})};
  fs::path p = scratch("traj.csv");
  write_trajectory(p.string(), tr);
  Trajectory back = read_trajectory(p.string(), {kHalf, kHalf});
  ASSERT_EQ(back.t.size(), 2u);
  EXPECT_EQ(back.t[1], 0.25);
  EXPECT_EQ((back.states[0].data - tr.states[0].data).cwiseAbs().maxCoeff(), 0.0);

  ScenarioConfig c = parse_scenario("state: {kind: singlet}\nchannel: {kind: trajectory, trajectory_file: " + p.string() + "}\n");
  ScenarioRun r = run_scenario(c, true);
  EXPECT_EQ(r.mode, Provenance::injected);
  EXPECT_EQ(r.states.size(), 2u);
}
