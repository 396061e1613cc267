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


#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"
#include "spinqd/error.hpp"

namespace {

struct Flags {
  std::string scenario;
  std::string figure;
  std::string quad;
  bool list = false;
  spinqd::cli::RunOptions run;
};

void common_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--out", f.run.out_dir, "output directory")->capture_default_str();
  cmd->add_option("--quad", f.quad, "quadrature nodes per sphere, <n_theta>x<n_phi>");
  cmd->add_flag("--strict", f.run.strict, "refuse approximations for externally defined dynamics");
  cmd->add_option("--threads", f.run.threads, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinqd: quasiprobability distributions of spin states under open-system noise"};
  app.require_subcommand(1);
  Flags f;

  auto* eval = app.add_subcommand("eval", "evaluate W, P, Q, F for a scenario");
  eval->add_option("--scenario", f.scenario, "scenario YAML file")->required();
  common_flags(eval, f);

  auto* volume = app.add_subcommand("volume", "nonclassical volume and negativity report for a scenario");
  volume->add_option("--scenario", f.scenario, "scenario YAML file")->required();
  common_flags(volume, f);

  auto* figure = app.add_subcommand("figure", "write CSV, gnuplot script and manifest for a figure id");
  auto* id_opt = figure->add_option("--figure", f.figure, "figure id (fig1a ... fig10b)");
  figure->add_flag("--list", f.list, "print the known figure ids");
  figure->add_option("--inject", f.run.inject, "trajectory CSV per externally supplied series (repeatable)");
  common_flags(figure, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!f.quad.empty()) f.run.quad = spinqd::cli::parse_quad(f.quad);
    if (*eval) return spinqd::cli::cmd_eval(f.scenario, f.run);
    if (*volume) return spinqd::cli::cmd_volume(f.scenario, f.run);
    if (f.list) {
      for (const auto& id : spinqd::cli::figure_ids()) std::cout << id << "\n";
      return 0;
    }
    if (id_opt->count() == 0) throw spinqd::ConfigError("figure: --figure <id> or --list required");
    return spinqd::cli::cmd_figure(f.figure, f.run);
  } catch (const spinqd::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const spinqd::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const spinqd::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << " (residual " << e.residual() << ")\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
