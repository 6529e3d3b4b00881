// Copyright 2026 The sze Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: expand, partition, plan, count, sweep-time and
// sweep-size. Exit codes: 0 success, 2 configuration error, 3 numeric limit
// (dense size or term cap), 1 anything else.

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "sze/errors.hpp"
#include "sze/experiments.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic Zassenhaus expansion toolkit"};
  app.set_help_flag("--help", "print this help and exit");
  app.set_version_flag("--version", std::string("sze ") + SZE_VERSION);
  app.set_config("--config", "", "key=value file overriding defaults")
      ->check(CLI::ExistingFile);
  app.require_subcommand(1);

  sze::ExperimentConfig config;
  std::vector<std::string> method_tokens;
  unsigned k = 0;
  unsigned p = 0;
  std::string mode = "channel";
  std::string out_path;

  app.add_option("--model", config.model, "built-in model")
      ->check(CLI::IsMember({"tfim"}));
  app.add_option("--n", config.n, "number of qubits")->check(CLI::Range(2, 64));
  app.add_option("--J", config.J, "ZZ coupling");
  app.add_option("--h", config.h, "transverse field");
  app.add_option("--hamiltonian", config.hamiltonian_path,
                 "layered Pauli text file instead of a built-in model")
      ->check(CLI::ExistingFile);
  app.add_option("--method", method_tokens,
                 "pf:<p>, minpf:<p> or sze:<k>:<p>; repeatable");
  app.add_option("--k", k, "direct order of an sze method");
  app.add_option("--p", p, "total order of an sze method");
  app.add_option("--order", config.order, "Zassenhaus order for expand");
  app.add_option("--t-values", config.t_values, "ascending times")
      ->delimiter(',');
  app.add_option("--n-values", config.n_values, "ascending system sizes")
      ->delimiter(',');
  app.add_option("--t", config.t, "fixed time for sweep-size");
  app.add_option("--r", config.r, "Trotter steps")->check(CLI::PositiveNumber);
  app.add_option("--mode", mode, "stochastic factor evaluation")
      ->check(CLI::IsMember({"channel", "sample"}));
  app.add_option("--seed", config.seed, "random seed");
  app.add_option("--samples", config.samples,
                 "trajectories averaged per point in sample mode")
      ->check(CLI::PositiveNumber);
  app.add_flag("--merge-adjacent", config.merge_counts,
               "count: fuse adjacent same-layer product formula exponentials");
  app.add_option("--out", out_path, "output file (default stdout)");

  const std::map<std::string, std::function<std::string(
                                  const sze::ExperimentConfig&)>>
      commands = {
          {"expand", sze::cmd_expand},
          {"partition", sze::cmd_partition},
          {"plan", sze::cmd_plan},
          {"count", sze::cmd_count},
          {"sweep-time", sze::cmd_sweep_time},
          {"sweep-size", sze::cmd_sweep_size},
      };
  const std::map<std::string, std::string> help = {
      {"expand", "print Zassenhaus exponents H_2..H_order"},
      {"partition", "commuting partition of H_order (or of the model)"},
      {"plan", "serialized per-step plan of one method"},
      {"count", "CSV of rotation and expected CNOT counts"},
      {"sweep-time", "CSV of trace distance against time"},
      {"sweep-size", "CSV of trace distance against system size"},
  };
  for (const auto& [name, text] : help) {
    app.add_subcommand(name, text)->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    config.mode = mode == "sample" ? sze::StochasticMode::kSampled
                                   : sze::StochasticMode::kExactChannel;
    for (const auto& token : method_tokens) {
      config.methods.push_back(sze::MethodSpec::parse(token));
    }
    if (k != 0 || p != 0) {
      config.methods.push_back(sze::MethodSpec::parse(
          "sze:" + std::to_string(k) + ":" + std::to_string(p)));
    }
    const std::string name = app.get_subcommands().front()->get_name();
    const std::string text = commands.at(name)(config);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out) throw sze::ConfigError("cannot write '" + out_path + "'");
      out << text;
    }
  } catch (const sze::NumericLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const sze::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
