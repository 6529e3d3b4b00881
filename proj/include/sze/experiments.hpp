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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sze/models.hpp"
#include "sze/planner.hpp"
#include "sze/simulator.hpp"

namespace sze {

/// A method token: "pf:<p>", "minpf:<p>" or "sze:<k>:<p>".
struct MethodSpec {
  PlanKind kind = PlanKind::kSze;
  unsigned k = 0;
  unsigned p = 0;

  std::string token() const;
  /// Throws ConfigError for malformed tokens or invalid orders.
  static MethodSpec parse(std::string_view token);
};

struct ExperimentConfig {
  std::string model = "tfim";
  unsigned n = 10;
  double J = 1.0;
  double h = 1.0;
  /// When set, the model is read from this file instead.
  std::string hamiltonian_path;

  std::vector<MethodSpec> methods;
  unsigned order = 2;

  std::vector<double> t_values;
  std::vector<unsigned> n_values;
  double t = 0.03;
  unsigned r = 1;

  StochasticMode mode = StochasticMode::kExactChannel;
  std::uint64_t seed = 0;
  /// Trajectories averaged per point in sampled mode.
  unsigned samples = 1;
  /// Gate counts fuse adjacent same-layer product formula exponentials.
  bool merge_counts = false;
};

/// The configured model; `n_override` replaces the chain length of a
/// built-in model and is rejected for file models.
LayeredHamiltonian load_model(const ExperimentConfig& config,
                              unsigned n_override = 0);

/// 8 log-spaced values from 0.01 to 0.3.
std::vector<double> default_t_values();

/// H_j for j = 2..order in Pauli text form with term and part counts.
std::string cmd_expand(const ExperimentConfig& config);
/// Commuting partition of H_order, or of the model itself for order 1.
std::string cmd_partition(const ExperimentConfig& config);
/// Serialized plan of the single configured method.
std::string cmd_plan(const ExperimentConfig& config);
/// CSV: method,order,rotations,cnots_expected. Product formulas are
/// counted unmerged unless `merge_counts` is set.
std::string cmd_count(const ExperimentConfig& config);
/// CSV method,t,r,trace_distance for |+>^n, then a fit table over the five
/// smallest t per method.
std::string cmd_sweep_time(const ExperimentConfig& config);
/// CSV method,n,trace_distance at fixed t, then a fit table over the five
/// largest n per method.
std::string cmd_sweep_size(const ExperimentConfig& config);

/// Trace distance after evolving |+>^n for time t with r steps of `plan`,
/// against the exact propagator.
double plan_error(const ExpansionPlan& plan, const ExactPropagator& exact,
                  double t, unsigned r, StochasticMode mode,
                  std::uint64_t seed, unsigned samples);

/// Builds the executable plan of a method. Throws ConfigError for minpf.
ExpansionPlan build_method_plan(const MethodSpec& method,
                                const LayeredHamiltonian& model);

}  // namespace sze
