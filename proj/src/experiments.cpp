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

#include "sze/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "sze/errors.hpp"
#include "sze/partition.hpp"

#ifndef SZE_VERSION
#define SZE_VERSION "unknown"
#endif

namespace sze {

namespace {

constexpr std::size_t kFitPoints = 5;

std::string num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

unsigned parse_unsigned(std::string_view s, std::string_view token) {
  unsigned v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || s.empty()) {
    throw ConfigError("bad method token '" + std::string(token) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string header(const ExperimentConfig& config, std::string_view command,
                   const LayeredHamiltonian* model) {
  std::ostringstream out;
  out << "# tool: sze " << SZE_VERSION << "\n";
  out << "# command: " << command << "\n";
  if (!config.hamiltonian_path.empty()) {
    out << "# model: file " << config.hamiltonian_path << "\n";
  } else {
    out << "# model: " << config.model << " open chain\n";
    out << "# J: " << num(config.J) << "\n";
    out << "# h: " << num(config.h) << "\n";
  }
  if (model != nullptr) {
    out << "# n_qubits: " << model->n_qubits() << "\n";
    out << "# layers:";
    for (const auto& name : model->names) out << ' ' << name;
    out << "\n";
  }
  out << "# cnot_convention: " << kCnotConvention << "\n";
  out << "# mode: "
      << (config.mode == StochasticMode::kExactChannel ? "channel" : "sample")
      << "\n";
  out << "# seed: " << config.seed << "\n";
  return out.str();
}

std::vector<MethodSpec> methods_or(const ExperimentConfig& config,
                                   std::vector<std::string_view> defaults) {
  if (!config.methods.empty()) return config.methods;
  std::vector<MethodSpec> out;
  for (auto token : defaults) out.push_back(MethodSpec::parse(token));
  return out;
}

template <typename T>
void check_ascending(const std::vector<T>& v, std::string_view what) {
  if (v.size() < 2) {
    throw ConfigError(std::string(what) + " needs at least two values");
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0)) {
      throw ConfigError(std::string(what) + " values must be positive");
    }
    if (i > 0 && !(v[i] > v[i - 1])) {
      throw ConfigError(std::string(what) + " values must be ascending");
    }
  }
}

void write_fit(std::ostringstream& out, const std::string& method,
               std::vector<std::pair<double, double>> points) {
  std::erase_if(points, [](const auto& p) { return !(p.second > 0.0); });
  if (points.size() < 2) {
    out << method << ",nan,nan,nan," << points.size() << "\n";
    return;
  }
  const FitResult fit = fit_powerlaw(points);
  out << method << ',' << num(fit.slope) << ',' << num(fit.intercept) << ','
      << num(fit.residual) << ',' << fit.points_used << "\n";
}

}  // namespace

std::string MethodSpec::token() const {
  switch (kind) {
    case PlanKind::kPf:
      return "pf:" + std::to_string(p);
    case PlanKind::kMinimalPf:
      return "minpf:" + std::to_string(p);
    case PlanKind::kSze:
      return "sze:" + std::to_string(k) + ":" + std::to_string(p);
  }
  return "?";
}

MethodSpec MethodSpec::parse(std::string_view token) {
  const auto parts = split(token, ':');
  MethodSpec m;
  if (parts[0] == "pf" && parts.size() == 2) {
    m.kind = PlanKind::kPf;
    m.p = parse_unsigned(parts[1], token);
    if (!(m.p == 1 || m.p == 2 || m.p == 4 || m.p == 6 || m.p == 8 ||
          m.p == 10)) {
      throw ConfigError("pf order must be 1, 2, 4, 6, 8 or 10 in '" +
                        std::string(token) + "'");
    }
  } else if (parts[0] == "minpf" && parts.size() == 2) {
    m.kind = PlanKind::kMinimalPf;
    m.p = parse_unsigned(parts[1], token);
    if (m.p != 8 && m.p != 10) {
      throw ConfigError("minpf order must be 8 or 10 in '" +
                        std::string(token) + "'");
    }
  } else if (parts[0] == "sze" && parts.size() == 3) {
    m.kind = PlanKind::kSze;
    m.k = parse_unsigned(parts[1], token);
    m.p = parse_unsigned(parts[2], token);
    if (m.k < 1 || m.p < m.k || m.p > 2 * m.k + 1) {
      throw ConfigError("sze orders need 1 <= k <= p <= 2k+1 in '" +
                        std::string(token) + "'");
    }
  } else {
    throw ConfigError("bad method token '" + std::string(token) +
                      "', expected pf:<p>, minpf:<p> or sze:<k>:<p>");
  }
  return m;
}

LayeredHamiltonian load_model(const ExperimentConfig& config,
                              unsigned n_override) {
  if (!config.hamiltonian_path.empty()) {
    if (n_override != 0) {
      throw ConfigError("system size sweeps need a built-in model");
    }
    return from_file(config.hamiltonian_path);
  }
  if (config.model != "tfim") {
    throw ConfigError("unknown model '" + config.model + "'");
  }
  return tfim(n_override != 0 ? n_override : config.n, config.J, config.h);
}

std::vector<double> default_t_values() {
  std::vector<double> out;
  const double lo = std::log10(0.01);
  const double hi = std::log10(0.3);
  for (int i = 0; i < 8; ++i) {
    out.push_back(std::pow(10.0, lo + (hi - lo) * i / 7.0));
  }
  return out;
}

ExpansionPlan build_method_plan(const MethodSpec& method,
                                const LayeredHamiltonian& model) {
  switch (method.kind) {
    case PlanKind::kPf:
      return build_pf(model.layers, method.p, model.names);
    case PlanKind::kSze:
      return build_sze(model.layers, method.k, method.p, model.names);
    case PlanKind::kMinimalPf:
      break;
  }
  throw ConfigError("minimal product formulas are counted only and cannot "
                    "be executed");
}

double plan_error(const ExpansionPlan& plan, const ExactPropagator& exact,
                  double t, unsigned r, StochasticMode mode,
                  std::uint64_t seed, unsigned samples) {
  const DenseState initial =
      DenseState::plus_state(plan.n_qubits, StateKind::kDensityMatrix);
  const DenseState reference = exact.evolve(initial, t);
  if (mode == StochasticMode::kExactChannel) {
    return trace_distance(run_plan(plan, t, r, initial, mode), reference);
  }
  if (samples < 1) throw ConfigError("samples must be at least 1");
  DenseMatrix mean = DenseMatrix::Zero(initial.dimension(),
                                       initial.dimension());
  for (unsigned s = 0; s < samples; ++s) {
    Rng rng = Rng::stream(seed, s);
    mean += run_plan(plan, t, r, initial, mode, &rng).density();
  }
  mean /= static_cast<double>(samples);
  return trace_distance_dense(mean, reference.density());
}

std::string cmd_expand(const ExperimentConfig& config) {
  const LayeredHamiltonian model = load_model(config);
  if (config.order < 2) throw ConfigError("expand needs order >= 2");
  std::ostringstream out;
  out << header(config, "expand", &model);
  out << "n_qubits: " << model.n_qubits() << "\n";
  for (const auto& [j, h] : zassenhaus_hamiltonians(model.layers,
                                                    config.order)) {
    const std::size_t parts = h.empty() ? 0 : partition(h).parts.size();
    out << "# H_" << j << ": " << h.size() << " terms, " << parts
        << " commuting parts\n";
    out << "order: " << j << "\n" << format_terms(h, "  ");
  }
  return out.str();
}

std::string cmd_partition(const ExperimentConfig& config) {
  const LayeredHamiltonian model = load_model(config);
  PauliSum target = model.total;
  std::string name = "H";
  if (config.order >= 2) {
    target = zassenhaus_hamiltonians(model.layers, config.order)
                 .at(config.order);
    name = "H_" + std::to_string(config.order);
  }
  std::ostringstream out;
  out << header(config, "partition", &model);
  out << "n_qubits: " << model.n_qubits() << "\n";
  if (target.empty()) {
    out << "# " << name << " is empty\n";
    return out.str();
  }
  const CommutingPartition part = partition(target);
  if (!verify_partition(part)) {
    throw ConsistencyError("partition failed verification");
  }
  out << "# " << name << ": " << target.size() << " terms, "
      << part.parts.size() << " commuting parts\n";
  for (std::size_t i = 0; i < part.parts.size(); ++i) {
    out << "part: " << name << ".part" << i << "\n"
        << format_terms(part.parts[i], "  ");
  }
  return out.str();
}

std::string cmd_plan(const ExperimentConfig& config) {
  if (config.methods.size() != 1) {
    throw ConfigError("plan needs exactly one method");
  }
  const LayeredHamiltonian model = load_model(config);
  return header(config, "plan", &model) +
         serialize_plan(build_method_plan(config.methods.front(), model));
}

std::string cmd_count(const ExperimentConfig& config) {
  const LayeredHamiltonian model = load_model(config);
  const auto methods = methods_or(
      config, {"pf:2", "pf:4", "pf:6", "pf:8", "pf:10", "minpf:8",
               "minpf:10", "sze:1:3", "sze:2:5", "sze:3:7", "sze:4:9",
               "sze:5:11"});
  std::ostringstream out;
  out << header(config, "count", &model);
  out << "# product formula merging: "
      << (config.merge_counts ? "adjacent same-layer exponentials fused"
                              : "none")
      << "\n";
  out << "method,order,rotations,cnots_expected\n";
  for (const MethodSpec& m : methods) {
    GateCount g;
    if (m.kind == PlanKind::kMinimalPf) {
      g = minimal_pf_count(model.layers, m.p, config.merge_counts);
    } else if (m.kind == PlanKind::kPf) {
      g = count_gates(
          build_pf(model.layers, m.p, model.names, config.merge_counts));
    } else {
      g = count_gates(build_method_plan(m, model));
    }
    out << m.token() << ',' << m.p << ',' << g.rotations << ','
        << num(g.total_expected) << "\n";
  }
  return out.str();
}

std::string cmd_sweep_time(const ExperimentConfig& config) {
  const LayeredHamiltonian model = load_model(config);
  const auto methods = methods_or(
      config, {"sze:1:2", "sze:1:3", "sze:2:4", "sze:3:6", "pf:2", "pf:4"});
  const std::vector<double> ts =
      config.t_values.empty() ? default_t_values() : config.t_values;
  check_ascending(ts, "t");
  if (config.r < 1) throw ConfigError("r must be at least 1");
  const ExactPropagator exact(model.total);

  std::ostringstream rows;
  std::ostringstream fits;
  for (const MethodSpec& m : methods) {
    const ExpansionPlan plan = build_method_plan(m, model);
    std::vector<std::pair<double, double>> points;
    for (double t : ts) {
      const double d =
          plan_error(plan, exact, t, config.r, config.mode, config.seed,
                     config.samples);
      rows << m.token() << ',' << num(t) << ',' << config.r << ',' << num(d)
           << "\n";
      if (points.size() < kFitPoints) points.emplace_back(t, d);
    }
    write_fit(fits, m.token(), std::move(points));
  }
  std::ostringstream out;
  out << header(config, "sweep-time", &model);
  out << "# initial_state: |+>^n\n";
  out << "# fit: power law over the " << kFitPoints << " smallest t\n";
  out << "method,t,r,trace_distance\n" << rows.str() << "\n";
  out << "method,slope,intercept,residual,points_used\n" << fits.str();
  return out.str();
}

std::string cmd_sweep_size(const ExperimentConfig& config) {
  const auto methods = methods_or(config, {"sze:1:2", "sze:2:4", "pf:2"});
  std::vector<unsigned> ns = config.n_values;
  if (ns.empty()) ns = {4, 6, 8, 10};
  check_ascending(ns, "n");
  for (unsigned n : ns) check_dense_limit(n);
  if (!(config.t > 0.0)) throw ConfigError("t must be positive");
  if (config.r < 1) throw ConfigError("r must be at least 1");

  std::vector<std::vector<double>> errors(methods.size());
  for (unsigned n : ns) {
    const LayeredHamiltonian model = load_model(config, n);
    const ExactPropagator exact(model.total);
    for (std::size_t i = 0; i < methods.size(); ++i) {
      errors[i].push_back(plan_error(build_method_plan(methods[i], model),
                                     exact, config.t, config.r, config.mode,
                                     config.seed, config.samples));
    }
  }
  std::ostringstream out;
  out << header(config, "sweep-size", nullptr);
  out << "# initial_state: |+>^n\n";
  out << "# t: " << num(config.t) << "\n";
  out << "# r: " << config.r << "\n";
  out << "# fit: power law over the " << kFitPoints << " largest n\n";
  out << "method,n,trace_distance\n";
  for (std::size_t i = 0; i < methods.size(); ++i) {
    for (std::size_t j = 0; j < ns.size(); ++j) {
      out << methods[i].token() << ',' << ns[j] << ',' << num(errors[i][j])
          << "\n";
    }
  }
  out << "\nmethod,slope,intercept,residual,points_used\n";
  std::ostringstream fits;
  for (std::size_t i = 0; i < methods.size(); ++i) {
    std::vector<std::pair<double, double>> points;
    const std::size_t first =
        ns.size() > kFitPoints ? ns.size() - kFitPoints : 0;
    for (std::size_t j = first; j < ns.size(); ++j) {
      points.emplace_back(ns[j], errors[i][j]);
    }
    write_fit(fits, methods[i].token(), std::move(points));
  }
  out << fits.str();
  return out.str();
}

}  // namespace sze
