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

#include "sze/planner.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "sze/errors.hpp"
#include "sze/partition.hpp"
#include "sze/series.hpp"
#include "sze/stochastic.hpp"

namespace sze {

namespace {

const Complex kI(0.0, 1.0);

std::vector<std::string> default_names(const std::vector<PauliSum>& layers,
                                       const std::vector<std::string>& names) {
  if (!names.empty()) {
    if (names.size() != layers.size()) {
      throw ConfigError("layer name count does not match layer count");
    }
    return names;
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    out.push_back("L" + std::to_string(i));
  }
  return out;
}

void check_layers(const std::vector<PauliSum>& layers) {
  if (layers.empty()) throw ConfigError("at least one layer is required");
  for (std::size_t i = 0; i < layers.size(); ++i) {
    check_same_qubits(layers.front().n_qubits(), layers[i].n_qubits());
    if (!layers[i].is_hermitian()) {
      throw ConfigError("layer " + std::to_string(i) + " is not Hermitian");
    }
    if (const auto pair = find_anticommuting_pair(layers[i])) {
      throw ConfigError("layer " + std::to_string(i) +
                        " is not internally commuting: " +
                        pair->first.label() + " and " + pair->second.label() +
                        " anticommute");
    }
  }
}

// Real part of i * G for an anti-Hermitian exponent G.
PauliSum hermitian_from_exponent(const PauliSum& g) {
  const PauliSum h = g * kI;
  if (!h.is_hermitian(1e-9)) {
    throw ConsistencyError("Zassenhaus exponent is not anti-Hermitian");
  }
  PauliSum::TermMap m;
  for (const auto& [key, c] : h.terms()) m.emplace(key, Complex(c.real()));
  return PauliSum(h.n_qubits(), std::move(m));
}

std::string exponent_name(const std::vector<unsigned>& path) {
  if (path.size() == 1) return "H_" + std::to_string(path[0]);
  std::string s = "H_{";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(path[i]);
  }
  return s + "}";
}

class SzeBuilder {
 public:
  SzeBuilder(unsigned n, unsigned k, unsigned p) : n_(n), k_(k), p_(p) {}

  void add_direct(unsigned order, PauliSum h, std::string provenance) {
    direct_.push_back({order, std::move(h), FactorMode::kDirect,
                       std::move(provenance), 1.0});
  }

  // Exponents of exp(-i s sum_i hams_i) with s = t^base_order.
  void expand(const std::vector<PauliSum>& hams, unsigned base_order,
              const std::vector<unsigned>& path) {
    const unsigned max_nested = p_ / base_order;
    if (hams.size() < 2 || max_nested < 2) return;
    for (const auto& [l, h] : zassenhaus_hamiltonians(hams, max_nested)) {
      if (h.empty()) continue;
      std::vector<unsigned> sub = path;
      sub.push_back(l);
      const unsigned order = base_order * l;
      if (order <= k_) {
        add_nested_direct(h, order, sub);
      } else {
        auto it = stochastic_.try_emplace(
            order, PauliSum(n_), std::vector<std::string>{}).first;
        it->second.first = it->second.first + h;
        it->second.second.push_back(exponent_name(sub));
      }
    }
  }

  std::vector<Factor> finish() {
    std::stable_sort(direct_.begin(), direct_.end(),
                     [](const Factor& a, const Factor& b) {
                       return a.time_order < b.time_order;
                     });
    std::vector<Factor> out = std::move(direct_);
    for (auto& [order, entry] : stochastic_) {
      if (entry.first.empty()) continue;
      std::string prov = "stochastic[";
      for (std::size_t i = 0; i < entry.second.size(); ++i) {
        if (i) prov += '+';
        prov += entry.second[i];
      }
      prov += ']';
      out.push_back({order, std::move(entry.first), FactorMode::kStochastic,
                     std::move(prov), 1.0});
    }
    return out;
  }

 private:
  void add_nested_direct(const PauliSum& h, unsigned order,
                         const std::vector<unsigned>& path) {
    const std::string name = exponent_name(path);
    const CommutingPartition part = partition(h);
    if (!verify_partition(part)) {
      throw ConsistencyError("partition of " + name + " failed verification");
    }
    for (std::size_t i = 0; i < part.parts.size(); ++i) {
      add_direct(order, part.parts[i],
                 part.parts.size() == 1 ? name
                                        : name + ".part" + std::to_string(i));
    }
    expand(part.parts, order, path);
  }

  unsigned n_;
  unsigned k_;
  unsigned p_;
  std::vector<Factor> direct_;
  std::map<unsigned, std::pair<PauliSum, std::vector<std::string>>>
      stochastic_;
};

struct Step {
  std::size_t layer;
  double weight;
};

std::vector<Step> suzuki_sequence(std::size_t n_layers, unsigned p) {
  if (p == 1) {
    std::vector<Step> s;
    for (std::size_t i = 0; i < n_layers; ++i) s.push_back({i, 1.0});
    return s;
  }
  if (p == 2) {
    std::vector<Step> s;
    for (std::size_t i = 0; i + 1 < n_layers; ++i) s.push_back({i, 0.5});
    s.push_back({n_layers - 1, 1.0});
    for (std::size_t i = n_layers - 1; i-- > 0;) s.push_back({i, 0.5});
    return s;
  }
  const std::vector<Step> inner = suzuki_sequence(n_layers, p - 2);
  const double u = suzuki_weight(p);
  const double weights[5] = {u, u, 1.0 - 4.0 * u, u, u};
  std::vector<Step> s;
  for (double w : weights) {
    for (const Step& st : inner) s.push_back({st.layer, st.weight * w});
  }
  return s;
}

std::vector<Step> merge_steps(const std::vector<Step>& in) {
  std::vector<Step> out;
  for (const Step& st : in) {
    if (!out.empty() && out.back().layer == st.layer) {
      out.back().weight += st.weight;
    } else {
      out.push_back(st);
    }
  }
  return out;
}

void check_pf_order(unsigned p) {
  if (!(p == 1 || p == 2 || p == 4 || p == 6 || p == 8 || p == 10)) {
    throw ConfigError("unsupported product formula order " +
                      std::to_string(p));
  }
}

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

GateCount direct_cost(const PauliSum& h) {
  GateCount g;
  for (const auto& [k, c] : h.terms()) {
    ++g.rotations;
    g.cnots_deterministic += rotation_cnots(h.term(k).weight());
  }
  return g;
}

}  // namespace

std::map<unsigned, PauliSum> zassenhaus_hamiltonians(
    const std::vector<PauliSum>& layers, unsigned max_order) {
  std::vector<PauliSum> gens;
  for (const auto& h : layers) gens.push_back(h * (-kI));
  std::map<unsigned, PauliSum> out;
  for (const auto& [j, g] : extract_zassenhaus(gens, max_order).exponents) {
    out.emplace(j, hermitian_from_exponent(g));
  }
  return out;
}

std::string ExpansionPlan::label() const {
  switch (kind) {
    case PlanKind::kSze:
      return "SZE_{" + std::to_string(k) + "," + std::to_string(p) + "}";
    case PlanKind::kPf:
      return "PF_" + std::to_string(p);
    case PlanKind::kMinimalPf:
      return "MinimalPF_" + std::to_string(p);
  }
  return "?";
}

double suzuki_weight(unsigned p) {
  // 1 / (4 - 4^{1/(p-1)}), 30 significant digits.
  switch (p) {
    case 4:
      return 0.414490771794375737142354062861;
    case 6:
      return 0.373065827733272824775863041073;
    case 8:
      return 0.359584649349992252612417346019;
    case 10:
      return 0.352924033444267716800194426588;
    default:
      throw ConfigError("no Suzuki weight for order " + std::to_string(p));
  }
}

ExpansionPlan build_sze(const std::vector<PauliSum>& layers, unsigned k,
                        unsigned p, const std::vector<std::string>& layer_names) {
  check_layers(layers);
  if (k < 1) throw ConfigError("SZE requires k >= 1");
  if (p < k || p > 2 * k + 1) {
    throw ConfigError("SZE requires k <= p <= 2k+1, got k=" +
                      std::to_string(k) + " p=" + std::to_string(p));
  }
  const std::vector<std::string> names = default_names(layers, layer_names);
  const unsigned n = layers.front().n_qubits();

  SzeBuilder builder(n, k, p);
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (!layers[i].empty()) builder.add_direct(1, layers[i], names[i]);
  }
  builder.expand(layers, 1, {});

  ExpansionPlan plan;
  plan.kind = PlanKind::kSze;
  plan.k = k;
  plan.p = p;
  plan.n_qubits = n;
  plan.factors = builder.finish();
  plan.metadata["cnot_convention"] = std::string(kCnotConvention);
  plan.metadata["factor_order"] = "ascending time order, generation order within";
  return plan;
}

ExpansionPlan build_pf(const std::vector<PauliSum>& layers, unsigned p,
                       const std::vector<std::string>& layer_names,
                       bool merge_adjacent) {
  check_pf_order(p);
  check_layers(layers);
  const std::vector<std::string> names = default_names(layers, layer_names);
  std::vector<Step> steps = suzuki_sequence(layers.size(), p);
  if (merge_adjacent) steps = merge_steps(steps);

  ExpansionPlan plan;
  plan.kind = PlanKind::kPf;
  plan.p = p;
  plan.n_qubits = layers.front().n_qubits();
  std::string durations;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Step& st = steps[i];
    plan.factors.push_back(
        {1, layers[st.layer], FactorMode::kDirect, names[st.layer], st.weight});
    if (i) durations += ',';
    durations += shortest(st.weight);
  }
  plan.metadata["cnot_convention"] = std::string(kCnotConvention);
  plan.metadata["durations"] = durations;
  plan.metadata["merged"] = merge_adjacent ? "true" : "false";
  return plan;
}

GateCount count_gates(const ExpansionPlan& plan) {
  GateCount g;
  for (const Factor& f : plan.factors) {
    if (f.mode == FactorMode::kDirect) {
      const GateCount d = direct_cost(f.hamiltonian);
      g.rotations += d.rotations;
      g.cnots_deterministic += d.cnots_deterministic;
    } else {
      const RotationDistribution dist = build_distribution(f.hamiltonian, 1);
      g.rotations += 1;
      for (const auto& e : dist.entries) {
        g.cnots_stochastic_expected +=
            e.probability * static_cast<double>(rotation_cnots(e.term.weight()));
      }
    }
  }
  g.total_expected =
      static_cast<double>(g.cnots_deterministic) + g.cnots_stochastic_expected;
  return g;
}

unsigned minimal_pf_blocks(unsigned p) {
  if (p == 8) return 15;
  if (p == 10) return 31;
  throw ConfigError("minimal product formulas exist here only for orders 8 "
                    "and 10, got " + std::to_string(p));
}

GateCount minimal_pf_count(const std::vector<PauliSum>& layers, unsigned p,
                           bool merge_boundaries) {
  const unsigned blocks = minimal_pf_blocks(p);
  const GateCount s2 = count_gates(build_pf(layers, 2));
  const GateCount edge = direct_cost(layers.front());
  const long merges = merge_boundaries ? blocks - 1 : 0;
  GateCount g;
  g.rotations = blocks * s2.rotations - merges * edge.rotations;
  g.cnots_deterministic =
      blocks * s2.cnots_deterministic - merges * edge.cnots_deterministic;
  g.total_expected = static_cast<double>(g.cnots_deterministic);
  return g;
}

std::string serialize_plan(const ExpansionPlan& plan) {
  std::ostringstream out;
  out << "# plan: " << plan.label() << "\n";
  out << "n_qubits: " << plan.n_qubits << "\n";
  for (const auto& [key, value] : plan.metadata) {
    out << "# " << key << ": " << value << "\n";
  }
  for (const Factor& f : plan.factors) {
    out << "FACTOR " << f.time_order << ' '
        << (f.mode == FactorMode::kDirect ? "direct" : "stochastic") << ' '
        << f.provenance;
    if (f.duration != 1.0) out << " duration=" << shortest(f.duration);
    out << "\n" << format_terms(f.hamiltonian, "  ");
  }
  return out.str();
}

ExpansionPlan parse_plan(std::string_view text) {
  ExpansionPlan plan;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_n = false;
  PauliSum::TermMap current;
  auto flush = [&]() {
    if (!plan.factors.empty()) {
      plan.factors.back().hamiltonian =
          PauliSum(plan.n_qubits, std::move(current));
      current.clear();
    }
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.rfind("# plan: ", 0) == 0) {
      const std::string label = line.substr(8);
      unsigned a = 0, b = 0;
      if (std::sscanf(label.c_str(), "SZE_{%u,%u}", &a, &b) == 2) {
        plan.kind = PlanKind::kSze;
        plan.k = a;
        plan.p = b;
      } else if (std::sscanf(label.c_str(), "PF_%u", &a) == 1) {
        plan.kind = PlanKind::kPf;
        plan.p = a;
      } else if (std::sscanf(label.c_str(), "MinimalPF_%u", &a) == 1) {
        plan.kind = PlanKind::kMinimalPf;
        plan.p = a;
      } else {
        throw ParseError(line_no, "unknown plan label '" + label + "'");
      }
      continue;
    }
    if (line.rfind("# ", 0) == 0) {
      const auto colon = line.find(": ");
      if (colon != std::string::npos) {
        plan.metadata[line.substr(2, colon - 2)] = line.substr(colon + 2);
      }
      continue;
    }
    if (line.rfind("n_qubits:", 0) == 0) {
      plan.n_qubits = static_cast<unsigned>(std::stoul(line.substr(9)));
      have_n = true;
      continue;
    }
    if (line.rfind("FACTOR ", 0) == 0) {
      if (!have_n) throw ParseError(line_no, "FACTOR before n_qubits header");
      flush();
      std::istringstream f(line.substr(7));
      Factor factor{1, PauliSum(plan.n_qubits), FactorMode::kDirect, "", 1.0};
      std::string mode, extra;
      if (!(f >> factor.time_order >> mode >> factor.provenance)) {
        throw ParseError(line_no, "expected 'FACTOR <m> <mode> <provenance>'");
      }
      if (mode == "direct") {
        factor.mode = FactorMode::kDirect;
      } else if (mode == "stochastic") {
        factor.mode = FactorMode::kStochastic;
      } else {
        throw ParseError(line_no, "unknown factor mode '" + mode + "'");
      }
      if (f >> extra) {
        if (extra.rfind("duration=", 0) != 0) {
          throw ParseError(line_no, "unexpected token '" + extra + "'");
        }
        factor.duration = std::stod(extra.substr(9));
      }
      plan.factors.push_back(std::move(factor));
      continue;
    }
    if (plan.factors.empty()) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError(line_no, "term outside of a FACTOR block");
    }
    parse_term_line(line, plan.n_qubits, line_no, current);
  }
  flush();
  return plan;
}

}  // namespace sze
