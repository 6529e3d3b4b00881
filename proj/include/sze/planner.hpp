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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sze/pauli.hpp"

namespace sze {

enum class FactorMode { kDirect, kStochastic };

/// One exponential exp(-i duration * tau^time_order * hamiltonian) of a
/// plan step, tau = t / r. Stochastic factors are sampled from the
/// distribution of `hamiltonian` instead.
struct Factor {
  unsigned time_order = 1;
  PauliSum hamiltonian;
  FactorMode mode = FactorMode::kDirect;
  std::string provenance;
  double duration = 1.0;

  bool operator==(const Factor&) const = default;
};

enum class PlanKind { kSze, kPf, kMinimalPf };

/// Factors are stored in operator product order: the step unitary is
/// factors[0] * factors[1] * ..., so the last factor acts first on a state.
struct ExpansionPlan {
  PlanKind kind = PlanKind::kSze;
  unsigned k = 0;
  unsigned p = 0;
  unsigned n_qubits = 1;
  std::vector<Factor> factors;
  std::map<std::string, std::string> metadata;

  /// "SZE_{k,p}", "PF_p" or "MinimalPF_p".
  std::string label() const;
};

struct GateCount {
  long rotations = 0;
  long cnots_deterministic = 0;
  double cnots_stochastic_expected = 0.0;
  double total_expected = 0.0;
};

/// CNOT cost of exp(-i theta P) for a weight-w string with a CNOT ladder.
inline long rotation_cnots(int weight) {
  return weight <= 1 ? 0 : 2L * (weight - 1);
}

inline constexpr std::string_view kCnotConvention =
    "2*(weight-1) CNOTs per Pauli rotation (CNOT ladder); no cancellation "
    "between rotations";

/// Hermitian Zassenhaus exponents H_j, j = 2..max_order, with
/// exp(-i t sum_i L_i) = prod_i exp(-i t L_i) prod_j exp(-i t^j H_j).
/// Imaginary parts left by roundoff are dropped after a Hermiticity check.
std::map<unsigned, PauliSum> zassenhaus_hamiltonians(
    const std::vector<PauliSum>& layers, unsigned max_order);

/// Nested Zassenhaus plan with direct factors through effective time order
/// k and one sampled rotation per order in [k+1, p]; orders above p are
/// dropped. Requires internally commuting layers and k <= p <= 2k+1.
ExpansionPlan build_sze(const std::vector<PauliSum>& layers, unsigned k,
                        unsigned p,
                        const std::vector<std::string>& layer_names = {});

/// Suzuki product formula of order p in {1, 2, 4, 6, 8, 10}. With
/// `merge_adjacent`, neighbouring exponentials of the same layer are fused.
ExpansionPlan build_pf(const std::vector<PauliSum>& layers, unsigned p,
                       const std::vector<std::string>& layer_names = {},
                       bool merge_adjacent = true);

GateCount count_gates(const ExpansionPlan& plan);

/// Cost of the minimal 8th/10th order formulas built from 15/31 second
/// order blocks. Counting only; the stage coefficients are not known here.
/// With `merge_boundaries`, the first layer of each block fuses with the
/// last layer of the previous block.
GateCount minimal_pf_count(const std::vector<PauliSum>& layers, unsigned p,
                           bool merge_boundaries = true);

/// Number of second order blocks in the minimal formula of order p.
unsigned minimal_pf_blocks(unsigned p);

/// Suzuki recursion weight u_k = 1 / (4 - 4^{1/(2k-1)}) for order p = 2k.
double suzuki_weight(unsigned p);

std::string serialize_plan(const ExpansionPlan& plan);
ExpansionPlan parse_plan(std::string_view text);

}  // namespace sze
