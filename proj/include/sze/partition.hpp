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

#include <optional>
#include <utility>
#include <vector>

#include "sze/pauli.hpp"

namespace sze {

/// Disjoint internally commuting pieces of `source`, largest first.
struct CommutingPartition {
  std::vector<PauliSum> parts;
  PauliSum source;
};

/// First anticommuting pair of terms in canonical order, if any.
std::optional<std::pair<PauliTerm, PauliTerm>> find_anticommuting_pair(
    const PauliSum& s);

inline bool is_internally_commuting(const PauliSum& s) {
  return !find_anticommuting_pair(s).has_value();
}

/// Colors the anticommutation graph of the terms of `h` with DSATUR, then
/// runs a bounded Kempe-chain search that tries to empty the smallest color
/// class. Deterministic; the empty sum gives zero parts.
CommutingPartition partition(const PauliSum& h);

/// Each part internally commuting, parts disjoint, union equal to source.
bool verify_partition(const CommutingPartition& p);

/// Number of colors used by DSATUR alone, before local search. Exposed for
/// diagnostics and tests.
std::size_t dsatur_color_count(const PauliSum& h);

}  // namespace sze
