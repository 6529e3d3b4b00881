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

/// Hamiltonian split into internally commuting layers.
struct LayeredHamiltonian {
  std::vector<PauliSum> layers;
  std::vector<std::string> names;
  PauliSum total;
  std::string label;
  std::map<std::string, double> parameters;

  unsigned n_qubits() const { return total.n_qubits(); }
};

/// Open transverse-field Ising chain: layer "A" = -J sum Z_i Z_{i+1},
/// layer "B" = -h sum X_j. Throws ConfigError for n < 2 or n > 64.
LayeredHamiltonian tfim(unsigned n, double J, double h);

/// Validates layers (Hermitian, internally commuting, equal qubit counts)
/// and fills `total`. Throws ConfigError naming the first anticommuting
/// pair of an offending layer.
LayeredHamiltonian make_layered(std::vector<PauliSum> layers,
                                std::vector<std::string> names,
                                std::string label = "custom");

/// Pauli text format with optional "layer: <name>" section headers. Terms
/// before the first header, or files without headers, go through the
/// partitioner. Errors carry line numbers.
LayeredHamiltonian parse_layered(std::string_view text);
LayeredHamiltonian from_file(const std::string& path);

/// Inverse of parse_layered, one "layer:" section per layer.
std::string to_text(const LayeredHamiltonian& h);

}  // namespace sze
