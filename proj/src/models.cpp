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

#include "sze/models.hpp"

#include <fstream>
#include <sstream>

#include "sze/errors.hpp"
#include "sze/partition.hpp"

namespace sze {

LayeredHamiltonian tfim(unsigned n, double J, double h) {
  if (n < 2) {
    throw ConfigError("tfim needs at least 2 qubits, got " +
                      std::to_string(n));
  }
  PauliSum::TermMap a;
  PauliSum::TermMap b;
  for (unsigned i = 0; i + 1 < n; ++i) {
    const std::uint64_t z = (std::uint64_t{1} << i) | (std::uint64_t{1} << (i + 1));
    a[PauliKey{z, 0}] = -J;
  }
  for (unsigned j = 0; j < n; ++j) {
    b[PauliKey{0, std::uint64_t{1} << j}] = -h;
  }
  LayeredHamiltonian out =
      make_layered({PauliSum(n, std::move(a)), PauliSum(n, std::move(b))},
                   {"A", "B"}, "tfim");
  out.parameters = {{"n", n}, {"J", J}, {"h", h}};
  return out;
}

LayeredHamiltonian make_layered(std::vector<PauliSum> layers,
                                std::vector<std::string> names,
                                std::string label) {
  if (layers.empty()) throw ConfigError("a Hamiltonian needs a layer");
  if (names.size() != layers.size()) {
    throw ConfigError("layer name count does not match layer count");
  }
  PauliSum total(layers.front().n_qubits());
  for (std::size_t i = 0; i < layers.size(); ++i) {
    check_same_qubits(total.n_qubits(), layers[i].n_qubits());
    if (!layers[i].is_hermitian()) {
      throw ConfigError("layer '" + names[i] + "' is not Hermitian");
    }
    if (const auto pair = find_anticommuting_pair(layers[i])) {
      throw ConfigError("layer '" + names[i] + "' is not commuting: " +
                        pair->first.label() + " and " + pair->second.label() +
                        " anticommute");
    }
    total = total + layers[i];
  }
  return LayeredHamiltonian{std::move(layers), std::move(names),
                            std::move(total), std::move(label), {}};
}

LayeredHamiltonian parse_layered(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  unsigned n = 0;
  PauliSum::TermMap loose;
  std::vector<std::pair<std::string, PauliSum::TermMap>> sections;
  std::vector<int> section_lines;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = line;
    if (const auto hash = body.find('#'); hash != std::string_view::npos) {
      body = body.substr(0, hash);
    }
    const auto first = body.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    body = body.substr(first);
    if (n == 0) {
      std::istringstream hdr{std::string(body)};
      std::string key;
      long value = 0;
      if (!(hdr >> key >> value) || key != "n_qubits:" || value <= 0 ||
          value > static_cast<long>(kMaxQubits)) {
        throw ParseError(line_no, "expected header 'n_qubits: <n>'");
      }
      n = static_cast<unsigned>(value);
      continue;
    }
    if (body.rfind("layer:", 0) == 0) {
      std::istringstream name_in{std::string(body.substr(6))};
      std::string name;
      if (!(name_in >> name)) {
        throw ParseError(line_no, "expected 'layer: <name>'");
      }
      sections.emplace_back(name, PauliSum::TermMap{});
      section_lines.push_back(line_no);
      continue;
    }
    parse_term_line(body, n, line_no,
                    sections.empty() ? loose : sections.back().second);
  }
  if (n == 0) throw ParseError(line_no, "missing 'n_qubits:' header");

  std::vector<PauliSum> layers;
  std::vector<std::string> names;
  if (!loose.empty()) {
    const CommutingPartition part = partition(PauliSum(n, std::move(loose)));
    if (!verify_partition(part)) {
      throw ConsistencyError("automatic partition failed verification");
    }
    for (std::size_t i = 0; i < part.parts.size(); ++i) {
      layers.push_back(part.parts[i]);
      names.push_back("P" + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < sections.size(); ++i) {
    PauliSum layer(n, std::move(sections[i].second));
    if (const auto pair = find_anticommuting_pair(layer)) {
      throw ParseError(section_lines[i],
                       "layer '" + sections[i].first + "' is not commuting: " +
                           pair->first.label() + " and " +
                           pair->second.label() + " anticommute");
    }
    layers.push_back(std::move(layer));
    names.push_back(sections[i].first);
  }
  if (layers.empty()) throw ConfigError("Hamiltonian file has no terms");
  LayeredHamiltonian out =
      make_layered(std::move(layers), std::move(names), "file");
  out.parameters["n"] = n;
  return out;
}

LayeredHamiltonian from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open Hamiltonian file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_layered(buf.str());
}

std::string to_text(const LayeredHamiltonian& h) {
  std::ostringstream out;
  out << "n_qubits: " << h.n_qubits() << "\n";
  for (std::size_t i = 0; i < h.layers.size(); ++i) {
    out << "layer: " << h.names[i] << "\n" << format_terms(h.layers[i]);
  }
  return out.str();
}

}  // namespace sze
