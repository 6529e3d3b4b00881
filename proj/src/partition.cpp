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

#include "sze/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sze {

namespace {

constexpr int kLocalSearchIterations = 500;

class Coloring {
 public:
  explicit Coloring(const std::vector<PauliTerm>& terms)
      : n_(terms.size()), adj_(n_ * n_, 0), nbrs_(n_), color_(n_, -1) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (!commutes(terms[i], terms[j])) {
          adj_[i * n_ + j] = adj_[j * n_ + i] = 1;
          nbrs_[i].push_back(j);
          nbrs_[j].push_back(i);
        }
      }
    }
  }

  void dsatur() {
    std::vector<std::set<int>> seen(n_);
    for (std::size_t step = 0; step < n_; ++step) {
      std::size_t best = n_;
      for (std::size_t v = 0; v < n_; ++v) {
        if (color_[v] >= 0) continue;
        if (best == n_ || seen[v].size() > seen[best].size() ||
            (seen[v].size() == seen[best].size() &&
             nbrs_[v].size() > nbrs_[best].size())) {
          best = v;
        }
      }
      int c = 0;
      while (seen[best].contains(c)) ++c;
      color_[best] = c;
      num_colors_ = std::max(num_colors_, c + 1);
      for (std::size_t u : nbrs_[best]) seen[u].insert(c);
    }
  }

  void local_search() {
    int budget = kLocalSearchIterations;
    while (budget > 0 && num_colors_ > 1) {
      const int c = smallest_class();
      bool moved_any = false;
      for (std::size_t v = 0; v < n_ && budget > 0; ++v) {
        if (color_[v] != c) continue;
        --budget;
        if (try_move(v, c)) moved_any = true;
      }
      if (class_size(c) == 0) {
        drop_color(c);
      } else if (!moved_any) {
        break;
      }
    }
  }

  int num_colors() const { return num_colors_; }
  int color(std::size_t v) const { return color_[v]; }

 private:
  bool adjacent(std::size_t a, std::size_t b) const {
    return adj_[a * n_ + b] != 0;
  }

  std::size_t class_size(int c) const {
    return static_cast<std::size_t>(std::count(color_.begin(), color_.end(), c));
  }

  int smallest_class() const {
    int best = 0;
    for (int c = 1; c < num_colors_; ++c) {
      if (class_size(c) < class_size(best)) best = c;
    }
    return best;
  }

  void drop_color(int c) {
    for (auto& col : color_) {
      if (col > c) --col;
    }
    --num_colors_;
  }

  bool has_neighbor_colored(std::size_t v, int d) const {
    return std::any_of(nbrs_[v].begin(), nbrs_[v].end(),
                       [&](std::size_t u) { return color_[u] == d; });
  }

  // Kempe chain of colors {d, e} through `start`.
  std::vector<std::size_t> chain(std::size_t start, int d, int e) const {
    std::vector<std::size_t> out{start};
    std::vector<char> in(n_, 0);
    in[start] = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t u : nbrs_[out[i]]) {
        if (!in[u] && (color_[u] == d || color_[u] == e)) {
          in[u] = 1;
          out.push_back(u);
        }
      }
    }
    return out;
  }

  bool try_move(std::size_t v, int c) {
    for (int d = 0; d < num_colors_; ++d) {
      if (d != c && !has_neighbor_colored(v, d)) {
        color_[v] = d;
        return true;
      }
    }
    for (int d = 0; d < num_colors_; ++d) {
      if (d == c) continue;
      for (int e = 0; e < num_colors_; ++e) {
        if (e == c || e == d) continue;
        const std::vector<int> saved = color_;
        std::vector<char> done(n_, 0);
        for (std::size_t u : nbrs_[v]) {
          if (color_[u] != d || done[u]) continue;
          for (std::size_t w : chain(u, d, e)) {
            if (done[w]) continue;
            done[w] = 1;
            color_[w] = (color_[w] == d) ? e : d;
          }
        }
        if (!has_neighbor_colored(v, d)) {
          color_[v] = d;
          return true;
        }
        color_ = saved;
      }
    }
    return false;
  }

  std::size_t n_;
  std::vector<char> adj_;
  std::vector<std::vector<std::size_t>> nbrs_;
  std::vector<int> color_;
  int num_colors_ = 0;
};

std::vector<PauliTerm> canonical_terms(const PauliSum& h) {
  std::vector<PauliTerm> terms;
  terms.reserve(h.size());
  for (const auto& [k, c] : h.terms()) terms.push_back(h.term(k));
  return terms;
}

}  // namespace

std::optional<std::pair<PauliTerm, PauliTerm>> find_anticommuting_pair(
    const PauliSum& s) {
  const std::vector<PauliTerm> terms = canonical_terms(s);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (!commutes(terms[i], terms[j])) return std::pair{terms[i], terms[j]};
    }
  }
  return std::nullopt;
}

CommutingPartition partition(const PauliSum& h) {
  CommutingPartition out{{}, h};
  if (h.empty()) return out;
  const std::vector<PauliTerm> terms = canonical_terms(h);
  Coloring coloring(terms);
  coloring.dsatur();
  coloring.local_search();

  std::vector<PauliSum::TermMap> groups(coloring.num_colors());
  std::size_t v = 0;
  for (const auto& [k, c] : h.terms()) {
    groups[coloring.color(v++)].emplace(k, c);
  }
  std::erase_if(groups, [](const auto& g) { return g.empty(); });
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.begin()->first < b.begin()->first;
  });
  for (auto& g : groups) out.parts.emplace_back(h.n_qubits(), std::move(g));
  return out;
}

bool verify_partition(const CommutingPartition& p) {
  const PauliSum& src = p.source;
  PauliSum::TermMap seen;
  for (const auto& part : p.parts) {
    if (part.n_qubits() != src.n_qubits()) return false;
    if (!is_internally_commuting(part)) return false;
    for (const auto& [k, c] : part.terms()) {
      if (!seen.emplace(k, c).second) return false;
    }
  }
  if (seen.size() != src.size()) return false;
  for (const auto& [k, c] : seen) {
    const auto it = src.terms().find(k);
    if (it == src.terms().end() || it->second != c) return false;
  }
  return true;
}

std::size_t dsatur_color_count(const PauliSum& h) {
  if (h.empty()) return 0;
  Coloring coloring(canonical_terms(h));
  coloring.dsatur();
  return static_cast<std::size_t>(coloring.num_colors());
}

}  // namespace sze
