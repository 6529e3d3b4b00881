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

#include "sze/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "sze/errors.hpp"

namespace sze {

namespace {

constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

std::uint64_t low_mask(unsigned n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

int popcount(std::uint64_t v) { return std::popcount(v); }

// Phase exponent of the product of canonical strings (a.x, a.z) * (b.x, b.z).
// Uses P = i^{|x&z|} X^x Z^z and Z^z1 X^x2 = (-1)^{|z1&x2|} X^x2 Z^z1.
int product_phase(std::uint64_t ax, std::uint64_t az, std::uint64_t bx,
                  std::uint64_t bz) {
  const std::uint64_t rx = ax ^ bx;
  const std::uint64_t rz = az ^ bz;
  int e = popcount(ax & az) + popcount(bx & bz) + 2 * popcount(az & bx) -
          popcount(rx & rz);
  return ((e % 4) + 4) % 4;
}

using Accumulator = std::unordered_map<PauliKey, Complex, PauliKeyHash>;

PauliSum::TermMap to_map(const Accumulator& acc) {
  return PauliSum::TermMap(acc.begin(), acc.end());
}

}  // namespace

void check_same_qubits(unsigned a, unsigned b) {
  if (a != b) {
    throw ConfigError("qubit count mismatch: " + std::to_string(a) + " vs " +
                      std::to_string(b));
  }
}

// PauliTerm ----------------------------------------------------------------

PauliTerm::PauliTerm(unsigned n_qubits) : PauliTerm(n_qubits, 0, 0, 0) {}

PauliTerm::PauliTerm(unsigned n_qubits, std::uint64_t x_mask,
                     std::uint64_t z_mask, int phase_exponent)
    : n_qubits_(n_qubits),
      x_(x_mask),
      z_(z_mask),
      phase_(((phase_exponent % 4) + 4) % 4) {
  if (n_qubits == 0 || n_qubits > kMaxQubits) {
    throw ConfigError("n_qubits must be in [1, 64], got " +
                      std::to_string(n_qubits));
  }
  const std::uint64_t m = low_mask(n_qubits);
  if ((x_ & ~m) != 0 || (z_ & ~m) != 0) {
    throw ConfigError("Pauli mask uses bits beyond n_qubits");
  }
}

PauliTerm PauliTerm::single(unsigned n_qubits, unsigned qubit, char letter) {
  if (qubit >= n_qubits) {
    throw ConfigError("qubit index " + std::to_string(qubit) +
                      " out of range for " + std::to_string(n_qubits) +
                      " qubits");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (letter) {
    case 'I':
      return PauliTerm(n_qubits);
    case 'X':
      return PauliTerm(n_qubits, bit, 0);
    case 'Y':
      return PauliTerm(n_qubits, bit, bit);
    case 'Z':
      return PauliTerm(n_qubits, 0, bit);
    default:
      throw ConfigError(std::string("unknown Pauli letter '") + letter + "'");
  }
}

PauliTerm PauliTerm::parse(unsigned n_qubits, std::string_view text) {
  PauliTerm out(n_qubits);
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2) {
      if (tok == "I") continue;
      throw ConfigError("bad Pauli factor '" + tok + "'");
    }
    const char letter = tok[0];
    unsigned idx = 0;
    try {
      std::size_t used = 0;
      idx = static_cast<unsigned>(std::stoul(tok.substr(1), &used));
      if (used != tok.size() - 1) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ConfigError("bad Pauli factor '" + tok + "'");
    }
    const PauliTerm f = single(n_qubits, idx, letter);
    if ((out.x_mask() | out.z_mask()) & (f.x_mask() | f.z_mask())) {
      throw ConfigError("qubit " + std::to_string(idx) +
                        " appears twice in '" + std::string(text) + "'");
    }
    out = multiply(out, f);
  }
  return out;
}

Complex PauliTerm::phase() const { return kIPowers[phase_]; }

int PauliTerm::weight() const { return popcount(x_ | z_); }

char PauliTerm::letter(unsigned qubit) const {
  const bool x = (x_ >> qubit) & 1U;
  const bool z = (z_ >> qubit) & 1U;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::string PauliTerm::label() const {
  std::string out;
  for (unsigned q = 0; q < n_qubits_; ++q) {
    const char c = letter(q);
    if (c == 'I') continue;
    if (!out.empty()) out += ' ';
    out += c;
    out += std::to_string(q);
  }
  return out.empty() ? "I" : out;
}

PauliTerm multiply(const PauliTerm& p, const PauliTerm& q) {
  check_same_qubits(p.n_qubits(), q.n_qubits());
  const int e = product_phase(p.x_mask(), p.z_mask(), q.x_mask(), q.z_mask());
  return PauliTerm(p.n_qubits(), p.x_mask() ^ q.x_mask(),
                   p.z_mask() ^ q.z_mask(),
                   p.phase_exponent() + q.phase_exponent() + e);
}

bool commutes(const PauliTerm& p, const PauliTerm& q) {
  check_same_qubits(p.n_qubits(), q.n_qubits());
  return ((popcount(p.x_mask() & q.z_mask()) +
           popcount(p.z_mask() & q.x_mask())) &
          1) == 0;
}

// PauliSum -----------------------------------------------------------------

PauliSum::PauliSum(unsigned n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits == 0 || n_qubits > kMaxQubits) {
    throw ConfigError("n_qubits must be in [1, 64], got " +
                      std::to_string(n_qubits));
  }
}

PauliSum::PauliSum(unsigned n_qubits, TermMap terms, double scale)
    : PauliSum(n_qubits) {
  const std::uint64_t m = low_mask(n_qubits);
  double l1 = 0.0;
  for (const auto& [k, c] : terms) {
    if ((k.x & ~m) != 0 || (k.z & ~m) != 0) {
      throw ConfigError("Pauli mask uses bits beyond n_qubits");
    }
    l1 += std::abs(c);
  }
  const double cut = kPruneTolerance * std::max(l1, scale);
  std::erase_if(terms, [&](const auto& kv) {
    return std::abs(kv.second) <= cut || kv.second == Complex(0.0);
  });
  terms_ = std::move(terms);
}

PauliSum PauliSum::identity(unsigned n_qubits, Complex coeff) {
  return PauliSum(n_qubits, TermMap{{PauliKey{}, coeff}});
}

PauliSum PauliSum::from_term(const PauliTerm& term, Complex coeff) {
  return PauliSum(term.n_qubits(),
                  TermMap{{term.key(), coeff * term.phase()}});
}

PauliSum PauliSum::from_terms(
    unsigned n_qubits,
    const std::vector<std::pair<Complex, std::string>>& terms) {
  TermMap m;
  for (const auto& [c, label] : terms) {
    const PauliTerm t = PauliTerm::parse(n_qubits, label);
    m[t.key()] += c * t.phase();
  }
  return PauliSum(n_qubits, std::move(m));
}

Complex PauliSum::coefficient(const PauliKey& key) const {
  const auto it = terms_.find(key);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

Complex PauliSum::coefficient(std::string_view label) const {
  const PauliTerm t = PauliTerm::parse(n_qubits_, label);
  return coefficient(t.key()) * std::conj(t.phase());
}

double PauliSum::l1_norm() const {
  double s = 0.0;
  for (const auto& [k, c] : terms_) s += std::abs(c);
  return s;
}

double PauliSum::max_abs() const {
  double s = 0.0;
  for (const auto& [k, c] : terms_) s = std::max(s, std::abs(c));
  return s;
}

bool PauliSum::is_hermitian(double tol) const {
  const double cut = tol * l1_norm();
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& kv) {
    return std::abs(kv.second.imag()) <= cut;
  });
}

bool PauliSum::is_anti_hermitian(double tol) const {
  const double cut = tol * l1_norm();
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& kv) {
    return std::abs(kv.second.real()) <= cut;
  });
}

double PauliSum::distance(const PauliSum& other) const {
  check_same_qubits(n_qubits_, other.n_qubits_);
  double d = 0.0;
  for (const auto& [k, c] : terms_) {
    d = std::max(d, std::abs(c - other.coefficient(k)));
  }
  for (const auto& [k, c] : other.terms_) {
    if (!terms_.contains(k)) d = std::max(d, std::abs(c));
  }
  return d;
}

PauliSum PauliSum::operator+(const PauliSum& other) const {
  check_same_qubits(n_qubits_, other.n_qubits_);
  TermMap m = terms_;
  for (const auto& [k, c] : other.terms_) m[k] += c;
  return PauliSum(n_qubits_, std::move(m), l1_norm() + other.l1_norm());
}

PauliSum PauliSum::operator-(const PauliSum& other) const {
  return *this + (-other);
}

PauliSum PauliSum::operator-() const { return *this * Complex(-1.0); }

PauliSum PauliSum::operator*(Complex scalar) const {
  TermMap m = terms_;
  for (auto& [k, c] : m) c *= scalar;
  return PauliSum(n_qubits_, std::move(m));
}

PauliSum PauliSum::operator*(const PauliSum& other) const {
  return multiply_capped(*this, other, static_cast<std::size_t>(-1));
}

PauliSum PauliSum::filter(
    const std::function<bool(const PauliTerm&)>& keep) const {
  TermMap m;
  for (const auto& [k, c] : terms_) {
    if (keep(term(k))) m.emplace(k, c);
  }
  return PauliSum(n_qubits_, std::move(m));
}

std::vector<std::pair<PauliTerm, double>> PauliSum::real_terms() const {
  std::vector<std::pair<PauliTerm, double>> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.emplace_back(term(k), c.real());
  return out;
}

PauliSum multiply_capped(const PauliSum& a, const PauliSum& b,
                         std::size_t term_cap) {
  check_same_qubits(a.n_qubits(), b.n_qubits());
  Accumulator acc;
  acc.reserve(std::min(a.size() * b.size(), std::size_t{1} << 20));
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const int e = product_phase(ka.x, ka.z, kb.x, kb.z);
      acc[PauliKey{ka.z ^ kb.z, ka.x ^ kb.x}] += ca * cb * kIPowers[e];
      if (acc.size() > term_cap) {
        throw NumericLimitError("operator product exceeds term cap of " +
                                std::to_string(term_cap));
      }
    }
  }
  return PauliSum(a.n_qubits(), to_map(acc), a.l1_norm() * b.l1_norm());
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  check_same_qubits(a.n_qubits(), b.n_qubits());
  // Commuting pairs cancel exactly; anticommuting pairs give 2ab.
  Accumulator acc;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      if (((popcount(ka.x & kb.z) + popcount(ka.z & kb.x)) & 1) == 0) continue;
      const int e = product_phase(ka.x, ka.z, kb.x, kb.z);
      acc[PauliKey{ka.z ^ kb.z, ka.x ^ kb.x}] += 2.0 * ca * cb * kIPowers[e];
    }
  }
  return PauliSum(a.n_qubits(), to_map(acc), 2.0 * a.l1_norm() * b.l1_norm());
}

double l1_norm(const PauliSum& h) { return h.l1_norm(); }

}  // namespace sze
