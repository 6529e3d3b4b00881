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

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sze {

using Complex = std::complex<double>;

/// Masks are single 64-bit words.
inline constexpr unsigned kMaxQubits = 64;

/// Coefficients below this fraction of a sum's scale are dropped.
inline constexpr double kPruneTolerance = 1e-12;

/// Symplectic key of a Pauli string. Ordered by (z, x), which is also the
/// canonical order of every serialized sum.
struct PauliKey {
  std::uint64_t z = 0;
  std::uint64_t x = 0;

  auto operator<=>(const PauliKey&) const = default;
};

struct PauliKeyHash {
  std::size_t operator()(const PauliKey& k) const noexcept {
    std::uint64_t h = k.z * 0x9E3779B97F4A7C15ULL;
    h ^= k.x + 0xC2B2AE3D27D4EB4FULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// An n-qubit Pauli string i^phase * P_{n-1} (x) ... (x) P_0 in symplectic
/// form. Bit q of x_mask is set iff qubit q carries X or Y, bit q of z_mask
/// iff it carries Z or Y.
class PauliTerm {
 public:
  /// Identity on `n_qubits` qubits.
  explicit PauliTerm(unsigned n_qubits);
  PauliTerm(unsigned n_qubits, std::uint64_t x_mask, std::uint64_t z_mask,
            int phase_exponent = 0);

  /// Single-qubit Pauli `letter` ('I', 'X', 'Y' or 'Z') on `qubit`.
  static PauliTerm single(unsigned n_qubits, unsigned qubit, char letter);

  /// Parses whitespace-separated factors such as "X0 Z3 Y4". The empty
  /// string is the identity.
  static PauliTerm parse(unsigned n_qubits, std::string_view text);

  unsigned n_qubits() const { return n_qubits_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  int phase_exponent() const { return phase_; }
  PauliKey key() const { return {z_, x_}; }

  /// i^phase_exponent.
  Complex phase() const;
  int weight() const;
  bool is_identity() const { return x_ == 0 && z_ == 0 && phase_ == 0; }
  /// True iff the operator is Hermitian (phase is +1 or -1).
  bool is_hermitian() const { return (phase_ & 1) == 0; }
  char letter(unsigned qubit) const;

  /// Letters only, phase omitted: "X0 Z1", or "I" for the identity string.
  std::string label() const;

  PauliTerm with_phase(int phase_exponent) const {
    return PauliTerm(n_qubits_, x_, z_, phase_exponent);
  }

  bool operator==(const PauliTerm&) const = default;

 private:
  unsigned n_qubits_;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int phase_ = 0;
};

/// Pauli group product p*q, with the phase tracked exactly.
PauliTerm multiply(const PauliTerm& p, const PauliTerm& q);

/// Symplectic inner product test: true iff p and q commute.
bool commutes(const PauliTerm& p, const PauliTerm& q);

/// Sparse complex combination of Pauli strings, one entry per key with any
/// phase folded into the coefficient. Values are immutable once built;
/// arithmetic returns new sums.
class PauliSum {
 public:
  using TermMap = std::map<PauliKey, Complex>;

  explicit PauliSum(unsigned n_qubits);
  /// Builds from raw terms, pruning entries below kPruneTolerance times
  /// max(l1 of the result, `scale`).
  PauliSum(unsigned n_qubits, TermMap terms, double scale = 0.0);

  static PauliSum identity(unsigned n_qubits, Complex coeff = 1.0);
  static PauliSum from_term(const PauliTerm& term, Complex coeff = 1.0);
  static PauliSum from_terms(
      unsigned n_qubits,
      const std::vector<std::pair<Complex, std::string>>& terms);

  unsigned n_qubits() const { return n_qubits_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Coefficient of the canonical (phase 0) string with this key.
  Complex coefficient(const PauliKey& key) const;
  Complex coefficient(std::string_view label) const;

  /// The canonical Pauli string for `key` on this sum's qubit count.
  PauliTerm term(const PauliKey& key) const {
    return PauliTerm(n_qubits_, key.x, key.z);
  }

  double l1_norm() const;
  /// Largest coefficient magnitude; 0 for the empty sum.
  double max_abs() const;

  /// All coefficients real to within tol * l1_norm.
  bool is_hermitian(double tol = 1e-12) const;
  /// All coefficients imaginary to within tol * l1_norm.
  bool is_anti_hermitian(double tol = 1e-12) const;

  /// max |a_k - b_k| over the union of keys.
  double distance(const PauliSum& other) const;

  PauliSum operator+(const PauliSum& other) const;
  PauliSum operator-(const PauliSum& other) const;
  PauliSum operator-() const;
  PauliSum operator*(Complex scalar) const;
  friend PauliSum operator*(Complex scalar, const PauliSum& s) {
    return s * scalar;
  }
  /// Associative (operator) product.
  PauliSum operator*(const PauliSum& other) const;

  /// Terms whose keys satisfy `keep`.
  PauliSum filter(const std::function<bool(const PauliTerm&)>& keep) const;

  /// Real parts; only meaningful for Hermitian sums.
  std::vector<std::pair<PauliTerm, double>> real_terms() const;

  bool operator==(const PauliSum&) const = default;

 private:
  unsigned n_qubits_;
  TermMap terms_;
};

/// [a, b] = ab - ba.
PauliSum commutator(const PauliSum& a, const PauliSum& b);

/// Sum of coefficient magnitudes.
double l1_norm(const PauliSum& h);

/// Associative product with an output-size guard. Throws NumericLimitError
/// when the product would hold more than `term_cap` terms.
PauliSum multiply_capped(const PauliSum& a, const PauliSum& b,
                         std::size_t term_cap);

// Text format ---------------------------------------------------------------
//
//   n_qubits: 3
//   # comment
//   -1 Z0 Z1
//   0.5+0.25i X2
//
// One term per line in canonical key order. Coefficients use the shortest
// round-trip decimal form.

std::string format_coefficient(Complex c);
std::string format_terms(const PauliSum& s, std::string_view indent = "");
std::string to_text(const PauliSum& s);
PauliSum parse_pauli_sum(std::string_view text);

/// Parses one term line body "<coef> <LETTER><idx> ..." into `out`.
/// Returns false for blank or comment-only lines. Errors carry `line_no`.
bool parse_term_line(std::string_view line, unsigned n_qubits, int line_no,
                     PauliSum::TermMap& out);

void check_same_qubits(unsigned a, unsigned b);

}  // namespace sze
