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

#include <cstddef>
#include <map>
#include <vector>

#include "sze/dense.hpp"
#include "sze/pauli.hpp"

namespace sze {

/// Per-coefficient term cap for series arithmetic.
inline constexpr std::size_t kDefaultTermCap = 200000;

/// Truncated power series sum_j t^j c_j with PauliSum coefficients,
/// j = 0..max_order. Multiplication is noncommutative.
class OperatorSeries {
 public:
  OperatorSeries(unsigned n_qubits, unsigned max_order);

  static OperatorSeries identity(unsigned n_qubits, unsigned max_order);

  unsigned n_qubits() const { return n_qubits_; }
  unsigned max_order() const {
    return static_cast<unsigned>(coeffs_.size() - 1);
  }
  const PauliSum& operator[](unsigned j) const { return coeffs_.at(j); }
  const std::vector<PauliSum>& coeffs() const { return coeffs_; }
  void set(unsigned j, PauliSum value);

  /// max_abs of every coefficient of order >= 1.
  double tail_magnitude() const;

 private:
  unsigned n_qubits_;
  std::vector<PauliSum> coeffs_;
};

/// Taylor series of exp(t^time_power * g) truncated at max_order.
OperatorSeries exp_series(const PauliSum& g, unsigned time_power,
                          unsigned max_order,
                          std::size_t term_cap = kDefaultTermCap);

/// Cauchy product a*b truncated at the common max_order.
OperatorSeries mul_series(const OperatorSeries& a, const OperatorSeries& b,
                          std::size_t term_cap = kDefaultTermCap);

/// Inverse of a series with identity head, by b_j = -sum_{i=1..j} a_i b_{j-i}.
OperatorSeries invert_series(const OperatorSeries& a,
                             std::size_t term_cap = kDefaultTermCap);

/// exp(t sum X_i) = exp(t X_1) ... exp(t X_m) prod_{j>=2} exp(t^j G_j).
struct ZassenhausExpansion {
  std::vector<PauliSum> generators;
  /// G_j for j = 2..max_order, always present (possibly empty).
  std::map<unsigned, PauliSum> exponents;

  unsigned n_qubits() const { return generators.front().n_qubits(); }
  unsigned max_order() const {
    return exponents.empty() ? 1 : exponents.rbegin()->first;
  }
  const PauliSum& exponent(unsigned j) const { return exponents.at(j); }
};

enum class ZassenhausRoute {
  /// Matches the logarithmic derivative F^{-1} dF/dt = sum X_i order by
  /// order. Only nested commutators are formed, so term counts stay at the
  /// size of the generated Lie algebra.
  kAdjoint,
  /// Matches coefficients of inv(V) * exp(t sum X_i) where V is the product
  /// of all factors found so far. Needs associative powers of the
  /// generators; only practical for small inputs.
  kProductSeries,
};

/// Zassenhaus exponents through order `max_order` (>= 2). Throws
/// ConsistencyError if the residual at an already processed order does not
/// vanish and NumericLimitError if a coefficient exceeds `term_cap` terms.
ZassenhausExpansion extract_zassenhaus(
    const std::vector<PauliSum>& generators, unsigned max_order,
    ZassenhausRoute route = ZassenhausRoute::kAdjoint,
    std::size_t term_cap = kDefaultTermCap);

/// || exp(t sum X_i) - exp(t X_1)...exp(t X_m) prod_j exp(t^j G_j) ||_2.
double truncation_defect(const ZassenhausExpansion& expansion, double t,
                         unsigned dense_limit = kDefaultDenseLimit);

}  // namespace sze
