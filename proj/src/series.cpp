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

#include "sze/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sze/errors.hpp"

namespace sze {

namespace {

constexpr double kResidualTolerance = 1e-9;

void check_cap(const PauliSum& s, std::size_t cap) {
  if (s.size() > cap) {
    throw NumericLimitError("series coefficient has " +
                            std::to_string(s.size()) +
                            " terms, exceeding the cap of " +
                            std::to_string(cap));
  }
}

// T <- exp(-t^m ad_Y) T + m t^{m-1} Y, truncated at T.size() - 1.
void conjugate_and_append(std::vector<PauliSum>& t_series, const PauliSum& y,
                          unsigned m, std::size_t cap) {
  const unsigned top = static_cast<unsigned>(t_series.size() - 1);
  std::vector<PauliSum> out(t_series.size(), PauliSum(y.n_qubits()));
  for (unsigned i = 0; i <= top; ++i) {
    if (t_series[i].empty()) continue;
    out[i] = out[i] + t_series[i];
    if (y.empty()) continue;
    PauliSum nested = t_series[i];
    for (unsigned q = 1; i + m * q <= top; ++q) {
      nested = commutator(y, nested) * Complex(-1.0 / q);
      if (nested.empty()) break;
      check_cap(nested, cap);
      out[i + m * q] = out[i + m * q] + nested;
    }
  }
  if (m - 1 <= top) out[m - 1] = out[m - 1] + y * Complex(m);
  t_series = std::move(out);
}

double generator_scale(const std::vector<PauliSum>& gens) {
  double s = 0.0;
  for (const auto& g : gens) s += g.l1_norm();
  return std::max(1.0, s);
}

ZassenhausExpansion extract_adjoint(const std::vector<PauliSum>& gens,
                                    unsigned max_order, std::size_t cap) {
  const unsigned n = gens.front().n_qubits();
  PauliSum total(n);
  for (const auto& g : gens) total = total + g;
  const double scale = generator_scale(gens);

  // t_series[j] is the t^j coefficient of F^{-1} dF/dt for the partial
  // product F built so far; orders 0..max_order-1 are needed.
  std::vector<PauliSum> t_series(max_order, PauliSum(n));
  for (const auto& g : gens) conjugate_and_append(t_series, g, 1, cap);

  ZassenhausExpansion out{gens, {}};
  for (unsigned j = 2; j <= max_order; ++j) {
    const PauliSum g_j = t_series[j - 1] * Complex(-1.0 / j);
    conjugate_and_append(t_series, g_j, j, cap);
    out.exponents.emplace(j, g_j);
    for (unsigned i = 1; i < j; ++i) {
      const double r = t_series[i].max_abs();
      if (r > kResidualTolerance * std::pow(scale, i + 1)) {
        throw ConsistencyError("Zassenhaus residual " + std::to_string(r) +
                               " at order " + std::to_string(i + 1) +
                               " after extracting order " + std::to_string(j));
      }
    }
  }
  if (t_series[0].distance(total) > kResidualTolerance * scale) {
    throw ConsistencyError("Zassenhaus leading coefficient drifted");
  }
  return out;
}

void check_product_residual(const OperatorSeries& r, unsigned through,
                            double scale) {
  for (unsigned i = 1; i <= through; ++i) {
    const double v = r[i].max_abs();
    if (v > kResidualTolerance * std::pow(scale, i)) {
      throw ConsistencyError("Zassenhaus residual " + std::to_string(v) +
                             " at order " + std::to_string(i));
    }
  }
}

ZassenhausExpansion extract_product(const std::vector<PauliSum>& gens,
                                    unsigned max_order, std::size_t cap) {
  const unsigned n = gens.front().n_qubits();
  PauliSum total(n);
  for (const auto& g : gens) total = total + g;
  const double scale = generator_scale(gens);

  const OperatorSeries target = exp_series(total, 1, max_order, cap);
  OperatorSeries v = OperatorSeries::identity(n, max_order);
  for (const auto& g : gens) v = mul_series(v, exp_series(g, 1, max_order, cap), cap);

  ZassenhausExpansion out{gens, {}};
  for (unsigned j = 2; j <= max_order; ++j) {
    const OperatorSeries r = mul_series(invert_series(v, cap), target, cap);
    check_product_residual(r, j - 1, scale);
    out.exponents.emplace(j, r[j]);
    v = mul_series(v, exp_series(r[j], j, max_order, cap), cap);
  }
  check_product_residual(mul_series(invert_series(v, cap), target, cap),
                         max_order, scale);
  return out;
}

}  // namespace

OperatorSeries::OperatorSeries(unsigned n_qubits, unsigned max_order)
    : n_qubits_(n_qubits), coeffs_(max_order + 1, PauliSum(n_qubits)) {}

OperatorSeries OperatorSeries::identity(unsigned n_qubits,
                                        unsigned max_order) {
  OperatorSeries s(n_qubits, max_order);
  s.set(0, PauliSum::identity(n_qubits));
  return s;
}

void OperatorSeries::set(unsigned j, PauliSum value) {
  check_same_qubits(n_qubits_, value.n_qubits());
  coeffs_.at(j) = std::move(value);
}

double OperatorSeries::tail_magnitude() const {
  double m = 0.0;
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    m = std::max(m, coeffs_[j].max_abs());
  }
  return m;
}

OperatorSeries exp_series(const PauliSum& g, unsigned time_power,
                          unsigned max_order, std::size_t term_cap) {
  if (time_power == 0) throw ConfigError("exp_series: time_power must be >= 1");
  OperatorSeries s = OperatorSeries::identity(g.n_qubits(), max_order);
  if (g.empty()) return s;
  PauliSum power = PauliSum::identity(g.n_qubits());
  for (unsigned j = 1; j * time_power <= max_order; ++j) {
    power = multiply_capped(power, g, term_cap) * Complex(1.0 / j);
    s.set(j * time_power, power);
  }
  return s;
}

OperatorSeries mul_series(const OperatorSeries& a, const OperatorSeries& b,
                          std::size_t term_cap) {
  check_same_qubits(a.n_qubits(), b.n_qubits());
  if (a.max_order() != b.max_order()) {
    throw ConfigError("mul_series: max_order mismatch");
  }
  const unsigned top = a.max_order();
  OperatorSeries out(a.n_qubits(), top);
  for (unsigned k = 0; k <= top; ++k) {
    PauliSum acc(a.n_qubits());
    for (unsigned i = 0; i <= k; ++i) {
      if (a[i].empty() || b[k - i].empty()) continue;
      acc = acc + multiply_capped(a[i], b[k - i], term_cap);
      check_cap(acc, term_cap);
    }
    out.set(k, std::move(acc));
  }
  return out;
}

OperatorSeries invert_series(const OperatorSeries& a, std::size_t term_cap) {
  const unsigned n = a.n_qubits();
  if (a[0].distance(PauliSum::identity(n)) > 1e-12) {
    throw ConfigError("invert_series: leading coefficient is not the identity");
  }
  const unsigned top = a.max_order();
  OperatorSeries b = OperatorSeries::identity(n, top);
  for (unsigned j = 1; j <= top; ++j) {
    PauliSum acc(n);
    for (unsigned i = 1; i <= j; ++i) {
      if (a[i].empty() || b[j - i].empty()) continue;
      acc = acc - multiply_capped(a[i], b[j - i], term_cap);
      check_cap(acc, term_cap);
    }
    b.set(j, std::move(acc));
  }
  return b;
}

ZassenhausExpansion extract_zassenhaus(const std::vector<PauliSum>& generators,
                                       unsigned max_order,
                                       ZassenhausRoute route,
                                       std::size_t term_cap) {
  if (generators.empty()) {
    throw ConfigError("extract_zassenhaus: no generators");
  }
  if (max_order < 2) {
    throw ConfigError("extract_zassenhaus: max_order must be >= 2");
  }
  for (const auto& g : generators) {
    check_same_qubits(generators.front().n_qubits(), g.n_qubits());
  }
  return route == ZassenhausRoute::kAdjoint
             ? extract_adjoint(generators, max_order, term_cap)
             : extract_product(generators, max_order, term_cap);
}

double truncation_defect(const ZassenhausExpansion& expansion, double t,
                         unsigned dense_limit) {
  const unsigned n = expansion.n_qubits();
  check_dense_limit(n, dense_limit);
  PauliSum total(n);
  for (const auto& g : expansion.generators) total = total + g;
  const DenseMatrix exact = expm(Complex(t) * to_dense(total, dense_limit));
  const std::size_t dim = std::size_t{1} << n;
  DenseMatrix prod = DenseMatrix::Identity(dim, dim);
  for (const auto& g : expansion.generators) {
    prod = prod * expm(Complex(t) * to_dense(g, dense_limit));
  }
  for (const auto& [j, g] : expansion.exponents) {
    if (g.empty()) continue;
    prod = prod * expm(Complex(std::pow(t, j)) * to_dense(g, dense_limit));
  }
  return spectral_norm(exact - prod);
}

}  // namespace sze
