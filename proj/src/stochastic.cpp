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

#include "sze/stochastic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "sze/errors.hpp"

namespace sze {

std::uint64_t Rng::mix(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::next_u64() {
  // splitmix64 stream; each draw is a pure function of (seed, draw index).
  ++draws_;
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

RotationDistribution build_distribution(const PauliSum& h,
                                        unsigned time_power) {
  if (time_power == 0) throw ConfigError("time power must be >= 1");
  if (h.empty()) throw ConfigError("cannot build a distribution from an empty sum");
  if (!h.is_hermitian()) {
    throw ConfigError("stochastic factor requires a Hermitian sum");
  }
  RotationDistribution d;
  d.time_power = time_power;
  d.l1 = h.l1_norm();
  for (const auto& [k, c] : h.terms()) {
    const double re = c.real();
    d.entries.push_back(
        {std::abs(re) / d.l1, h.term(k).with_phase(re < 0 ? 2 : 0)});
  }
  return d;
}

double theta(const RotationDistribution& dist, double t) {
  return std::atan(std::pow(t, dist.time_power) * dist.l1);
}

SampledRotation sample(const RotationDistribution& dist, double t, Rng& rng) {
  const double u = rng.uniform();
  double acc = 0.0;
  for (const auto& e : dist.entries) {
    acc += e.probability;
    if (u < acc) return {e.term, theta(dist, t)};
  }
  return {dist.entries.back().term, theta(dist, t)};
}

DenseMatrix mixture_matrix(const RotationDistribution& dist, double t,
                           unsigned dense_limit) {
  const unsigned n = dist.n_qubits();
  check_dense_limit(n, dense_limit);
  const std::size_t dim = std::size_t{1} << n;
  const double th = theta(dist, t);
  DenseMatrix m = std::cos(th) * DenseMatrix::Identity(dim, dim);
  for (const auto& e : dist.entries) {
    m += Complex(0, -std::sin(th) * e.probability) *
         to_dense(e.term, dense_limit);
  }
  return m;
}

double approximation_defect(const PauliSum& h, unsigned time_power, double t,
                            unsigned dense_limit) {
  check_dense_limit(h.n_qubits(), dense_limit);
  if (t == 0.0) return 0.0;
  const RotationDistribution dist = build_distribution(h, time_power);
  const DenseMatrix exact =
      expm_hermitian(to_dense(h, dense_limit), std::pow(t, time_power));
  return spectral_norm(exact - mixture_matrix(dist, t, dense_limit));
}

std::vector<DenseVector> channel_probe_states(unsigned n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t all = dim - 1;
  auto basis = [&](std::size_t b) {
    DenseVector v = DenseVector::Zero(dim);
    v(b) = 1.0;
    return v;
  };
  std::vector<DenseVector> out{basis(0), basis(all)};
  DenseVector plus(dim), plus_i(dim);
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t b = 0; b < dim; ++b) {
    plus(b) = amp;
    // (|0> + i|1>)^n: amplitude i^popcount(b).
    constexpr Complex kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    plus_i(b) = amp * kI[std::popcount(b) & 3];
  }
  out.push_back(plus);
  out.push_back(plus_i);
  for (unsigned q = 0; q + 1 < n_qubits; ++q) {
    out.push_back(basis(std::size_t{1} << q));
    out.push_back(basis(all ^ (std::size_t{1} << q)));
  }
  return out;
}

double channel_defect(const PauliSum& h, unsigned time_power, double t,
                      unsigned dense_limit) {
  check_dense_limit(h.n_qubits(), dense_limit);
  if (t == 0.0) return 0.0;
  const RotationDistribution dist = build_distribution(h, time_power);
  const DenseMatrix u =
      expm_hermitian(to_dense(h, dense_limit), std::pow(t, time_power));
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  const double th = theta(dist, t);
  std::vector<DenseMatrix> rotations;
  for (const auto& e : dist.entries) {
    rotations.push_back(std::cos(th) * DenseMatrix::Identity(dim, dim) -
                        Complex(0, std::sin(th)) * to_dense(e.term, dense_limit));
  }
  double worst = 0.0;
  for (const DenseVector& psi : channel_probe_states(h.n_qubits())) {
    const DenseMatrix rho = psi * psi.adjoint();
    const DenseMatrix exact = u * rho * u.adjoint();
    DenseMatrix mixed = DenseMatrix::Zero(dim, dim);
    for (std::size_t k = 0; k < rotations.size(); ++k) {
      mixed += dist.entries[k].probability * rotations[k] * rho *
               rotations[k].adjoint();
    }
    worst = std::max(worst, trace_distance_dense(exact, mixed));
  }
  return worst;
}

}  // namespace sze
