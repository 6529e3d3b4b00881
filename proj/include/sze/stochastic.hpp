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

#include <cstdint>
#include <vector>

#include "sze/dense.hpp"
#include "sze/pauli.hpp"

namespace sze {

/// splitmix64 generator with a portable uniform draw: draw i is a pure
/// function of (seed, i). Worker streams mix the worker index into the seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(mix(seed)) {}

  static Rng stream(std::uint64_t seed, std::uint64_t worker) {
    return Rng(mix(seed ^ mix(worker + 0x632BE59BD9B4E019ULL)));
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  std::uint64_t next_u64();
  std::uint64_t seed() const { return seed_; }
  std::uint64_t draws() const { return draws_; }

 private:
  static std::uint64_t mix(std::uint64_t z);

  std::uint64_t seed_;
  std::uint64_t state_;
  std::uint64_t draws_ = 0;
};

struct RotationEntry {
  double probability;
  /// sign(c_k) P_k, so phase_exponent is 0 or 2.
  PauliTerm term;
};

/// exp(-i t^m H) ~ sum_k p_k exp(-i theta(t) P'_k), p_k = |c_k| / |H|_1.
struct RotationDistribution {
  std::vector<RotationEntry> entries;
  double l1 = 0.0;
  unsigned time_power = 1;

  unsigned n_qubits() const { return entries.front().term.n_qubits(); }
};

struct SampledRotation {
  PauliTerm term;
  double angle;
};

/// Throws ConfigError for empty or non-Hermitian input.
RotationDistribution build_distribution(const PauliSum& h,
                                        unsigned time_power);

/// arctan(t^m |H|_1), equal to arcsec(sqrt(1 + (t^m |H|_1)^2)) for t >= 0.
double theta(const RotationDistribution& dist, double t);

/// One inverse-CDF draw over the entries in canonical order.
SampledRotation sample(const RotationDistribution& dist, double t, Rng& rng);

/// Dense sum_k p_k exp(-i theta P'_k).
DenseMatrix mixture_matrix(const RotationDistribution& dist, double t,
                           unsigned dense_limit = kDefaultDenseLimit);

/// || exp(-i t^m H) - sum_k p_k exp(-i theta(t) P'_k) ||_2.
double approximation_defect(const PauliSum& h, unsigned time_power, double t,
                            unsigned dense_limit = kDefaultDenseLimit);

/// Probe states for channel_defect: |0..0>, |1..1>, |+>^n, |+i>^n, then
/// X_q|0..0> and X_q|1..1> for q = 0..n-2 (2n + 2 states in total).
std::vector<DenseVector> channel_probe_states(unsigned n_qubits);

/// Max over the probe set of the trace distance between exact conjugation
/// by exp(-i t^m H) and the random-unitary channel.
double channel_defect(const PauliSum& h, unsigned time_power, double t,
                      unsigned dense_limit = kDefaultDenseLimit);

}  // namespace sze
