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
#include <optional>
#include <utility>
#include <vector>

#include "sze/dense.hpp"
#include "sze/pauli.hpp"
#include "sze/planner.hpp"
#include "sze/stochastic.hpp"

namespace sze {

enum class StateKind { kStateVector, kDensityMatrix };

/// Pure state vector or density matrix on n <= 12 qubits, in the basis
/// ordering of to_dense.
class DenseState {
 public:
  /// Throws ConfigError unless the vector has length 2^n and unit norm.
  static DenseState from_vector(DenseVector psi);
  /// Throws ConfigError unless rho is 2^n square, Hermitian, unit trace.
  static DenseState from_density(DenseMatrix rho);
  /// |+>^n in either representation.
  static DenseState plus_state(unsigned n_qubits, StateKind kind);

  StateKind kind() const { return kind_; }
  unsigned n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return std::size_t{1} << n_qubits_; }
  const DenseVector& vector() const;
  const DenseMatrix& density() const;
  DenseVector& vector();
  DenseMatrix& density();

  /// |psi><psi| for vectors, a copy otherwise.
  DenseMatrix to_density() const;
  DenseState as_density() const;

  /// Unit trace, Hermiticity and eigenvalue floor (or unit norm) to `tol`.
  bool is_valid(double tol = 1e-10) const;

 private:
  DenseState(StateKind kind, unsigned n_qubits)
      : kind_(kind), n_qubits_(n_qubits) {}

  StateKind kind_;
  unsigned n_qubits_;
  DenseVector vector_;
  DenseMatrix density_;
};

/// exp(-i t h) as a dense matrix.
DenseMatrix exact_evolution(const PauliSum& h, double t,
                            unsigned dense_limit = kDefaultDenseLimit);

/// Eigendecomposition of h kept for evolving to many times.
class ExactPropagator {
 public:
  explicit ExactPropagator(const PauliSum& h,
                           unsigned dense_limit = kDefaultDenseLimit);

  DenseMatrix unitary(double t) const;
  DenseState evolve(const DenseState& state, double t) const;

 private:
  unsigned n_qubits_;
  DenseMatrix vectors_;
  Eigen::VectorXd values_;
};

/// U psi or U rho U^dagger.
DenseState apply_unitary(const DenseMatrix& u, const DenseState& state);

/// In place exp(-i angle P) for a Hermitian Pauli string P, using its
/// sparse action. Throws ConfigError on a qubit count mismatch.
void apply_rotation(DenseState& state, const PauliTerm& term, double angle);

enum class StochasticMode { kExactChannel, kSampled };

/// Applies the random-unitary channel of `dist` at time t. kExactChannel
/// evaluates the full mixture and requires a density matrix; kSampled draws
/// one rotation from `rng` (required in that mode).
void apply_stochastic_factor(DenseState& state,
                             const RotationDistribution& dist, double t,
                             StochasticMode mode, Rng* rng = nullptr);

/// Runs r steps of the plan with step tau = t / r. A direct factor of
/// order m rotates each term by coefficient * duration * tau^m; a
/// stochastic factor uses theta(dist, tau).
DenseState run_plan(const ExpansionPlan& plan, double t, unsigned r,
                    const DenseState& initial, StochasticMode mode,
                    Rng* rng = nullptr);

/// Half the trace norm of the difference, with vectors promoted to
/// density matrices.
double trace_distance(const DenseState& a, const DenseState& b);

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  /// Root mean square of the log10 residuals.
  double residual = 0.0;
  std::size_t points_used = 0;
};

/// Least-squares line through (log10 x, log10 y). Throws ConfigError for
/// fewer than two points or nonpositive values.
FitResult fit_powerlaw(const std::vector<std::pair<double, double>>& points);

}  // namespace sze
