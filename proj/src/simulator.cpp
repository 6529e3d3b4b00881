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

#include "sze/simulator.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "sze/errors.hpp"

namespace sze {

namespace {

const Complex kI(0.0, 1.0);

unsigned qubits_for_dimension(std::size_t dim) {
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw ConfigError("state dimension " + std::to_string(dim) +
                      " is not a power of two >= 2");
  }
  return static_cast<unsigned>(std::countr_zero(dim));
}

// f(b) with P|b> = f(b)|b ^ x>, tabulated over all basis indices.
std::vector<Complex> pauli_phases(const PauliTerm& term, std::size_t dim) {
  const int e =
      (term.phase_exponent() + std::popcount(term.x_mask() & term.z_mask())) &
      3;
  static const Complex kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex base = kPowers[e];
  std::vector<Complex> f(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    f[b] = (std::popcount(term.z_mask() & b) & 1) ? -base : base;
  }
  return f;
}

// v <- (cos - i sin P) v on one contiguous column.
void rotate_column(Complex* v, std::size_t dim, std::uint64_t x,
                   const std::vector<Complex>& f, double c, double s) {
  if (x == 0) {
    for (std::size_t r = 0; r < dim; ++r) v[r] *= Complex(c, 0) - kI * s * f[r];
    return;
  }
  const std::uint64_t high = std::bit_floor(x);
  for (std::size_t r = 0; r < dim; ++r) {
    if (r & high) continue;
    const std::size_t q = r ^ x;
    const Complex a = v[r];
    const Complex b = v[q];
    v[r] = c * a - kI * s * f[q] * b;
    v[q] = c * b - kI * s * f[r] * a;
  }
}

void check_qubits(unsigned state_n, unsigned other_n) {
  if (state_n != other_n) {
    throw ConfigError("qubit count mismatch: state has " +
                      std::to_string(state_n) + ", operator has " +
                      std::to_string(other_n));
  }
}

}  // namespace

DenseState DenseState::from_vector(DenseVector psi) {
  DenseState s(StateKind::kStateVector, qubits_for_dimension(psi.size()));
  if (std::abs(psi.norm() - 1.0) > 1e-10) {
    throw ConfigError("state vector is not normalized");
  }
  s.vector_ = std::move(psi);
  return s;
}

DenseState DenseState::from_density(DenseMatrix rho) {
  if (rho.rows() != rho.cols()) {
    throw ConfigError("density matrix is not square");
  }
  DenseState s(StateKind::kDensityMatrix, qubits_for_dimension(rho.rows()));
  if (std::abs(rho.trace() - Complex(1.0)) > 1e-10) {
    throw ConfigError("density matrix does not have unit trace");
  }
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw ConfigError("density matrix is not Hermitian");
  }
  s.density_ = std::move(rho);
  return s;
}

DenseState DenseState::plus_state(unsigned n_qubits, StateKind kind) {
  check_dense_limit(n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  DenseVector psi = DenseVector::Constant(dim, Complex(amp));
  DenseState s = from_vector(std::move(psi));
  return kind == StateKind::kStateVector ? s : s.as_density();
}

const DenseVector& DenseState::vector() const {
  if (kind_ != StateKind::kStateVector) {
    throw ConfigError("state is a density matrix");
  }
  return vector_;
}

const DenseMatrix& DenseState::density() const {
  if (kind_ != StateKind::kDensityMatrix) {
    throw ConfigError("state is a state vector");
  }
  return density_;
}

DenseVector& DenseState::vector() {
  return const_cast<DenseVector&>(std::as_const(*this).vector());
}

DenseMatrix& DenseState::density() {
  return const_cast<DenseMatrix&>(std::as_const(*this).density());
}

DenseMatrix DenseState::to_density() const {
  if (kind_ == StateKind::kDensityMatrix) return density_;
  return vector_ * vector_.adjoint();
}

DenseState DenseState::as_density() const {
  DenseState s(StateKind::kDensityMatrix, n_qubits_);
  s.density_ = to_density();
  return s;
}

bool DenseState::is_valid(double tol) const {
  if (kind_ == StateKind::kStateVector) {
    return std::abs(vector_.norm() - 1.0) <= tol;
  }
  if (std::abs(density_.trace() - Complex(1.0)) > tol) return false;
  if ((density_ - density_.adjoint()).cwiseAbs().maxCoeff() > tol) {
    return false;
  }
  const DenseMatrix herm = 0.5 * (density_ + density_.adjoint());
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(herm,
                                                    Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol;
}

DenseMatrix exact_evolution(const PauliSum& h, double t,
                            unsigned dense_limit) {
  return ExactPropagator(h, dense_limit).unitary(t);
}

ExactPropagator::ExactPropagator(const PauliSum& h, unsigned dense_limit)
    : n_qubits_(h.n_qubits()) {
  if (!h.is_hermitian()) {
    throw ConfigError("exact evolution needs a Hermitian Hamiltonian");
  }
  const DenseMatrix m = to_dense(h, dense_limit);
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(m);
  vectors_ = solver.eigenvectors();
  values_ = solver.eigenvalues();
}

DenseMatrix ExactPropagator::unitary(double t) const {
  DenseVector phases(values_.size());
  for (Eigen::Index i = 0; i < values_.size(); ++i) {
    phases[i] = std::exp(Complex(0.0, -values_[i] * t));
  }
  return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

DenseState ExactPropagator::evolve(const DenseState& state, double t) const {
  check_qubits(state.n_qubits(), n_qubits_);
  return apply_unitary(unitary(t), state);
}

DenseState apply_unitary(const DenseMatrix& u, const DenseState& state) {
  if (u.rows() != static_cast<Eigen::Index>(state.dimension())) {
    throw ConfigError("unitary dimension does not match the state");
  }
  if (state.kind() == StateKind::kStateVector) {
    DenseVector psi = u * state.vector();
    psi.normalize();
    return DenseState::from_vector(std::move(psi));
  }
  DenseMatrix rho = u * state.density() * u.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DenseState::from_density(std::move(rho));
}

void apply_rotation(DenseState& state, const PauliTerm& term, double angle) {
  check_qubits(state.n_qubits(), term.n_qubits());
  if (!term.is_hermitian()) {
    throw ConfigError("rotation generator " + term.label() +
                      " is not Hermitian");
  }
  if (angle == 0.0) return;
  const std::size_t dim = state.dimension();
  const std::vector<Complex> f = pauli_phases(term, dim);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const std::uint64_t x = term.x_mask();
  if (state.kind() == StateKind::kStateVector) {
    rotate_column(state.vector().data(), dim, x, f, c, s);
    return;
  }
  DenseMatrix& rho = state.density();
  // Rows: rho <- U rho, one column at a time.
  for (std::size_t col = 0; col < dim; ++col) {
    rotate_column(rho.col(col).data(), dim, x, f, c, s);
  }
  // Columns: rho <- rho U^dagger, column c mixes with column c ^ x.
  if (x == 0) {
    for (std::size_t col = 0; col < dim; ++col) {
      rho.col(col) *= Complex(c, 0) + kI * s * std::conj(f[col]);
    }
    return;
  }
  const std::uint64_t high = std::bit_floor(x);
  for (std::size_t col = 0; col < dim; ++col) {
    if (col & high) continue;
    const std::size_t q = col ^ x;
    const Complex fa = kI * s * std::conj(f[q]);
    const Complex fb = kI * s * std::conj(f[col]);
    for (std::size_t r = 0; r < dim; ++r) {
      const Complex a = rho(r, col);
      const Complex b = rho(r, q);
      rho(r, col) = c * a + fa * b;
      rho(r, q) = c * b + fb * a;
    }
  }
}

void apply_stochastic_factor(DenseState& state,
                             const RotationDistribution& dist, double t,
                             StochasticMode mode, Rng* rng) {
  check_qubits(state.n_qubits(), dist.n_qubits());
  if (mode == StochasticMode::kSampled) {
    if (rng == nullptr) {
      throw ConfigError("sampled mode needs a random number generator");
    }
    const SampledRotation rot = sample(dist, t, *rng);
    apply_rotation(state, rot.term, rot.angle);
    return;
  }
  if (state.kind() != StateKind::kDensityMatrix) {
    throw ConfigError("the exact channel needs a density matrix state");
  }
  // sum_k p_k U_k rho U_k^dagger = cos^2 rho + sin^2 sum_k p_k P_k rho P_k
  //   - i sin cos sum_k p_k [P'_k, rho].
  const double th = theta(dist, t);
  const double c = std::cos(th);
  const double s = std::sin(th);
  const std::size_t dim = state.dimension();
  DenseMatrix& rho = state.density();
  DenseMatrix flip = DenseMatrix::Zero(dim, dim);
  DenseMatrix comm = DenseMatrix::Zero(dim, dim);
  for (const RotationEntry& e : dist.entries) {
    const std::vector<Complex> f = pauli_phases(e.term, dim);
    const std::uint64_t x = e.term.x_mask();
    const double p = e.probability;
    for (std::size_t col = 0; col < dim; ++col) {
      const std::size_t cx = col ^ x;
      const Complex fc = p * f[col];
      for (std::size_t r = 0; r < dim; ++r) {
        const std::size_t rx = r ^ x;
        flip(r, col) += f[rx] * rho(rx, cx) * fc;
        comm(r, col) += p * f[rx] * rho(rx, col) - rho(r, cx) * fc;
      }
    }
  }
  rho = (c * c) * rho + (s * s) * flip - (kI * s * c) * comm;
}

DenseState run_plan(const ExpansionPlan& plan, double t, unsigned r,
                    const DenseState& initial, StochasticMode mode, Rng* rng) {
  if (r < 1) throw ConfigError("run_plan needs r >= 1");
  check_qubits(initial.n_qubits(), plan.n_qubits);
  const double tau = t / static_cast<double>(r);

  struct Prepared {
    std::vector<std::pair<PauliTerm, double>> rotations;
    std::optional<RotationDistribution> dist;
  };
  std::vector<Prepared> steps;
  for (const Factor& f : plan.factors) {
    Prepared p;
    if (f.mode == FactorMode::kDirect) {
      const double scale =
          f.duration * std::pow(tau, static_cast<double>(f.time_order));
      for (const auto& [key, c] : f.hamiltonian.terms()) {
        p.rotations.emplace_back(f.hamiltonian.term(key), c.real() * scale);
      }
    } else {
      p.dist = build_distribution(f.hamiltonian, f.time_order);
    }
    steps.push_back(std::move(p));
  }

  DenseState state = initial;
  for (unsigned rep = 0; rep < r; ++rep) {
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      if (it->dist) {
        apply_stochastic_factor(state, *it->dist, tau, mode, rng);
      } else {
        for (const auto& [term, angle] : it->rotations) {
          apply_rotation(state, term, angle);
        }
      }
    }
  }
  return state;
}

double trace_distance(const DenseState& a, const DenseState& b) {
  check_qubits(a.n_qubits(), b.n_qubits());
  return trace_distance_dense(a.to_density(), b.to_density());
}

FitResult fit_powerlaw(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) {
    throw ConfigError("a power-law fit needs at least two points");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<std::pair<double, double>> logs;
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0)) {
      throw ConfigError("a power-law fit needs positive values");
    }
    logs.emplace_back(std::log10(x), std::log10(y));
  }
  const double n = static_cast<double>(logs.size());
  for (const auto& [lx, ly] : logs) {
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (denom <= 0.0) {
    throw ConfigError("a power-law fit needs at least two distinct x values");
  }
  FitResult fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss = 0.0;
  for (const auto& [lx, ly] : logs) {
    const double d = ly - (fit.intercept + fit.slope * lx);
    ss += d * d;
  }
  fit.residual = std::sqrt(ss / n);
  fit.points_used = logs.size();
  return fit;
}

}  // namespace sze
