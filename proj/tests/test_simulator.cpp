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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "sze/dense.hpp"
#include "sze/errors.hpp"
#include "sze/models.hpp"
#include "sze/planner.hpp"
#include "sze/simulator.hpp"
#include "extended.hpp"
#include "testutil.hpp"

namespace sze {
namespace test_simulator {

namespace {

const Complex kI(0.0, 1.0);

DenseState plus_density(unsigned n) {
  return DenseState::plus_state(n, StateKind::kDensityMatrix);
}

double single_step_error(const ExpansionPlan& plan, const PauliSum& total,
                         double t) {
  const DenseState init = plus_density(plan.n_qubits);
  const DenseState exact = ExactPropagator(total).evolve(init, t);
  return trace_distance(
      run_plan(plan, t, 1, init, StochasticMode::kExactChannel), exact);
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < xs.size(); ++i) pts.emplace_back(xs[i], ys[i]);
  return fit_powerlaw(pts).slope;
}

}  // namespace

SCENARIO("Exact evolution", "[simulator]") {
  GIVEN("Zero time") {
    const DenseMatrix u = exact_evolution(tfim(3, 1.0, 1.0).total, 0.0);
    REQUIRE((u - DenseMatrix::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-14);
  }
  GIVEN("A single Z") {
    const DenseMatrix u =
        exact_evolution(PauliSum::from_terms(1, {{1.0, "Z0"}}), M_PI / 2);
    REQUIRE(std::abs(u(0, 0) - std::exp(-kI * M_PI / 2.0)) < 1e-15);
    REQUIRE(std::abs(u(1, 1) - std::exp(kI * M_PI / 2.0)) < 1e-15);
    REQUIRE(std::abs(u(0, 1)) < 1e-15);
  }
  GIVEN("The two-site Ising chain") {
    const PauliSum h = tfim(2, 1.0, 1.0).total;
    for (double t : {0.1, 0.7, 3.0}) {
      const DenseMatrix u = exact_evolution(h, t);
      REQUIRE((u - testutil::taylor_evolution(testutil::kron_dense(h), t))
                  .cwiseAbs()
                  .maxCoeff() < 1e-10);
      REQUIRE((u.adjoint() * u - DenseMatrix::Identity(4, 4)).norm() < 1e-10);
    }
  }
  GIVEN("Non-Hermitian input") {
    REQUIRE_THROWS_AS(
        exact_evolution(PauliSum::from_terms(1, {{kI, "Z0"}}), 1.0),
        ConfigError);
  }
}

SCENARIO("Pauli rotations", "[simulator]") {
  GIVEN("A zero angle") {
    testutil::Engine rng(51);
    DenseState s = DenseState::from_vector(testutil::random_state(3, rng));
    const DenseVector before = s.vector();
    apply_rotation(s, PauliTerm::parse(3, "X0 Y2"), 0.0);
    REQUIRE(s.vector() == before);
  }
  GIVEN("X on |0> by a quarter turn") {
    DenseVector zero = DenseVector::Zero(2);
    zero[0] = 1.0;
    DenseState s = DenseState::from_vector(zero);
    apply_rotation(s, PauliTerm::parse(1, "X0"), M_PI / 2);
    REQUIRE(std::abs(s.vector()[0]) < 1e-15);
    REQUIRE(std::abs(s.vector()[1] - (-kI)) < 1e-15);
  }
  GIVEN("Random states and terms against dense evolution") {
    testutil::Engine rng(52);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    for (int trial = 0; trial < 30; ++trial) {
      const unsigned n = 1 + trial % 6;
      PauliTerm p = testutil::random_term(n, rng);
      if (trial < 6) {
        // Weight-3 terms on six qubits.
        p = PauliTerm::parse(6, trial % 2 ? "X0 Y3 Z5" : "Z1 Z2 Y4");
      }
      const unsigned nq = p.n_qubits();
      const double a = angle(rng);
      const auto u = testutil::taylor_evolution(testutil::kron_dense(p), a);
      const DenseVector psi = testutil::random_state(nq, rng);
      DenseState s = DenseState::from_vector(psi);
      apply_rotation(s, p, a);
      REQUIRE((s.vector() - u * psi).cwiseAbs().maxCoeff() < 1e-12);
      const DenseMatrix rho = testutil::random_density(nq, rng);
      DenseState r = DenseState::from_density(rho);
      apply_rotation(r, p, a);
      REQUIRE((r.density() - u * rho * u.adjoint()).cwiseAbs().maxCoeff() <
              1e-12);
    }
  }
  GIVEN("Mismatched sizes and non-Hermitian strings") {
    DenseState s = plus_density(2);
    REQUIRE_THROWS_AS(apply_rotation(s, PauliTerm::parse(3, "X0"), 0.1),
                      ConfigError);
    REQUIRE_THROWS_AS(apply_rotation(s, PauliTerm(2, 1, 0, 1), 0.1),
                      ConfigError);
  }
}

SCENARIO("State validation", "[simulator]") {
  REQUIRE_THROWS_AS(DenseState::from_vector(DenseVector::Ones(4)),
                    ConfigError);
  REQUIRE_THROWS_AS(DenseState::from_vector(DenseVector::Ones(3) / std::sqrt(3.0)),
                    ConfigError);
  REQUIRE_THROWS_AS(DenseState::from_density(DenseMatrix::Identity(4, 4)),
                    ConfigError);
  const DenseState p = DenseState::plus_state(3, StateKind::kStateVector);
  REQUIRE(p.is_valid());
  REQUIRE(p.as_density().is_valid());
  REQUIRE_THROWS_AS(p.density(), ConfigError);
}

SCENARIO("Stochastic factors", "[simulator][stochastic]") {
  GIVEN("A single entry") {
    const auto d =
        build_distribution(PauliSum::from_terms(2, {{-0.8, "Y0 X1"}}), 2);
    DenseState a = plus_density(2);
    DenseState b = plus_density(2);
    Rng rng(3);
    apply_stochastic_factor(a, d, 0.7, StochasticMode::kExactChannel);
    apply_stochastic_factor(b, d, 0.7, StochasticMode::kSampled, &rng);
    REQUIRE((a.density() - b.density()).cwiseAbs().maxCoeff() < 1e-14);
  }
  GIVEN("The exact channel against the dense mixture") {
    testutil::Engine rng(53);
    for (int trial = 0; trial < 10; ++trial) {
      const unsigned n = 1 + trial % 4;
      const PauliSum h = testutil::random_sum(n, 6, rng);
      const auto d = build_distribution(h, 1 + trial % 3);
      const DenseMatrix rho = testutil::random_density(n, rng);
      DenseState s = DenseState::from_density(rho);
      apply_stochastic_factor(s, d, 0.4, StochasticMode::kExactChannel);
      DenseMatrix expected = DenseMatrix::Zero(rho.rows(), rho.cols());
      for (const auto& e : d.entries) {
        const auto u = testutil::taylor_evolution(testutil::kron_dense(e.term),
                                                  theta(d, 0.4));
        expected += e.probability * u * rho * u.adjoint();
      }
      REQUIRE((s.density() - expected).cwiseAbs().maxCoeff() < 1e-12);
      REQUIRE(std::abs(s.density().trace() - Complex(1.0)) < 1e-10);
      REQUIRE(s.is_valid());
    }
  }
  GIVEN("Mode and kind mismatches") {
    const auto d = build_distribution(PauliSum::from_terms(1, {{1.0, "Z0"}}), 1);
    DenseState v = DenseState::plus_state(1, StateKind::kStateVector);
    REQUIRE_THROWS_AS(
        apply_stochastic_factor(v, d, 0.1, StochasticMode::kExactChannel),
        ConfigError);
    REQUIRE_THROWS_AS(
        apply_stochastic_factor(v, d, 0.1, StochasticMode::kSampled),
        ConfigError);
    Rng rng(1);
    REQUIRE_NOTHROW(
        apply_stochastic_factor(v, d, 0.1, StochasticMode::kSampled, &rng));
  }
  GIVEN("Averaged samples of a four-qubit step") {
    const LayeredHamiltonian m = tfim(4, 1.0, 1.0);
    const ExpansionPlan plan = build_sze(m.layers, 1, 3, m.names);
    const DenseState init = plus_density(4);
    const DenseState exact =
        run_plan(plan, 0.6, 1, init, StochasticMode::kExactChannel);
    DenseMatrix mean = DenseMatrix::Zero(16, 16);
    Rng rng(99);
    const int samples = 10000;
    for (int i = 0; i < samples; ++i) {
      mean += run_plan(plan, 0.6, 1, init, StochasticMode::kSampled, &rng)
                  .density();
    }
    mean /= samples;
    REQUIRE(trace_distance_dense(mean, exact.density()) < 2e-2);
  }
}

SCENARIO("Plan execution", "[simulator][plan]") {
  GIVEN("A single commuting layer") {
    const PauliSum z = PauliSum::from_terms(
        3, {{0.3, "Z0 Z1"}, {-0.7, "Z2"}, {0.2, "Z0 Z1 Z2"}});
    const DenseState init = DenseState::plus_state(3, StateKind::kStateVector);
    const DenseState exact = ExactPropagator(z).evolve(init, 1.3);
    for (const ExpansionPlan& plan : {build_sze({z}, 2, 4), build_pf({z}, 4)}) {
      for (unsigned r : {1u, 3u}) {
        const DenseState out =
            run_plan(plan, 1.3, r, init, StochasticMode::kSampled);
        REQUIRE(trace_distance(out, exact) < 1e-10);
      }
    }
  }
  GIVEN("Second-order Trotter with more steps") {
    const LayeredHamiltonian m = tfim(4, 1.0, 1.0);
    const ExpansionPlan plan = build_pf(m.layers, 2);
    const DenseState init = plus_density(4);
    const DenseState exact = ExactPropagator(m.total).evolve(init, 1.0);
    std::vector<double> rs;
    std::vector<double> errs;
    for (unsigned r : {4u, 8u, 16u}) {
      rs.push_back(r);
      errs.push_back(trace_distance(
          run_plan(plan, 1.0, r, init, StochasticMode::kExactChannel), exact));
    }
    REQUIRE(std::abs(fit_slope(rs, errs) + 2.0) < 0.3);
  }
  GIVEN("Single-step time scaling of nested plans") {
    std::vector<double> ts;
    for (int i = 0; i < 5; ++i) ts.push_back(0.003 * std::pow(1.25, i));
    for (unsigned n : {4u, 6u}) {
      const LayeredHamiltonian m = tfim(n, 1.0, 1.0);
      for (auto [k, p] : std::vector<std::pair<unsigned, unsigned>>{
               {1, 2}, {1, 3}, {2, 4}}) {
        std::vector<double> errs;
        const ExpansionPlan plan = build_sze(m.layers, k, p, m.names);
        for (double t : ts) errs.push_back(single_step_error(plan, m.total, t));
        const double s = fit_slope(ts, errs);
        INFO("n " << n << " SZE_{" << k << "," << p << "} slope " << s);
        REQUIRE(std::abs(s - (p + 1.0)) < 0.3);
      }
    }
  }
  GIVEN("A sixth-order plan below the double precision floor") {
    const LayeredHamiltonian m = tfim(4, 1.0, 1.0);
    const ExpansionPlan plan = build_sze(m.layers, 3, 6, m.names);
    std::vector<double> ts;
    std::vector<double> errs;
    for (int i = 0; i < 5; ++i) {
      const double t = 0.003 * std::pow(1.25, i);
      ts.push_back(t);
      errs.push_back(testutil::extended_step_error(plan, m.total, t));
    }
    const double s = fit_slope(ts, errs);
    INFO("SZE_{3,6} slope " << s);
    REQUIRE(std::abs(s - 7.0) < 0.3);
    // Above the floor both evaluations agree.
    const double t = 0.012;
    const double ext = testutil::extended_step_error(plan, m.total, t);
    REQUIRE(std::abs(single_step_error(plan, m.total, t) - ext) <
            1e-3 * ext + 1e-14);
  }
  GIVEN("Continuity at small time") {
    const LayeredHamiltonian m = tfim(4, 1.0, 1.0);
    for (const ExpansionPlan& plan :
         {build_pf(m.layers, 1), build_pf(m.layers, 4),
          build_sze(m.layers, 1, 3), build_sze(m.layers, 3, 6)}) {
      REQUIRE(single_step_error(plan, m.total, 1e-4) < 1e-6);
    }
  }
  GIVEN("Repeated runs") {
    const LayeredHamiltonian m = tfim(5, 1.0, 0.7);
    const ExpansionPlan plan = build_sze(m.layers, 2, 5);
    const DenseState init = plus_density(5);
    const DenseState a =
        run_plan(plan, 0.4, 3, init, StochasticMode::kExactChannel);
    const DenseState b =
        run_plan(plan, 0.4, 3, init, StochasticMode::kExactChannel);
    REQUIRE(a.density() == b.density());
    REQUIRE(a.is_valid());
    Rng r1(8);
    Rng r2(8);
    const DenseState v = DenseState::plus_state(5, StateKind::kStateVector);
    REQUIRE(run_plan(plan, 0.4, 3, v, StochasticMode::kSampled, &r1).vector() ==
            run_plan(plan, 0.4, 3, v, StochasticMode::kSampled, &r2).vector());
  }
  GIVEN("Invalid arguments") {
    const LayeredHamiltonian m = tfim(3, 1.0, 1.0);
    const ExpansionPlan plan = build_pf(m.layers, 2);
    REQUIRE_THROWS_AS(
        run_plan(plan, 0.1, 0, plus_density(3), StochasticMode::kExactChannel),
        ConfigError);
    REQUIRE_THROWS_AS(
        run_plan(plan, 0.1, 1, plus_density(2), StochasticMode::kExactChannel),
        ConfigError);
  }
}

SCENARIO("Trace distance", "[simulator]") {
  DenseVector zero = DenseVector::Zero(2);
  zero[0] = 1.0;
  DenseVector one = DenseVector::Zero(2);
  one[1] = 1.0;
  const DenseState s0 = DenseState::from_vector(zero);
  const DenseState s1 = DenseState::from_vector(one);
  const DenseState plus = DenseState::plus_state(1, StateKind::kDensityMatrix);
  REQUIRE(trace_distance(s0, s0) < 1e-15);
  REQUIRE(trace_distance(s0, s1) == Catch::Approx(1.0).epsilon(1e-14));
  REQUIRE(trace_distance(s0, plus) ==
          Catch::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  REQUIRE(trace_distance(plus, s0) == trace_distance(s0, plus));
  testutil::Engine rng(54);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = testutil::random_density(3, rng);
    const auto b = testutil::random_density(3, rng);
    REQUIRE(trace_distance(DenseState::from_density(a),
                           DenseState::from_density(b)) ==
            Catch::Approx(testutil::svd_trace_distance(a, b)).epsilon(1e-10));
  }
  REQUIRE_THROWS_AS(trace_distance(s0, plus_density(2)), ConfigError);
}

SCENARIO("Power-law fits", "[simulator][fit]") {
  GIVEN("An exact square law") {
    const FitResult f = fit_powerlaw({{1.0, 1.0}, {2.0, 4.0}, {3.0, 9.0}});
    REQUIRE(std::abs(f.slope - 2.0) < 1e-9);
    REQUIRE(std::abs(f.intercept) < 1e-9);
    REQUIRE(f.points_used == 3);
    REQUIRE(f.residual < 1e-12);
  }
  GIVEN("A noisy cube law") {
    testutil::Engine rng(55);
    std::uniform_real_distribution<double> noise(-0.01, 0.01);
    std::vector<std::pair<double, double>> pts;
    for (double x = 0.1; x < 1.0; x += 0.1) {
      pts.emplace_back(x, 5 * x * x * x * (1 + noise(rng)));
    }
    REQUIRE(std::abs(fit_powerlaw(pts).slope - 3.0) < 0.05);
  }
  GIVEN("Invalid input") {
    REQUIRE_THROWS_AS(fit_powerlaw({{1.0, 1.0}}), ConfigError);
    REQUIRE_THROWS_AS(fit_powerlaw({{1.0, 1.0}, {2.0, 0.0}}), ConfigError);
    REQUIRE_THROWS_AS(fit_powerlaw({{1.0, 1.0}, {1.0, 2.0}}), ConfigError);
  }
}

}  // namespace test_simulator
}  // namespace sze
