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

#include "sze/dense.hpp"
#include "sze/errors.hpp"
#include "sze/models.hpp"
#include "sze/pauli.hpp"
#include "testutil.hpp"

namespace sze {
namespace test_pauli {

using testutil::kron_dense;

SCENARIO("Single-site Pauli products", "[pauli]") {
  GIVEN("X0 times Y0") {
    const PauliTerm r = multiply(PauliTerm::parse(2, "X0"),
                                 PauliTerm::parse(2, "Y0"));
    REQUIRE(r.phase_exponent() == 1);
    REQUIRE(r.z_mask() == 1);
    REQUIRE(r.x_mask() == 0);
  }
  GIVEN("The identity on either side") {
    const PauliTerm p = PauliTerm::parse(3, "Y0 Z2");
    REQUIRE(multiply(PauliTerm(3), p) == p);
    REQUIRE(multiply(p, PauliTerm(3)) == p);
  }
  GIVEN("Z0Z1 times X0") {
    // ZX = iY on qubit 0.
    const PauliTerm a = PauliTerm::parse(2, "Z0 Z1");
    const PauliTerm b = PauliTerm::parse(2, "X0");
    const PauliTerm r = multiply(a, b);
    REQUIRE(r.label() == "Y0 Z1");
    REQUIRE(r.phase() == Complex(0, 1));
    REQUIRE((kron_dense(r) - kron_dense(a) * kron_dense(b)).norm() < 1e-14);
  }
  GIVEN("A string times itself") {
    const PauliTerm p = PauliTerm::parse(4, "X0 Y1 Z3");
    const PauliTerm sq = multiply(p, p);
    REQUIRE(sq.x_mask() == 0);
    REQUIRE(sq.z_mask() == 0);
    REQUIRE(sq.phase_exponent() % 2 == 0);
  }
}

SCENARIO("Pauli term construction and validation", "[pauli]") {
  GIVEN("Masks beyond the qubit count") {
    REQUIRE_THROWS_AS(PauliTerm(2, 4, 0), ConfigError);
    REQUIRE_THROWS_AS(PauliTerm(0), ConfigError);
    REQUIRE_THROWS_AS(PauliTerm(65), ConfigError);
  }
  GIVEN("Parsing labels") {
    const PauliTerm p = PauliTerm::parse(5, "Z4 X0 Y2");
    REQUIRE(p.weight() == 3);
    REQUIRE(p.label() == "X0 Y2 Z4");
    REQUIRE(p.letter(1) == 'I');
    REQUIRE(PauliTerm(5).label() == "I");
    REQUIRE_THROWS_AS(PauliTerm::parse(2, "X0 Z0"), ConfigError);
    REQUIRE_THROWS_AS(PauliTerm::parse(2, "X2"), ConfigError);
    REQUIRE_THROWS_AS(PauliTerm::parse(2, "Q0"), ConfigError);
  }
  GIVEN("Mismatched qubit counts") {
    REQUIRE_THROWS_AS(multiply(PauliTerm(2), PauliTerm(3)), ConfigError);
    REQUIRE_THROWS_AS(commutes(PauliTerm(2), PauliTerm(3)), ConfigError);
  }
  GIVEN("64-qubit strings") {
    const PauliTerm a = PauliTerm::single(64, 63, 'X');
    const PauliTerm b = PauliTerm::single(64, 63, 'Z');
    REQUIRE_FALSE(commutes(a, b));
    REQUIRE(multiply(a, b).x_mask() == (std::uint64_t{1} << 63));
  }
}

SCENARIO("Commutation predicate", "[pauli]") {
  const auto t = [](const char* s) { return PauliTerm::parse(3, s); };
  GIVEN("Known pairs") {
    REQUIRE(commutes(t("Z0 Z1"), t("Z1 Z2")));
    REQUIRE_FALSE(commutes(t("Z0 Z1"), t("X0")));
    REQUIRE(commutes(t("Y0 Z1"), t("Z0 Y1")));
  }
  GIVEN("The dense commutator of known pairs") {
    const auto norm = [&](const char* a, const char* b) {
      const auto ma = kron_dense(t(a));
      const auto mb = kron_dense(t(b));
      return (ma * mb - mb * ma).norm();
    };
    REQUIRE(norm("Z0 Z1", "X0") > 1.0);
    REQUIRE(norm("Y0 Z1", "Z0 Y1") < 1e-14);
  }
}

SCENARIO("Random Pauli algebra against Kronecker matrices", "[pauli][oracle]") {
  testutil::Engine rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned n = 1 + trial % 6;
    const PauliTerm p = testutil::random_term(n, rng, false);
    const PauliTerm q = testutil::random_term(n, rng, false);
    const auto mp = kron_dense(p);
    const auto mq = kron_dense(q);
    REQUIRE((kron_dense(multiply(p, q)) - mp * mq).cwiseAbs().maxCoeff() <
            1e-12);
    REQUIRE((to_dense(p) - mp).cwiseAbs().maxCoeff() < 1e-14);
    REQUIRE(commutes(p, q) == ((mp * mq - mq * mp).norm() < 1e-12));
    const PauliTerm r = testutil::random_term(n, rng, false);
    REQUIRE(multiply(multiply(p, q), r) == multiply(p, multiply(q, r)));
  }
}

SCENARIO("Pauli sums", "[pauli]") {
  GIVEN("Pruning and canonical storage") {
    const PauliSum a = PauliSum::from_terms(2, {{1.0, "Z0"}, {-1.0, "Z0"}});
    REQUIRE(a.empty());
    const PauliSum b =
        PauliSum::from_terms(2, {{0.5, "Z0"}, {-0.25, "X1"}, {0.25, "X1"}});
    REQUIRE(b.size() == 1);
    REQUIRE(b.coefficient("Z0") == Complex(0.5));
    REQUIRE(b.coefficient("X1") == Complex(0.0));
  }
  GIVEN("A term with an explicit phase") {
    const PauliSum s = PauliSum::from_term(PauliTerm(1, 1, 0, 2), 3.0);
    REQUIRE(s.coefficient("X0") == Complex(-3.0));
  }
  GIVEN("The l1 norm") {
    REQUIRE(l1_norm(PauliSum(3)) == 0.0);
    REQUIRE(l1_norm(PauliSum::from_terms(1, {{0.5, "Z0"}, {-0.25, "X0"}})) ==
            0.75);
  }
  GIVEN("Hermiticity flags") {
    const PauliSum h = PauliSum::from_terms(2, {{1.0, "Z0"}, {-2.0, "X1"}});
    REQUIRE(h.is_hermitian());
    REQUIRE_FALSE(h.is_anti_hermitian());
    REQUIRE((h * Complex(0, 1)).is_anti_hermitian());
  }
  GIVEN("Mismatched qubit counts") {
    REQUIRE_THROWS_AS(PauliSum(2) + PauliSum(3), ConfigError);
    REQUIRE_THROWS_AS(commutator(PauliSum(2), PauliSum(3)), ConfigError);
  }
}

SCENARIO("Commutators of the Ising layers", "[pauli][golden]") {
  GIVEN("n = 3 with unit couplings") {
    const LayeredHamiltonian m = tfim(3, 1.0, 1.0);
    const PauliSum& a = m.layers[0];
    const PauliSum& b = m.layers[1];
    REQUIRE(commutator(a, a).empty());
    const PauliSum expected = PauliSum::from_terms(
        3, {{{0, 2}, "Y0 Z1"},
            {{0, 2}, "Z0 Y1"},
            {{0, 2}, "Y1 Z2"},
            {{0, 2}, "Z1 Y2"}});
    REQUIRE(commutator(a, b).distance(expected) < 1e-15);
  }
}

SCENARIO("Random sum arithmetic against dense matrices", "[pauli][oracle]") {
  testutil::Engine rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned n = 1 + trial % 6;
    const PauliSum a = testutil::random_sum(n, 1 + trial % 20, rng, false);
    const PauliSum b = testutil::random_sum(n, 1 + (trial * 7) % 20, rng,
                                            false);
    const auto ma = kron_dense(a);
    const auto mb = kron_dense(b);
    const double scale = 1.0 + ma.norm() * mb.norm();
    REQUIRE((kron_dense(a * b) - ma * mb).cwiseAbs().maxCoeff() <
            1e-12 * scale);
    REQUIRE((kron_dense(a + b) - (ma + mb)).cwiseAbs().maxCoeff() < 1e-12 *
                                                                       scale);
    REQUIRE((kron_dense(commutator(a, b)) - (ma * mb - mb * ma))
                .cwiseAbs()
                .maxCoeff() < 1e-12 * scale);
    REQUIRE((to_dense(a) - ma).cwiseAbs().maxCoeff() < 1e-12 * scale);
  }
}

SCENARIO("Commutators of Hermitian sums are anti-Hermitian", "[pauli]") {
  testutil::Engine rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned n = 2 + trial % 5;
    const PauliSum a = testutil::random_sum(n, 12, rng);
    const PauliSum b = testutil::random_sum(n, 12, rng);
    const PauliSum c = commutator(a, b);
    for (const auto& [key, coeff] : c.terms()) {
      REQUIRE(std::abs(coeff.real()) < 1e-12);
    }
    const PauliSum d = commutator(a * 2.0 + b, b);
    REQUIRE(d.distance(commutator(a, b) * 2.0) < 1e-12);
  }
}

SCENARIO("The l1 norm bounds the spectral norm", "[pauli][oracle]") {
  testutil::Engine rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const PauliSum h = testutil::random_sum(1 + trial % 5, 10, rng);
    REQUIRE(spectral_norm(to_dense(h)) <= h.l1_norm() + 1e-12);
  }
}

SCENARIO("Dense conversion", "[pauli][dense]") {
  GIVEN("Small cases") {
    REQUIRE(to_dense(PauliSum::identity(1)).isApprox(
        DenseMatrix::Identity(2, 2)));
    DenseMatrix z(2, 2);
    z << 1, 0, 0, -1;
    REQUIRE(to_dense(PauliSum::from_terms(1, {{1.0, "Z0"}})).isApprox(z));
  }
  GIVEN("The two-site Ising chain") {
    // -Z0Z1 - X0 - X1 has spectrum {+-sqrt(5), +-1} at J = h = 1.
    const DenseMatrix h = to_dense(tfim(2, 1.0, 1.0).total);
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(h);
    const Eigen::VectorXd ev = solver.eigenvalues();
    REQUIRE(ev[0] == Catch::Approx(-std::sqrt(5.0)).epsilon(1e-12));
    REQUIRE(ev[1] == Catch::Approx(-1.0).epsilon(1e-12));
    REQUIRE(ev[2] == Catch::Approx(1.0).epsilon(1e-12));
    REQUIRE(ev[3] == Catch::Approx(std::sqrt(5.0)).epsilon(1e-12));
  }
  GIVEN("The dense limit") {
    REQUIRE_THROWS_AS(to_dense(PauliSum(13)), NumericLimitError);
    REQUIRE_NOTHROW(check_dense_limit(13, 13));
  }
  GIVEN("Matrix exponentials against a Taylor oracle") {
    testutil::Engine rng(15);
    const PauliSum h = testutil::random_sum(3, 8, rng);
    const DenseMatrix m = to_dense(h);
    REQUIRE((expm_hermitian(m, 0.7) - testutil::taylor_evolution(m, 0.7))
                .cwiseAbs()
                .maxCoeff() < 1e-10);
    const DenseMatrix g = to_dense(testutil::random_sum(3, 8, rng, false));
    REQUIRE((expm(g) - testutil::taylor_expm(g)).cwiseAbs().maxCoeff() <
            1e-9 * testutil::taylor_expm(g).norm());
  }
}

SCENARIO("Pauli text format", "[pauli][io]") {
  GIVEN("A round trip") {
    const PauliSum s = PauliSum::from_terms(
        3, {{-1.0, "Z0 Z1"}, {{0.5, 0.25}, "X2"}, {{0, -2}, "Y1"}, {3, ""}});
    const std::string text = to_text(s);
    REQUIRE(parse_pauli_sum(text) == s);
    REQUIRE(text ==
            "n_qubits: 3\n3\n0.5+0.25i X2\n-2i Y1\n-1 Z0 Z1\n");
  }
  GIVEN("Comments and exponents") {
    const PauliSum s = parse_pauli_sum(
        "# header comment\nn_qubits: 2\n1e-1 X0  # trailing\n+i Z1\n");
    REQUIRE(s.coefficient("X0") == Complex(0.1));
    REQUIRE(s.coefficient("Z1") == Complex(0, 1));
  }
  GIVEN("Errors carry line numbers") {
    try {
      parse_pauli_sum("n_qubits: 2\n1 X0\nfoo Z1\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      REQUIRE(e.line() == 3);
    }
    REQUIRE_THROWS_AS(parse_pauli_sum("1 X0\n"), ParseError);
    REQUIRE_THROWS_AS(parse_pauli_sum("n_qubits: 2\n1 X5\n"), ParseError);
    REQUIRE_THROWS_AS(parse_pauli_sum(""), ParseError);
  }
}

}  // namespace test_pauli
}  // namespace sze
