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

#include "testutil.hpp"

#include <functional>
#include <unsupported/Eigen/KroneckerProduct>

namespace sze {
namespace testutil {

namespace {

const std::complex<double> kI(0.0, 1.0);

Matrix letter_matrix(char c) {
  Matrix m(2, 2);
  switch (c) {
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, -kI, kI, 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      m << 1, 0, 0, 1;
  }
  return m;
}

// Counts qubits where both letters are non-identity and differ.
bool letters_commute(const PauliTerm& a, const PauliTerm& b) {
  int clashes = 0;
  for (unsigned q = 0; q < a.n_qubits(); ++q) {
    const char x = a.letter(q);
    const char y = b.letter(q);
    if (x != 'I' && y != 'I' && x != y) ++clashes;
  }
  return clashes % 2 == 0;
}

}  // namespace

Matrix kron_dense(const PauliTerm& p) {
  Matrix out = Matrix::Identity(1, 1);
  for (unsigned q = p.n_qubits(); q-- > 0;) {
    out = Eigen::kroneckerProduct(out, letter_matrix(p.letter(q))).eval();
  }
  return std::pow(kI, p.phase_exponent()) * out;
}

Matrix kron_dense(const PauliSum& s) {
  const Eigen::Index dim = Eigen::Index{1} << s.n_qubits();
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& [key, c] : s.terms()) out += c * kron_dense(s.term(key));
  return out;
}

Matrix taylor_expm(const Matrix& m) {
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.25) {
    scale *= 0.5;
    ++squarings;
  }
  const Matrix a = m * scale;
  Matrix term = Matrix::Identity(m.rows(), m.cols());
  Matrix sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = (term * a / static_cast<double>(k)).eval();
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = (sum * sum).eval();
  return sum;
}

Matrix taylor_evolution(const Matrix& h, double t) {
  return taylor_expm(-kI * t * h);
}

double svd_trace_distance(const Matrix& a, const Matrix& b) {
  Eigen::JacobiSVD<Matrix> svd(a - b);
  return 0.5 * svd.singularValues().sum();
}

PauliTerm random_term(unsigned n, Engine& rng, bool hermitian) {
  std::uniform_int_distribution<std::uint64_t> bits(
      0, n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  std::uniform_int_distribution<int> phase(0, 3);
  int ph = phase(rng);
  if (hermitian) ph &= 2;
  return PauliTerm(n, bits(rng), bits(rng), ph);
}

PauliSum random_sum(unsigned n, std::size_t count, Engine& rng,
                    bool hermitian) {
  std::normal_distribution<double> normal;
  PauliSum::TermMap terms;
  for (std::size_t i = 0; i < count; ++i) {
    const PauliTerm p = random_term(n, rng, true);
    const std::complex<double> c =
        hermitian ? std::complex<double>(normal(rng))
                  : std::complex<double>(normal(rng), normal(rng));
    terms[p.key()] += c * p.phase();
  }
  return PauliSum(n, std::move(terms));
}

Vector random_state(unsigned n, Engine& rng) {
  std::normal_distribution<double> normal;
  Vector v(Eigen::Index{1} << n);
  for (auto& a : v) a = {normal(rng), normal(rng)};
  return v.normalized();
}

Matrix random_density(unsigned n, Engine& rng) {
  Matrix rho = Matrix::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
  std::uniform_real_distribution<double> weight(0.1, 1.0);
  double total = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double w = weight(rng);
    const Vector v = random_state(n, rng);
    rho += w * v * v.adjoint();
    total += w;
  }
  return rho / total;
}

std::size_t brute_force_chromatic_number(const PauliSum& h) {
  std::vector<PauliTerm> v;
  for (const auto& [key, c] : h.terms()) v.push_back(h.term(key));
  const std::size_t n = v.size();
  if (n == 0) return 0;
  std::vector<int> colour(n, -1);
  for (std::size_t k = 1; k <= n; ++k) {
    std::function<bool(std::size_t)> place = [&](std::size_t i) {
      if (i == n) return true;
      for (std::size_t c = 0; c < k; ++c) {
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) {
          if (colour[j] == static_cast<int>(c) && !letters_commute(v[i], v[j])) {
            ok = false;
          }
        }
        if (!ok) continue;
        colour[i] = static_cast<int>(c);
        if (place(i + 1)) return true;
      }
      colour[i] = -1;
      return false;
    };
    if (place(0)) return k;
  }
  return n;
}

}  // namespace testutil
}  // namespace sze
