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

#include "sze/dense.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>

#include "sze/errors.hpp"

namespace sze {

void check_dense_limit(unsigned n_qubits, unsigned limit) {
  if (n_qubits > limit) {
    throw NumericLimitError("dense representation of " +
                            std::to_string(n_qubits) +
                            " qubits exceeds the limit of " +
                            std::to_string(limit));
  }
}

DenseMatrix to_dense(const PauliSum& h, unsigned limit) {
  check_dense_limit(h.n_qubits(), limit);
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  constexpr Complex kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& [k, c] : h.terms()) {
    const Complex base = c * kI[std::popcount(k.x & k.z) & 3];
    for (std::size_t b = 0; b < dim; ++b) {
      const bool odd = std::popcount(k.z & b) & 1;
      m(b ^ k.x, b) += odd ? -base : base;
    }
  }
  return m;
}

DenseMatrix to_dense(const PauliTerm& p, unsigned limit) {
  return to_dense(PauliSum::from_term(p), limit);
}

DenseMatrix expm_hermitian(const DenseMatrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(h);
  const Eigen::VectorXd& lambda = es.eigenvalues();
  Eigen::VectorXcd phases(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    phases(i) = std::polar(1.0, -lambda(i) * t);
  }
  const DenseMatrix& v = es.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

DenseMatrix expm(const DenseMatrix& m) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m + m.adjoint()).cwiseAbs().maxCoeff() <= 1e-13 * scale) {
    // m = -i H with H Hermitian.
    const DenseMatrix h = Complex(0, 1) * m;
    return expm_hermitian(0.5 * (h + h.adjoint()), 1.0);
  }
  return m.exp();
}

double spectral_norm(const DenseMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<DenseMatrix> svd(m);
  return svd.singularValues()(0);
}

double trace_distance_dense(const DenseMatrix& a, const DenseMatrix& b) {
  const DenseMatrix diff = a - b;
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(0.5 * (diff + diff.adjoint()),
                                                Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace sze
