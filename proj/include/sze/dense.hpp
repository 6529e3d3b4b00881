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

#include <Eigen/Dense>
#include <cstddef>

#include "sze/pauli.hpp"

namespace sze {

using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

/// Dense routines refuse more qubits than this unless told otherwise.
inline constexpr unsigned kDefaultDenseLimit = 12;

/// Throws NumericLimitError if n_qubits > limit.
void check_dense_limit(unsigned n_qubits, unsigned limit = kDefaultDenseLimit);

/// Basis index b has qubit q in state (b >> q) & 1, so the matrix is
/// P_{n-1} (x) ... (x) P_0.
DenseMatrix to_dense(const PauliSum& h, unsigned limit = kDefaultDenseLimit);
DenseMatrix to_dense(const PauliTerm& p, unsigned limit = kDefaultDenseLimit);

/// exp(-i t H) for Hermitian H via eigendecomposition.
DenseMatrix expm_hermitian(const DenseMatrix& h, double t);

/// exp(M). Anti-Hermitian input goes through the Hermitian eigensolver,
/// anything else through scaling and squaring.
DenseMatrix expm(const DenseMatrix& m);

/// Largest singular value.
double spectral_norm(const DenseMatrix& m);

/// Half the trace norm of a - b for Hermitian a, b.
double trace_distance_dense(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace sze
