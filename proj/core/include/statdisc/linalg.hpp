// Copyright 2026 The statdisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense complex linear algebra and qubit-register helpers.
//
// Basis convention: computational qubit basis, tensor factor 0 is the
// leftmost ket, so qubit 0 is the most significant bit of a basis index.
// |01> is index 1 and |10> is index 2.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace statdisc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Ordered subsystem dimensions of a tensor-product space.
using FactorShape = std::vector<std::size_t>;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPositivityTolerance = 1e-10;
/// Eigenvalues below this magnitude count as zero for ranks and ensembles.
inline constexpr double kRankTolerance = 1e-12;

/// Hermitian, positive semidefinite, unit-trace matrix with a record of the
/// tensor factors it lives on. Construction validates all invariants and
/// throws ArgumentError on violation; instances are immutable afterwards.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix matrix, FactorShape factor_shape);
  /// Single-factor density matrix.
  explicit DensityMatrix(ComplexMatrix matrix);

  /// |psi><psi| for a unit vector psi (normalized here if it is not).
  static DensityMatrix pure(const StateVector& psi, FactorShape factor_shape);
  /// Identity / dim over `n_qubits` qubits.
  static DensityMatrix maximally_mixed(std::size_t n_qubits);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const FactorShape& factor_shape() const { return factor_shape_; }

  /// Eigenvalues in ascending order.
  RealVector eigenvalues() const;
  /// Tr(rho^2).
  double purity() const;

 private:
  ComplexMatrix matrix_;
  FactorShape factor_shape_;
};

/// max_ij |M_ij - conj(M_ji)|; +inf for non-square input.
double hermiticity_error(const ComplexMatrix& m);

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
StateVector tensor(const StateVector& a, const StateVector& b);

/// Reduced state on the factors listed in `keep` (strictly increasing
/// indices into rho.factor_shape()). An empty `keep` yields the 1x1 matrix [1].
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const ComplexMatrix& h);

/// Number of eigenvalues of a Hermitian matrix with |lambda| >= kRankTolerance.
std::size_t numerical_rank(const ComplexMatrix& h);

/// Ascending eigenvalues of a Hermitian matrix.
RealVector hermitian_eigenvalues(const ComplexMatrix& h);

/// 4x4 operator exchanging two qubits.
ComplexMatrix swap_operator();

/// Permutation operator on n qubits: input qubit i is moved to position
/// perm[i]. perm must be a permutation of 0..n-1.
ComplexMatrix qubit_permutation(std::span<const std::size_t> perm);

/// Orthogonal projector onto the permutation-symmetric subspace of n qubits
/// (rank n + 1).
ComplexMatrix symmetric_projector(std::size_t n_qubits);

/// Computational basis vector e_index of length dim.
StateVector basis_ket(std::size_t dim, std::size_t index);

/// Integer log2 of dim; throws ArgumentError unless dim is a power of two >= 2.
std::size_t qubit_count(std::size_t dim);

/// Number of set bits in a basis index.
std::size_t hamming_weight(std::size_t index);

}  // namespace statdisc
