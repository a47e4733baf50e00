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

#include "statdisc/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "statdisc/errors.hpp"

namespace statdisc {
namespace {

std::size_t shape_product(const FactorShape& shape) {
  return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
}

double binomial(std::size_t n, std::size_t k) {
  double result = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return result;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix, FactorShape factor_shape)
    : matrix_(std::move(matrix)), factor_shape_(std::move(factor_shape)) {
  if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
    throw ArgumentError("density matrix must be square and non-empty");
  }
  if (shape_product(factor_shape_) != dim()) {
    throw ArgumentError("factor shape product " + std::to_string(shape_product(factor_shape_)) +
                        " does not match dimension " + std::to_string(dim()));
  }
  if (!matrix_.allFinite()) {
    throw ArgumentError("density matrix has non-finite entries");
  }
  const double herm = hermiticity_error(matrix_);
  if (herm > kHermitianTolerance) {
    throw ArgumentError("density matrix is not Hermitian (error " + std::to_string(herm) + ")");
  }
  const Complex trace = matrix_.trace();
  if (std::abs(trace - Complex(1.0, 0.0)) > kTraceTolerance) {
    throw ArgumentError("density matrix trace " + std::to_string(trace.real()) + " != 1");
  }
  const double min_eig = hermitian_eigenvalues(matrix_)(0);
  if (min_eig < -kPositivityTolerance) {
    throw ArgumentError("density matrix has negative eigenvalue " + std::to_string(min_eig));
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix)
    : DensityMatrix(matrix, FactorShape{static_cast<std::size_t>(matrix.rows())}) {}

DensityMatrix DensityMatrix::pure(const StateVector& psi, FactorShape factor_shape) {
  const double norm = psi.norm();
  if (!(norm > 0.0)) {
    throw ArgumentError("cannot build a pure state from a zero vector");
  }
  const StateVector unit = psi / norm;
  return DensityMatrix(unit * unit.adjoint(), std::move(factor_shape));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim),
                       FactorShape(n_qubits, 2));
}

RealVector DensityMatrix::eigenvalues() const { return hermitian_eigenvalues(matrix_); }

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

double hermiticity_error(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  FactorShape shape = a.factor_shape();
  shape.insert(shape.end(), b.factor_shape().begin(), b.factor_shape().end());
  return DensityMatrix(tensor(a.matrix(), b.matrix()), std::move(shape));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  StateVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  const FactorShape& shape = rho.factor_shape();
  const std::size_t n_factors = shape.size();
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= n_factors) {
      throw ArgumentError("partial_trace: factor index " + std::to_string(keep[i]) +
                          " out of range for " + std::to_string(n_factors) + " factors");
    }
    if (i > 0 && keep[i] <= keep[i - 1]) {
      throw ArgumentError("partial_trace: kept factor indices must be strictly increasing");
    }
  }

  std::vector<bool> kept(n_factors, false);
  for (std::size_t k : keep) kept[k] = true;

  FactorShape kept_shape;
  for (std::size_t k : keep) kept_shape.push_back(shape[k]);
  const std::size_t kept_dim = shape_product(kept_shape);

  // Split a full index into (kept, traced) flat indices, factor 0 most significant.
  const std::size_t dim = rho.dim();
  std::vector<std::size_t> kept_index(dim), traced_index(dim);
  for (std::size_t full = 0; full < dim; ++full) {
    std::size_t rest = full;
    std::size_t kept_flat = 0, kept_stride = 1;
    std::size_t traced_flat = 0, traced_stride = 1;
    for (std::size_t f = n_factors; f-- > 0;) {
      const std::size_t digit = rest % shape[f];
      rest /= shape[f];
      if (kept[f]) {
        kept_flat += digit * kept_stride;
        kept_stride *= shape[f];
      } else {
        traced_flat += digit * traced_stride;
        traced_stride *= shape[f];
      }
    }
    kept_index[full] = kept_flat;
    traced_index[full] = traced_flat;
  }

  ComplexMatrix reduced = ComplexMatrix::Zero(kept_dim, kept_dim);
  const ComplexMatrix& m = rho.matrix();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (traced_index[i] == traced_index[j]) {
        reduced(kept_index[i], kept_index[j]) += m(i, j);
      }
    }
  }
  // Restore exact Hermiticity lost to summation order.
  reduced = (0.5 * (reduced + reduced.adjoint())).eval();
  return DensityMatrix(std::move(reduced), std::move(kept_shape));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep) {
  const std::vector<std::size_t> indices(keep);
  return partial_trace(rho, std::span<const std::size_t>(indices));
}

RealVector hermitian_eigenvalues(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) throw ArgumentError("eigenvalues of a non-square matrix");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigendecomposition failed to converge");
  }
  return solver.eigenvalues();
}

double trace_norm(const ComplexMatrix& h) {
  const double herm = hermiticity_error(h);
  if (herm > kHermitianTolerance) {
    throw ArgumentError("trace_norm requires a Hermitian matrix (error " + std::to_string(herm) + ")");
  }
  if (h.size() == 0) return 0.0;
  return hermitian_eigenvalues(h).cwiseAbs().sum();
}

std::size_t numerical_rank(const ComplexMatrix& h) {
  const RealVector eig = hermitian_eigenvalues(h);
  return static_cast<std::size_t>((eig.array().abs() >= kRankTolerance).count());
}

ComplexMatrix swap_operator() {
  const std::size_t perm[] = {1, 0};
  return qubit_permutation(perm);
}

ComplexMatrix qubit_permutation(std::span<const std::size_t> perm) {
  const std::size_t n = perm.size();
  std::vector<std::size_t> sorted(perm.begin(), perm.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (sorted[i] != i) throw ArgumentError("qubit_permutation: not a permutation");
  }
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
  for (std::size_t in = 0; in < dim; ++in) {
    std::size_t out = 0;
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t bit = (in >> (n - 1 - q)) & 1U;
      out |= bit << (n - 1 - perm[q]);
    }
    p(out, in) = 1.0;
  }
  return p;
}

ComplexMatrix symmetric_projector(std::size_t n_qubits) {
  if (n_qubits == 0) throw ArgumentError("symmetric_projector: n_qubits must be >= 1");
  // Group average (1/n!) sum_pi P_pi. Entry (x, y) is the fraction of
  // permutations mapping bit string y to x: zero unless the Hamming weights
  // agree, otherwise w!(n-w)!/n! = 1/C(n, w).
  const std::size_t dim = std::size_t{1} << n_qubits;
  ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
  for (std::size_t x = 0; x < dim; ++x) {
    const std::size_t w = hamming_weight(x);
    const double value = 1.0 / binomial(n_qubits, w);
    for (std::size_t y = 0; y < dim; ++y) {
      if (hamming_weight(y) == w) p(x, y) = value;
    }
  }
  return p;
}

StateVector basis_ket(std::size_t dim, std::size_t index) {
  if (index >= dim) throw ArgumentError("basis_ket: index out of range");
  StateVector v = StateVector::Zero(dim);
  v(index) = 1.0;
  return v;
}

std::size_t qubit_count(std::size_t dim) {
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw ArgumentError("dimension " + std::to_string(dim) + " is not a qubit register");
  }
  return static_cast<std::size_t>(std::countr_zero(dim));
}

std::size_t hamming_weight(std::size_t index) { return static_cast<std::size_t>(std::popcount(index)); }

}  // namespace statdisc
