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

#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "statdisc/errors.hpp"
#include "statdisc/states.hpp"

using namespace statdisc;
using statdisc::oracle::max_abs;

namespace {

DensityMatrix ket_density(std::size_t dim, std::size_t index) {
  return DensityMatrix::pure(basis_ket(dim, index), FactorShape{dim});
}

DensityMatrix singlet() {
  StateVector psi = StateVector::Zero(4);
  psi(1) = 1.0 / std::numbers::sqrt2;
  psi(2) = -1.0 / std::numbers::sqrt2;
  return DensityMatrix::pure(psi, FactorShape{2, 2});
}

}  // namespace

TEST(DensityMatrix, RejectsInvalidMatrices) {
  ComplexMatrix not_hermitian = ComplexMatrix::Identity(2, 2) / 2.0;
  not_hermitian(0, 1) = 0.1;
  EXPECT_THROW(DensityMatrix{not_hermitian}, ArgumentError);

  EXPECT_THROW(DensityMatrix{ComplexMatrix::Identity(2, 2)}, ArgumentError);  // trace 2

  ComplexMatrix negative = ComplexMatrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix{negative}, ArgumentError);

  EXPECT_THROW(DensityMatrix(ComplexMatrix::Identity(4, 4) / 4.0, FactorShape{2, 3}), ArgumentError);

  ComplexMatrix nan = ComplexMatrix::Identity(2, 2) / 2.0;
  nan(0, 0) = std::nan("");
  EXPECT_THROW(DensityMatrix{nan}, ArgumentError);
}

TEST(Tensor, IdentityAndBasisCases) {
  EXPECT_LT(max_abs(tensor(ComplexMatrix(ComplexMatrix::Identity(2, 2)),
                           ComplexMatrix(ComplexMatrix::Identity(2, 2))) -
                    ComplexMatrix::Identity(4, 4)),
            1e-15);

  const DensityMatrix zero_one = tensor(ket_density(2, 0), ket_density(2, 1));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(1, 1) = 1.0;  // |01>
  EXPECT_LT(max_abs(zero_one.matrix() - expected), 1e-15);
  EXPECT_EQ(zero_one.factor_shape(), (FactorShape{2, 2}));

  const DensityMatrix half(ComplexMatrix::Identity(2, 2) / 2.0, FactorShape{2});
  const DensityMatrix quarter = tensor(half, half);
  EXPECT_LT(max_abs(quarter.matrix() - states::tau_mixed(2).matrix()), 1e-15);
}

TEST(Tensor, AssociativeOnRandomMatrices) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = oracle::random_density(2, rng);
    const ComplexMatrix b = oracle::random_density(3, rng);
    const ComplexMatrix c = oracle::random_density(2, rng);
    EXPECT_LT(max_abs(tensor(tensor(a, b), c) - tensor(a, tensor(b, c))), 1e-14);
  }
}

TEST(PartialTrace, KnownReductions) {
  const DensityMatrix reduced_singlet = partial_trace(singlet(), {0});
  EXPECT_LT(max_abs(reduced_singlet.matrix() - ComplexMatrix::Identity(2, 2) / 2.0), 1e-15);

  const DensityMatrix product = tensor(ket_density(2, 0), ket_density(2, 0));
  EXPECT_LT(max_abs(partial_trace(product, {0}).matrix() - ket_density(2, 0).matrix()), 1e-15);

  // Marginal of the aligned pair. Its sphere-average oracle is in states_test.
  EXPECT_LT(max_abs(partial_trace(states::rho_aligned(2), {0}).matrix() -
                    ComplexMatrix::Identity(2, 2) / 2.0),
            1e-15);
}

TEST(PartialTrace, KeepsTheRightFactor) {
  // |0><0| (x) I/2 (x) |1><1| on shape {2, 2, 2}, and a qutrit in the middle.
  const DensityMatrix half(ComplexMatrix::Identity(2, 2) / 2.0, FactorShape{2});
  const DensityMatrix rho = tensor(tensor(ket_density(2, 0), half), ket_density(2, 1));
  EXPECT_LT(max_abs(partial_trace(rho, {2}).matrix() - ket_density(2, 1).matrix()), 1e-15);
  EXPECT_LT(max_abs(partial_trace(rho, {0, 2}).matrix() -
                    tensor(ket_density(2, 0), ket_density(2, 1)).matrix()),
            1e-15);

  const DensityMatrix mixed = tensor(tensor(ket_density(2, 1), ket_density(3, 2)), half);
  EXPECT_LT(max_abs(partial_trace(mixed, {1}).matrix() - ket_density(3, 2).matrix()), 1e-15);
}

TEST(PartialTrace, TracingEverythingLeavesOne) {
  std::mt19937_64 rng(11);
  const DensityMatrix rho(oracle::random_density(8, rng), FactorShape{2, 2, 2});
  const DensityMatrix scalar = partial_trace(rho, {});
  ASSERT_EQ(scalar.dim(), 1U);
  EXPECT_NEAR(scalar.matrix()(0, 0).real(), 1.0, 1e-12);
}

TEST(PartialTrace, RejectsBadIndices) {
  const DensityMatrix rho = states::tau_mixed(2);
  EXPECT_THROW(partial_trace(rho, {2}), ArgumentError);
  EXPECT_THROW(partial_trace(rho, {1, 0}), ArgumentError);
  EXPECT_THROW(partial_trace(rho, {0, 0}), ArgumentError);
}

TEST(TraceNorm, KnownValues) {
  EXPECT_EQ(trace_norm(ComplexMatrix::Zero(3, 3)), 0.0);
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = -1.0;
  EXPECT_NEAR(trace_norm(d), 2.0, 1e-15);
  EXPECT_NEAR(trace_norm(states::rho_aligned(2).matrix() - states::sigma_antialigned().matrix()), 1.0,
              1e-12);
}

TEST(TraceNorm, RejectsNonHermitian) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(trace_norm(m), ArgumentError);
}

TEST(TraceNorm, BoundsAbsoluteTrace) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexMatrix a = oracle::random_density(4, rng);
    const ComplexMatrix b = oracle::random_density(4, rng);
    std::uniform_real_distribution<double> scale(-2.0, 2.0);
    const ComplexMatrix h = scale(rng) * a + scale(rng) * b;
    EXPECT_GE(trace_norm(h), std::abs(h.trace().real()) - 1e-12);
  }
}

TEST(Swap, Action) {
  const ComplexMatrix swap = swap_operator();
  EXPECT_LT(max_abs(swap * basis_ket(4, 1) - basis_ket(4, 2)), 1e-15);
  EXPECT_LT(max_abs(swap * swap - ComplexMatrix::Identity(4, 4)), 1e-15);
  const RealVector eig = hermitian_eigenvalues(swap);
  EXPECT_NEAR(eig(0), -1.0, 1e-14);
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(eig(i), 1.0, 1e-14);
}

TEST(SymmetricProjector, SmallCases) {
  EXPECT_LT(max_abs(symmetric_projector(1) - ComplexMatrix::Identity(2, 2)), 1e-15);
  const ComplexMatrix p2 = symmetric_projector(2);
  EXPECT_LT(max_abs(p2 - (ComplexMatrix::Identity(4, 4) + swap_operator()) / 2.0), 1e-15);
  EXPECT_EQ(numerical_rank(p2), 3U);
}

TEST(SymmetricProjector, MatchesGramSchmidtOracleForThreeQubits) {
  const ComplexMatrix oracle = oracle::gram_schmidt_symmetric_projector(3);
  const ComplexMatrix p3 = symmetric_projector(3);
  EXPECT_LT(max_abs(p3 - oracle), 1e-12);
  EXPECT_EQ(numerical_rank(p3), 4U);
}

TEST(SymmetricProjector, IdempotentHermitianWithRankNPlusOne) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const ComplexMatrix p = symmetric_projector(n);
    EXPECT_LT(max_abs(p * p - p), 1e-12) << "n=" << n;
    EXPECT_LT(hermiticity_error(p), 1e-15) << "n=" << n;
    EXPECT_EQ(numerical_rank(p), n + 1) << "n=" << n;
  }
}

TEST(QubitPermutation, MovesQubits) {
  const std::size_t cycle[] = {1, 2, 0};  // qubit 0 -> slot 1, 1 -> 2, 2 -> 0
  const ComplexMatrix p = qubit_permutation(cycle);
  // |100> : qubit 0 is 1, it moves to slot 1 giving |010>.
  EXPECT_LT(max_abs(p * basis_ket(8, 4) - basis_ket(8, 2)), 1e-15);
  const std::size_t bad[] = {0, 0, 1};
  EXPECT_THROW(qubit_permutation(bad), ArgumentError);
}

TEST(QubitCount, PowersOfTwo) {
  EXPECT_EQ(qubit_count(2), 1U);
  EXPECT_EQ(qubit_count(256), 8U);
  EXPECT_THROW(qubit_count(6), ArgumentError);
  EXPECT_THROW(qubit_count(1), ArgumentError);
}
