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

#include "statdisc/states.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "statdisc/errors.hpp"

using namespace statdisc;
using namespace statdisc::states;
using statdisc::oracle::max_abs;

namespace {

constexpr double kQuadratureAgreement = 1e-8;

BlochDirection random_direction(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> z(-1.0, 1.0);
  std::uniform_real_distribution<double> phi(0.0, 2.0 * std::numbers::pi);
  return BlochDirection(std::acos(z(rng)), phi(rng));
}

}  // namespace

TEST(BlochState, Poles) {
  const PureQubit north = bloch_state(BlochDirection(0.0, 0.0));
  EXPECT_NEAR(std::abs(north.amplitudes()(0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(north.amplitudes()(1)), 0.0, 1e-15);

  const PureQubit south = bloch_state(BlochDirection(std::numbers::pi, 1.0));
  EXPECT_NEAR(std::abs(south.amplitudes()(0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(south.amplitudes()(1)), 1.0, 1e-15);
}

TEST(BlochState, OrthogonalCompanion) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    const BlochDirection omega = random_direction(rng);
    const Complex overlap = bloch_state(omega).amplitudes().dot(orthogonal_state(omega).amplitudes());
    EXPECT_LT(std::abs(overlap), 1e-15);
  }
}

TEST(BlochState, BlochVectorMatchesDirection) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const BlochDirection omega = random_direction(rng);
    const ComplexMatrix m = bloch_state(omega).density_matrix().matrix();
    const Eigen::Vector3d r{2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(), (m(0, 0) - m(1, 1)).real()};
    EXPECT_LT((r - omega.unit_vector()).norm(), 1e-14);
  }
}

TEST(BlochDirection, RejectsOutOfRange) {
  EXPECT_THROW(BlochDirection(-0.1, 0.0), ArgumentError);
  EXPECT_THROW(BlochDirection(4.0, 0.0), ArgumentError);
  EXPECT_THROW(BlochDirection(1.0, 2.0 * std::numbers::pi), ArgumentError);
  EXPECT_THROW(BlochDirection(1.0, -0.5), ArgumentError);
}

TEST(RhoAligned, SmallCases) {
  EXPECT_LT(max_abs(rho_aligned(1).matrix() - ComplexMatrix::Identity(2, 2) / 2.0), 1e-15);

  const DensityMatrix rho2 = rho_aligned(2);
  EXPECT_LT(max_abs(rho2.matrix() - (ComplexMatrix::Identity(4, 4) + swap_operator()) / 6.0), 1e-15);
  const RealVector eig = rho2.eigenvalues();
  EXPECT_NEAR(eig(0), 0.0, 1e-15);
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(eig(i), 1.0 / 3.0, 1e-15);
  EXPECT_EQ(rho2.factor_shape(), (FactorShape{2, 2}));
}

TEST(RhoAligned, MatchesSphereAverage) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const DensityMatrix oracle = quadrature_average(
        [n](const BlochDirection& omega) { return aligned_integrand(omega, n); }, ProductGaussRule{});
    EXPECT_LT(max_abs(oracle.matrix() - rho_aligned(n).matrix()), kQuadratureAgreement) << "n=" << n;
  }
}

TEST(RhoAligned, MarginalOfSphereAverageIsMaximallyMixed) {
  const DensityMatrix oracle = quadrature_average(
      [](const BlochDirection& omega) { return partial_trace(aligned_integrand(omega, 2), {0}); },
      ProductGaussRule{});
  EXPECT_LT(max_abs(oracle.matrix() - ComplexMatrix::Identity(2, 2) / 2.0), kQuadratureAgreement);
  EXPECT_LT(max_abs(partial_trace(rho_aligned(2), {0}).matrix() - oracle.matrix()), kQuadratureAgreement);
}

TEST(RhoAligned, CommutesWithEveryQubitPermutation) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const ComplexMatrix rho = rho_aligned(n).matrix();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double worst = 0.0;
    do {
      const ComplexMatrix p = qubit_permutation(perm);
      worst = std::max(worst, max_abs(p * rho - rho * p));
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_LT(worst, 1e-12) << "n=" << n;
  }
}

TEST(RhoAligned, SupportedOnSymmetricSubspace) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const ComplexMatrix rho = rho_aligned(n).matrix();
    EXPECT_LT(max_abs(rho * symmetric_projector(n) - rho), 1e-12) << "n=" << n;
  }
}

TEST(SigmaAntialigned, ClosedFormAgainstSphereAverage) {
  const DensityMatrix sigma = sigma_antialigned();
  EXPECT_NEAR(sigma.matrix().trace().real(), 1.0, 1e-15);

  const DensityMatrix oracle = quadrature_average(antialigned_integrand, ProductGaussRule{});
  EXPECT_LT(max_abs(oracle.matrix() - sigma.matrix()), kQuadratureAgreement);

  // Diagonalize the oracle directly: 1/6 three times, 1/2 on the singlet.
  const RealVector eig = oracle.eigenvalues();
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(eig(i), 1.0 / 6.0, kQuadratureAgreement);
  EXPECT_NEAR(eig(3), 0.5, kQuadratureAgreement);
  StateVector singlet = StateVector::Zero(4);
  singlet(1) = 1.0 / std::numbers::sqrt2;
  singlet(2) = -1.0 / std::numbers::sqrt2;
  EXPECT_NEAR(singlet.dot(oracle.matrix() * singlet).real(), 0.5, kQuadratureAgreement);
}

TEST(SigmaAntialigned, TraceDistanceToAlignedPair) {
  EXPECT_NEAR(trace_norm(rho_aligned(2).matrix() - sigma_antialigned().matrix()), 1.0, 1e-12);
}

TEST(SigmaAntialigned, InvariantUnderJointRotation) {
  std::mt19937_64 rng(2024);
  const ComplexMatrix sigma = sigma_antialigned().matrix();
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix u = oracle::random_unitary(2, rng);
    const ComplexMatrix uu = tensor(u, u);
    EXPECT_LT(max_abs(uu * sigma * uu.adjoint() - sigma), 1e-10);
  }
}

TEST(TauMixed, Cases) {
  EXPECT_LT(max_abs(tau_mixed(1).matrix() - ComplexMatrix::Identity(2, 2) / 2.0), 1e-15);
  EXPECT_LT(max_abs(tau_mixed(2).matrix() - ComplexMatrix::Identity(4, 4) / 4.0), 1e-15);
  for (std::size_t n = 1; n <= 6; ++n) {
    const RealVector eig = tau_mixed(n).eigenvalues();
    EXPECT_LT((eig.array() - std::ldexp(1.0, -static_cast<int>(n))).abs().maxCoeff(), 1e-15);
  }
}

TEST(DickeBasis, TwoQubitTriplet) {
  const DickeBasis one = dicke_basis(1);
  ASSERT_EQ(one.vectors.size(), 2U);
  EXPECT_LT(max_abs(one.vectors[0] - basis_ket(2, 0)), 1e-15);
  EXPECT_LT(max_abs(one.vectors[1] - basis_ket(2, 1)), 1e-15);

  const DickeBasis two = dicke_basis(2);
  ASSERT_EQ(two.vectors.size(), 3U);
  EXPECT_LT(max_abs(two.vectors[0] - basis_ket(4, 0)), 1e-15);
  EXPECT_LT(max_abs(two.vectors[1] - (basis_ket(4, 1) + basis_ket(4, 2)) / std::numbers::sqrt2), 1e-15);
  EXPECT_LT(max_abs(two.vectors[2] - basis_ket(4, 3)), 1e-15);
}

TEST(DickeBasis, SpansTheBruteForceSymmetricSubspace) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const DickeBasis basis = dicke_basis(n);
    ASSERT_EQ(basis.vectors.size(), n + 1);
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
    for (const auto& v : basis.vectors) sum += v * v.adjoint();
    EXPECT_LT(max_abs(sum - oracle::brute_force_symmetrizer(n)), 1e-12) << "n=" << n;
    EXPECT_LT(max_abs(sum - symmetric_projector(n)), 1e-12) << "n=" << n;
  }
}

TEST(DickeBasis, OrthonormalAndPermutationInvariant) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const DickeBasis basis = dicke_basis(n);
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j <= n; ++j) {
        EXPECT_NEAR(std::abs(basis.vectors[i].dot(basis.vectors[j])), i == j ? 1.0 : 0.0, 1e-12);
      }
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      const ComplexMatrix p = qubit_permutation(perm);
      for (const auto& v : basis.vectors) EXPECT_LT(max_abs(p * v - v), 1e-12);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST(Quadrature, IsotropyOfSingleSpin) {
  const auto builder = [](const BlochDirection& omega) { return bloch_state(omega).density_matrix(); };
  const DensityMatrix avg = quadrature_average(builder, ProductGaussRule{});
  EXPECT_LT(max_abs(avg.matrix() - ComplexMatrix::Identity(2, 2) / 2.0), kQuadratureAgreement);
}

TEST(Quadrature, SeededRotationKeepsExactness) {
  for (std::uint64_t seed : {1ULL, 42ULL, 987654321ULL}) {
    const DensityMatrix oracle = quadrature_average(
        [](const BlochDirection& omega) { return aligned_integrand(omega, 2); },
        ProductGaussRule{100, 100, seed});
    EXPECT_LT(max_abs(oracle.matrix() - rho_aligned(2).matrix()), kQuadratureAgreement);
    const DensityMatrix sigma = quadrature_average(antialigned_integrand, ProductGaussRule{100, 100, seed});
    EXPECT_LT(max_abs(sigma.matrix() - sigma_antialigned().matrix()), kQuadratureAgreement);
  }
}

TEST(Quadrature, NodeCountAndWeights) {
  const auto nodes = sphere_nodes(ProductGaussRule{});
  EXPECT_EQ(nodes.size(), 10000U);
  double total = 0.0;
  for (const auto& node : nodes) total += node.weight;
  EXPECT_NEAR(total, 1.0, 1e-13);
}

TEST(Quadrature, MonteCarloIsUnbiasedButCoarse) {
  // Statistical error of 10^4 samples is ~1/sqrt(10^4); this rule cannot meet
  // the 1e-8 agreement the product rule provides.
  const DensityMatrix mc = quadrature_average(antialigned_integrand, MonteCarloRule{10000, 42});
  EXPECT_LT(max_abs(mc.matrix() - sigma_antialigned().matrix()), 0.03);
}

TEST(Quadrature, RejectsEmptySchemes) {
  const auto builder = [](const BlochDirection& omega) { return bloch_state(omega).density_matrix(); };
  EXPECT_THROW(quadrature_average(builder, ProductGaussRule{0, 10, std::nullopt}), ArgumentError);
  EXPECT_THROW(quadrature_average(builder, MonteCarloRule{0, 1}), ArgumentError);
}

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  for (std::size_t n : {1U, 2U, 5U, 20U, 100U}) {
    const auto [x, w] = gauss_legendre(n);
    for (std::size_t k = 0; k < 2 * n; ++k) {
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) sum += w[i] * std::pow(x[i], static_cast<double>(k));
      const double exact = (k % 2 == 1) ? 0.0 : 2.0 / static_cast<double>(k + 1);
      EXPECT_NEAR(sum, exact, 1e-13) << "n=" << n << " k=" << k;
    }
  }
}
