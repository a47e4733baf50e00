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

// Internal (spin) states of the particles.
//
// The closed forms here are the production path. The sphere averages in
// quadrature_average() exist to cross-check them and are never used to
// build a state that feeds a probability.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "statdisc/linalg.hpp"

namespace statdisc::states {

/// Direction on the Bloch sphere. theta in [0, pi], phi in [0, 2 pi).
class BlochDirection {
 public:
  BlochDirection(double theta, double phi);

  /// Direction of a nonzero 3-vector (phi wrapped into [0, 2 pi)).
  static BlochDirection from_vector(const Eigen::Vector3d& v);

  double theta() const { return theta_; }
  double phi() const { return phi_; }
  Eigen::Vector3d unit_vector() const;

 private:
  double theta_;
  double phi_;
};

/// Normalized single-qubit pure state.
class PureQubit {
 public:
  explicit PureQubit(StateVector amplitudes);

  const StateVector& amplitudes() const { return amplitudes_; }
  DensityMatrix density_matrix() const;

 private:
  StateVector amplitudes_;
};

/// Spin-up along omega: (cos(theta/2), e^{i phi} sin(theta/2)).
PureQubit bloch_state(const BlochDirection& omega);
/// Spin-down along omega, orthogonal to bloch_state(omega).
PureQubit orthogonal_state(const BlochDirection& omega);

/// (|omega><omega|)^{(x) n}: the integrand of the aligned state.
DensityMatrix aligned_integrand(const BlochDirection& omega, std::size_t n);
/// |omega><omega| (x) |omega_perp><omega_perp|: the integrand of the anti-aligned pair.
DensityMatrix antialigned_integrand(const BlochDirection& omega);

/// n spins aligned along a uniformly random axis: the normalized projector
/// onto the symmetric subspace, P_sym / (n + 1).
DensityMatrix rho_aligned(std::size_t n);

/// Two spins anti-aligned along a uniformly random axis: I/3 - SWAP/6.
/// Weight 1/2 on the singlet and 1/6 on each triplet state.
DensityMatrix sigma_antialigned();

/// n independently maximally mixed spins, I / 2^n.
DensityMatrix tau_mixed(std::size_t n);

/// Orthonormal basis of the symmetric subspace of n qubits.
struct DickeBasis {
  std::size_t n_qubits = 0;
  /// vectors[w] is the normalized sum of all basis states of Hamming weight w.
  std::vector<StateVector> vectors;
};

DickeBasis dicke_basis(std::size_t n);

// --- Sphere quadrature (test oracles) ---------------------------------------

/// Gauss-Legendre in cos(theta) times the trapezoid rule in phi. Exact for
/// polynomials in the Bloch vector up to degree min(2*polar_nodes - 1,
/// azimuthal_nodes - 1). With `rotation_seed` the whole grid is rotated by a
/// seeded Haar-random rotation, which keeps that exactness.
struct ProductGaussRule {
  std::size_t polar_nodes = 100;
  std::size_t azimuthal_nodes = 100;
  std::optional<std::uint64_t> rotation_seed;
};

/// Uniformly random directions from a seeded generator. Error ~ 1/sqrt(samples).
struct MonteCarloRule {
  std::size_t samples = 10000;
  std::uint64_t seed = 42;
};

using QuadratureScheme = std::variant<ProductGaussRule, MonteCarloRule>;

struct SphereNode {
  BlochDirection direction;
  double weight;  // weights sum to 1
};

std::vector<SphereNode> sphere_nodes(const QuadratureScheme& scheme);

using DirectionalBuilder = std::function<DensityMatrix(const BlochDirection&)>;

/// (1/4 pi) * integral of builder over the sphere, summed in node order.
DensityMatrix quadrature_average(const DirectionalBuilder& builder, const QuadratureScheme& scheme);

/// Gauss-Legendre nodes and weights on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(std::size_t n);

}  // namespace statdisc::states
