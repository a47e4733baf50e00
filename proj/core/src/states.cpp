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
#include <cmath>
#include <numbers>
#include <string>

#include "statdisc/errors.hpp"

namespace statdisc::states {

BlochDirection::BlochDirection(double theta, double phi) : theta_(theta), phi_(phi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw ArgumentError("theta " + std::to_string(theta) + " outside [0, pi]");
  }
  if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi)) {
    throw ArgumentError("phi " + std::to_string(phi) + " outside [0, 2 pi)");
  }
}

BlochDirection BlochDirection::from_vector(const Eigen::Vector3d& v) {
  const double norm = v.norm();
  if (!(norm > 0.0)) throw ArgumentError("direction of a zero vector");
  const double z = std::clamp(v.z() / norm, -1.0, 1.0);
  double phi = std::atan2(v.y(), v.x());
  if (phi < 0.0) phi += 2.0 * std::numbers::pi;
  if (phi >= 2.0 * std::numbers::pi) phi = 0.0;
  return BlochDirection(std::acos(z), phi);
}

Eigen::Vector3d BlochDirection::unit_vector() const {
  return {std::sin(theta_) * std::cos(phi_), std::sin(theta_) * std::sin(phi_), std::cos(theta_)};
}

PureQubit::PureQubit(StateVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != 2) throw ArgumentError("a qubit has two amplitudes");
  if (std::abs(amplitudes_.squaredNorm() - 1.0) > 1e-12) {
    throw ArgumentError("qubit amplitudes are not normalized");
  }
}

DensityMatrix PureQubit::density_matrix() const {
  return DensityMatrix(amplitudes_ * amplitudes_.adjoint(), FactorShape{2});
}

PureQubit bloch_state(const BlochDirection& omega) {
  StateVector v(2);
  v << std::cos(omega.theta() / 2.0), std::polar(std::sin(omega.theta() / 2.0), omega.phi());
  return PureQubit(std::move(v));
}

PureQubit orthogonal_state(const BlochDirection& omega) {
  StateVector v(2);
  v << -std::polar(std::sin(omega.theta() / 2.0), -omega.phi()), std::cos(omega.theta() / 2.0);
  return PureQubit(std::move(v));
}

DensityMatrix aligned_integrand(const BlochDirection& omega, std::size_t n) {
  if (n == 0) throw ArgumentError("aligned_integrand: n must be >= 1");
  const StateVector up = bloch_state(omega).amplitudes();
  StateVector psi = up;
  for (std::size_t i = 1; i < n; ++i) psi = tensor(psi, up);
  return DensityMatrix(psi * psi.adjoint(), FactorShape(n, 2));
}

DensityMatrix antialigned_integrand(const BlochDirection& omega) {
  const StateVector psi =
      tensor(bloch_state(omega).amplitudes(), orthogonal_state(omega).amplitudes());
  return DensityMatrix(psi * psi.adjoint(), FactorShape{2, 2});
}

DensityMatrix rho_aligned(std::size_t n) {
  if (n == 0) throw ArgumentError("rho_aligned: n must be >= 1");
  return DensityMatrix(symmetric_projector(n) / static_cast<double>(n + 1), FactorShape(n, 2));
}

DensityMatrix sigma_antialigned() {
  const ComplexMatrix m = ComplexMatrix::Identity(4, 4) / 3.0 - swap_operator() / 6.0;
  return DensityMatrix(m, FactorShape{2, 2});
}

DensityMatrix tau_mixed(std::size_t n) {
  if (n == 0) throw ArgumentError("tau_mixed: n must be >= 1");
  return DensityMatrix::maximally_mixed(n);
}

DickeBasis dicke_basis(std::size_t n) {
  if (n == 0) throw ArgumentError("dicke_basis: n must be >= 1");
  const std::size_t dim = std::size_t{1} << n;
  DickeBasis basis{n, std::vector<StateVector>(n + 1, StateVector::Zero(dim))};
  for (std::size_t x = 0; x < dim; ++x) basis.vectors[hamming_weight(x)](x) = 1.0;
  for (auto& v : basis.vectors) v.normalize();
  return basis;
}

}  // namespace statdisc::states
