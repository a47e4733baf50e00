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

#include "statdisc/applications.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "statdisc/errors.hpp"
#include "statdisc/states.hpp"

namespace statdisc::applications {
namespace {

constexpr double kMinProjectionProbability = 1e-14;

ComplexMatrix hermitize(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

TwoQubitPureState::TwoQubitPureState(StateVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != 4) throw ArgumentError("a two-qubit state has four amplitudes");
  if (std::abs(amplitudes_.squaredNorm() - 1.0) > 1e-12) {
    throw ArgumentError("two-qubit amplitudes are not normalized");
  }
  schmidt_lambda_ = std::max(0.0, reduced_b().eigenvalues()(0));
}

TwoQubitPureState TwoQubitPureState::from_schmidt(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 0.5)) throw ArgumentError("Schmidt lambda must lie in [0, 1/2]");
  StateVector v = StateVector::Zero(4);
  v(0) = std::sqrt(1.0 - lambda);
  v(3) = std::sqrt(lambda);
  return TwoQubitPureState(std::move(v));
}

TwoQubitPureState TwoQubitPureState::singlet() {
  StateVector v = StateVector::Zero(4);
  v(1) = 1.0 / std::numbers::sqrt2;
  v(2) = -1.0 / std::numbers::sqrt2;
  return TwoQubitPureState(std::move(v));
}

DensityMatrix TwoQubitPureState::density_matrix() const {
  return DensityMatrix::pure(amplitudes_, FactorShape{2, 2});
}

DensityMatrix TwoQubitPureState::reduced_b() const { return partial_trace(density_matrix(), {1}); }

EntanglementDetection detect_entanglement(const TwoQubitPureState& psi,
                                          multiport::Statistics statistics) {
  const DensityMatrix rho_b = psi.reduced_b();
  auto [h0, h1] = discrimination::hypothesis_pair(states::rho_aligned(2), tensor(rho_b, rho_b));
  auto report = discrimination::beam_splitter_discrimination(h0, h1, statistics);
  const double antibunching = report.distribution1.antibunching_probability();
  return EntanglementDetection{report.p_bs, antibunching, std::move(report)};
}

PurificationResult purify_symmetric(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw ArgumentError("purify_symmetric expects a single-qubit state");
  const ComplexMatrix pair = tensor(rho.matrix(), rho.matrix());
  const ComplexMatrix projector = symmetric_projector(2);
  const ComplexMatrix projected = projector * pair * projector;
  const double success = projected.trace().real();
  if (success < kMinProjectionProbability) {
    throw DegenerateProjectionError("symmetric projection succeeded with probability " +
                                    std::to_string(success));
  }
  const DensityMatrix joint(hermitize(projected / success), FactorShape{2, 2});
  return PurificationResult{partial_trace(joint, {0}), success, 1.0 - success};
}

Eigen::Vector3d bloch_vector(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw ArgumentError("Bloch vector of a non-qubit state");
  const ComplexMatrix& m = rho.matrix();
  return {2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(), (m(0, 0) - m(1, 1)).real()};
}

DensityMatrix qubit_from_bloch(const Eigen::Vector3d& r) {
  if (r.norm() > 1.0 + 1e-12) throw ArgumentError("Bloch vector longer than 1");
  ComplexMatrix m(2, 2);
  m << 0.5 * (1.0 + r.z()), 0.5 * Complex(r.x(), -r.y()), 0.5 * Complex(r.x(), r.y()),
      0.5 * (1.0 - r.z());
  return DensityMatrix(m, FactorShape{2});
}

std::vector<ConjectureRecord> conjecture_scan(std::size_t n_max, multiport::Statistics statistics) {
  if (n_max == 0) throw ArgumentError("conjecture_scan: n_max must be >= 1");
  if (n_max > kMaxScanParticles) {
    throw CapacityError("conjecture_scan supports n_max <= " + std::to_string(kMaxScanParticles));
  }
  std::vector<ConjectureRecord> records;
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto [h0, h1] = discrimination::hypothesis_pair(states::rho_aligned(n), states::tau_mixed(n));
    const auto report = discrimination::beam_splitter_discrimination(h0, h1, statistics);
    const double closed_form = discrimination::helstrom_aligned_vs_mixed(n);
    records.push_back(ConjectureRecord{n, statistics, report.p_bs, closed_form,
                                       closed_form - report.p_bs,
                                       report.distribution0.probabilities().size()});
  }
  return records;
}

}  // namespace statdisc::applications
