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

// Uses of the discrimination machinery: entanglement detection with two
// copies of a pair, purification by symmetric projection, the classical
// exclusion-constrained model, and the N-particle scan.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "statdisc/discrimination.hpp"
#include "statdisc/linalg.hpp"
#include "statdisc/multiport.hpp"

namespace statdisc::applications {

/// Normalized two-qubit pure state, qubit 0 = particle A, qubit 1 = particle B.
class TwoQubitPureState {
 public:
  /// Throws ArgumentError unless the four amplitudes have unit norm (1e-12).
  explicit TwoQubitPureState(StateVector amplitudes);

  /// sqrt(1 - lambda)|00> + sqrt(lambda)|11>, lambda in [0, 1/2].
  static TwoQubitPureState from_schmidt(double lambda);
  /// (|01> - |10>) / sqrt 2.
  static TwoQubitPureState singlet();

  const StateVector& amplitudes() const { return amplitudes_; }
  /// Smaller eigenvalue of either reduced state, in [0, 1/2].
  double schmidt_lambda() const { return schmidt_lambda_; }
  DensityMatrix density_matrix() const;
  DensityMatrix reduced_b() const;

 private:
  StateVector amplitudes_;
  double schmidt_lambda_;
};

struct EntanglementDetection {
  /// Success probability of telling "two copies of psi" (H1) from an
  /// aligned pair in unknown direction (H0), equal priors.
  double success_probability;
  /// Antibunching probability of the two B particles under psi.
  double antibunching_probability;
  discrimination::DiscriminationReport report;
};

/// Interferes particle B of each of two copies of psi at a 50/50 beam
/// splitter. The B pair is in rho_B (x) rho_B.
EntanglementDetection detect_entanglement(const TwoQubitPureState& psi,
                                          multiport::Statistics statistics);

struct PurificationResult {
  DensityMatrix state;  // single-qubit marginal after a successful projection
  double success_probability;
  double failure_probability;  // pair discarded
};

/// Projects rho (x) rho onto the symmetric subspace and returns the
/// single-qubit marginal of the normalized result.
PurificationResult purify_symmetric(const DensityMatrix& rho);

/// (Tr rho X, Tr rho Y, Tr rho Z) for a single-qubit density matrix.
Eigen::Vector3d bloch_vector(const DensityMatrix& rho);
/// (I + r . sigma) / 2; throws ArgumentError for |r| > 1.
DensityMatrix qubit_from_bloch(const Eigen::Vector3d& r);

/// How the classical model reads the exclusion constraint.
enum class PauliReading {
  /// No two particles with the same internal state share an output arm.
  standard,
  /// At most two particles with the same internal state share an output arm.
  literal,
};

std::string_view to_string(PauliReading reading);
PauliReading parse_pauli_reading(std::string_view text);

inline constexpr std::size_t kMaxExactClassical = 8;

/// Success probability of the classical exclusion model for aligned spins
/// versus independent maximally mixed spins. Particles are distinguishable,
/// particle i enters arm i, and given a spin assignment every routing that
/// satisfies the constraint is equally likely. The guess is "aligned"
/// exactly when all particles leave through distinct arms. Computed by exact
/// enumeration; throws CapacityError for n > kMaxExactClassical.
double classical_pauli_success(std::size_t n, PauliReading reading = PauliReading::standard);

/// Sampling estimate of the same quantity for sizes beyond exact enumeration.
double classical_pauli_success_monte_carlo(std::size_t n, PauliReading reading, std::size_t samples,
                                           std::uint64_t seed);

struct ClassicalComparisonRow {
  std::size_t n;
  double standard;
  double literal;
  double helstrom;  // closed form for aligned vs maximally mixed
};

/// Both readings against the Helstrom value for n = 1..n_max.
std::vector<ClassicalComparisonRow> classical_comparison(std::size_t n_max);

inline constexpr std::size_t kMaxScanParticles = 8;

struct ConjectureRecord {
  std::size_t n;
  multiport::Statistics statistics;
  double p_bs_optimal;
  double p_helstrom;
  double gap;
  std::size_t pattern_count;
};

/// Full quantum multiport discrimination of aligned vs maximally mixed spins
/// with the Bayes pattern rule, for n = 1..n_max.
std::vector<ConjectureRecord> conjecture_scan(std::size_t n_max, multiport::Statistics statistics);

}  // namespace statdisc::applications
