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

// Second-quantized simulation of N identical particles, one per input arm,
// each carrying a qubit of internal state, through a balanced N-port.
//
// Modes are (arm, spin) pairs indexed arm-major, spin-minor:
// mode = 2 * arm + spin. A Fock basis configuration stands for the product of
// creation operators applied in ascending mode order to the vacuum,
//   |k> = prod_m (a_m^dag)^{k_m} / sqrt(k_m!) |vac>,
// and every fermionic sign in this module derives from that ordering.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "statdisc/linalg.hpp"

namespace statdisc::multiport {

enum class Statistics { boson, fermion };

std::string_view to_string(Statistics statistics);
/// Parses "boson" / "fermion"; throws ArgumentError otherwise.
Statistics parse_statistics(std::string_view text);

/// Largest arm count the packed Fock representation supports.
inline constexpr std::size_t kMaxArms = 8;

/// Balanced multiport: unitary with every entry of modulus 1/sqrt(n).
/// Entry (m, k) is the amplitude for input arm m to reach output arm k.
class MultiportUnitary {
 public:
  /// Validates unitarity and balance to 1e-12.
  static MultiportUnitary from_matrix(ComplexMatrix matrix);

  std::size_t size() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  Complex operator()(std::size_t input_arm, std::size_t output_arm) const {
    return matrix_(static_cast<Eigen::Index>(input_arm), static_cast<Eigen::Index>(output_arm));
  }

 private:
  explicit MultiportUnitary(ComplexMatrix matrix) : matrix_(std::move(matrix)) {}
  ComplexMatrix matrix_;
};

/// u_mk = exp(2 pi i m k / n) / sqrt(n), zero-based m and k.
MultiportUnitary dft_unitary(std::size_t n);

/// The symmetric 50/50 convention (1/sqrt 2)[[1, i], [i, 1]].
MultiportUnitary symmetric_beam_splitter();

inline constexpr std::size_t mode_index(std::size_t arm, std::size_t spin) { return 2 * arm + spin; }

/// Occupation numbers of up to 2 * kMaxArms modes, four bits per mode.
class ModeConfiguration {
 public:
  constexpr ModeConfiguration() = default;
  static constexpr ModeConfiguration from_packed(std::uint64_t bits) { return ModeConfiguration(bits); }

  unsigned count(std::size_t mode) const {
    return static_cast<unsigned>((bits_ >> (4 * mode)) & 0xFU);
  }
  ModeConfiguration with_count(std::size_t mode, unsigned count) const;
  /// Particles in modes strictly below `mode`.
  unsigned count_below(std::size_t mode) const;
  unsigned total() const;
  /// Particles in both spin modes of `arm`.
  unsigned arm_total(std::size_t arm) const { return count(mode_index(arm, 0)) + count(mode_index(arm, 1)); }

  std::uint64_t packed() const { return bits_; }
  std::vector<unsigned> occupations(std::size_t n_modes) const;

  friend bool operator==(ModeConfiguration, ModeConfiguration) = default;
  friend auto operator<=>(ModeConfiguration a, ModeConfiguration b) { return a.bits_ <=> b.bits_; }

 private:
  explicit constexpr ModeConfiguration(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// Superposition of Fock basis configurations of n_particles in
/// 2 * n_arms modes.
class FockState {
 public:
  /// (configuration, amplitude) pairs, sorted by configuration, no repeats.
  using Amplitudes = std::vector<std::pair<ModeConfiguration, Complex>>;

  /// Sorts the entries, then validates uniqueness, particle number, fermionic
  /// occupancy, and unit norm (1e-12).
  FockState(Statistics statistics, std::size_t n_arms, std::size_t n_particles, Amplitudes amplitudes);

  Statistics statistics() const { return statistics_; }
  std::size_t n_arms() const { return n_arms_; }
  std::size_t n_modes() const { return 2 * n_arms_; }
  std::size_t n_particles() const { return n_particles_; }
  const Amplitudes& amplitudes() const { return amplitudes_; }

  Complex amplitude(ModeConfiguration config) const;

 private:
  Statistics statistics_;
  std::size_t n_arms_;
  std::size_t n_particles_;
  Amplitudes amplitudes_;
};

struct WeightedFockState {
  double weight;
  FockState state;
};

/// Statistical mixture of Fock states; weights sum to 1.
using FockEnsemble = std::vector<WeightedFockState>;

/// Pure internal state sum_s c_s |s_1...s_n> to
/// sum_s c_s a^dag_{1,s_1} ... a^dag_{n,s_n} |vac>, one particle per arm.
FockState prepare_input(const StateVector& internal, Statistics statistics);

/// Mixed internal state, decomposed into its eigen-ensemble (eigenvalues
/// below kRankTolerance dropped, weights renormalized).
FockEnsemble prepare_input(const DensityMatrix& internal, Statistics statistics);

/// Replaces every a^dag_{m,s} by sum_k u_mk a^dag_{k,s} and expands.
FockState evolve(const FockState& input, const MultiportUnitary& u);
FockEnsemble evolve(const FockEnsemble& input, const MultiportUnitary& u);

/// Particles per output arm.
using SpatialPattern = std::vector<unsigned>;

/// All patterns of n_particles over n_arms, in lexicographic order.
std::vector<SpatialPattern> spatial_patterns(std::size_t n_arms, std::size_t n_particles);

/// "(2,0)" style label.
std::string pattern_label(const SpatialPattern& pattern);

/// Probability of every spatial pattern (zeros included).
class OutcomeDistribution {
 public:
  using Probabilities = std::map<SpatialPattern, double>;

  /// Validates the pattern space, non-negativity, and unit sum (1e-10).
  OutcomeDistribution(std::size_t n_arms, std::size_t n_particles, Probabilities probabilities);

  std::size_t n_arms() const { return n_arms_; }
  std::size_t n_particles() const { return n_particles_; }
  const Probabilities& probabilities() const { return probabilities_; }

  /// Throws ArgumentError for patterns outside the space.
  double probability(const SpatialPattern& pattern) const;

  /// Probability that no arm holds more than one particle.
  double antibunching_probability() const;
  double bunching_probability() const { return 1.0 - antibunching_probability(); }

  /// Largest absolute difference over the shared pattern space.
  double max_difference(const OutcomeDistribution& other) const;

 private:
  std::size_t n_arms_;
  std::size_t n_particles_;
  Probabilities probabilities_;
};

OutcomeDistribution spatial_distribution(const FockState& state);
OutcomeDistribution spatial_distribution(const FockEnsemble& ensemble);

/// Independent route: explicit (anti)symmetrized first-quantized
/// wavefunction, evolved particle by particle, then measured in arm labels.
OutcomeDistribution first_quantized_oracle(const StateVector& internal, Statistics statistics,
                                           const MultiportUnitary& u);

/// prepare_input -> evolve -> spatial_distribution.
OutcomeDistribution simulate(const DensityMatrix& internal, Statistics statistics,
                             const MultiportUnitary& u);
OutcomeDistribution simulate(const StateVector& internal, Statistics statistics,
                             const MultiportUnitary& u);

}  // namespace statdisc::multiport
