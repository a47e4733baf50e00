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

#include "statdisc/multiport.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "statdisc/errors.hpp"

namespace statdisc::multiport {
namespace {

constexpr double kUnitarityTolerance = 1e-12;
constexpr double kNormTolerance = 1e-12;
constexpr double kDistributionTolerance = 1e-10;

using WorkState = std::unordered_map<std::uint64_t, Complex>;

// a^dag_mode |config>. Returns false when the operator annihilates the state.
bool apply_creation(ModeConfiguration config, std::size_t mode, Statistics statistics,
                    ModeConfiguration& out, double& factor) {
  const unsigned k = config.count(mode);
  if (statistics == Statistics::fermion) {
    if (k != 0) return false;
    factor = (config.count_below(mode) % 2 == 0) ? 1.0 : -1.0;
    out = config.with_count(mode, 1);
    return true;
  }
  if (k >= 15) throw CapacityError("mode occupancy exceeds the packed representation");
  factor = std::sqrt(static_cast<double>(k + 1));
  out = config.with_count(mode, k + 1);
  return true;
}

void check_arm_count(std::size_t n_arms) {
  if (n_arms == 0) throw ArgumentError("a multiport needs at least one arm");
  if (n_arms > kMaxArms) {
    throw CapacityError("exact Fock simulation supports at most " + std::to_string(kMaxArms) +
                        " arms, got " + std::to_string(n_arms));
  }
}

void enumerate_patterns(std::size_t arm, std::size_t remaining, SpatialPattern& current,
                        std::vector<SpatialPattern>& out) {
  if (arm + 1 == current.size()) {
    current[arm] = static_cast<unsigned>(remaining);
    out.push_back(current);
    return;
  }
  for (std::size_t k = 0; k <= remaining; ++k) {
    current[arm] = static_cast<unsigned>(k);
    enumerate_patterns(arm + 1, remaining - k, current, out);
  }
}

}  // namespace

std::string_view to_string(Statistics statistics) {
  return statistics == Statistics::boson ? "boson" : "fermion";
}

Statistics parse_statistics(std::string_view text) {
  if (text == "boson") return Statistics::boson;
  if (text == "fermion") return Statistics::fermion;
  throw ArgumentError("unknown statistics '" + std::string(text) + "' (expected boson|fermion)");
}

MultiportUnitary MultiportUnitary::from_matrix(ComplexMatrix matrix) {
  const auto n = matrix.rows();
  if (n == 0 || matrix.cols() != n) throw ArgumentError("multiport matrix must be square and non-empty");
  if (!matrix.allFinite()) throw ArgumentError("multiport matrix has non-finite entries");
  const double unitarity =
      (matrix.adjoint() * matrix - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (unitarity > kUnitarityTolerance) {
    throw ArgumentError("multiport matrix is not unitary (error " + std::to_string(unitarity) + ")");
  }
  const double modulus = 1.0 / std::sqrt(static_cast<double>(n));
  const double balance = (matrix.cwiseAbs().array() - modulus).abs().maxCoeff();
  if (balance > kUnitarityTolerance) {
    throw ArgumentError("multiport matrix is not balanced (error " + std::to_string(balance) + ")");
  }
  return MultiportUnitary(std::move(matrix));
}

MultiportUnitary dft_unitary(std::size_t n) {
  if (n == 0) throw ArgumentError("dft_unitary: n must be >= 1");
  ComplexMatrix u(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k) {
      // Reduce the exponent mod n first so large products keep full precision.
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((m * k) % n) /
                           static_cast<double>(n);
      u(m, k) = std::polar(scale, angle);
    }
  }
  return MultiportUnitary::from_matrix(std::move(u));
}

MultiportUnitary symmetric_beam_splitter() {
  ComplexMatrix u(2, 2);
  const Complex i(0.0, 1.0);
  u << 1.0, i, i, 1.0;
  return MultiportUnitary::from_matrix(u / std::numbers::sqrt2);
}

ModeConfiguration ModeConfiguration::with_count(std::size_t mode, unsigned count) const {
  if (mode >= 2 * kMaxArms || count > 15) throw CapacityError("mode configuration overflow");
  const std::uint64_t shift = 4 * mode;
  const std::uint64_t cleared = bits_ & ~(std::uint64_t{0xF} << shift);
  return ModeConfiguration(cleared | (std::uint64_t{count} << shift));
}

unsigned ModeConfiguration::count_below(std::size_t mode) const {
  unsigned total = 0;
  for (std::size_t m = 0; m < mode; ++m) total += count(m);
  return total;
}

unsigned ModeConfiguration::total() const { return count_below(2 * kMaxArms); }

std::vector<unsigned> ModeConfiguration::occupations(std::size_t n_modes) const {
  std::vector<unsigned> out(n_modes);
  for (std::size_t m = 0; m < n_modes; ++m) out[m] = count(m);
  return out;
}

FockState::FockState(Statistics statistics, std::size_t n_arms, std::size_t n_particles,
                     Amplitudes amplitudes)
    : statistics_(statistics), n_arms_(n_arms), n_particles_(n_particles),
      amplitudes_(std::move(amplitudes)) {
  check_arm_count(n_arms);
  if (n_particles == 0) throw ArgumentError("a Fock state needs at least one particle");
  std::sort(amplitudes_.begin(), amplitudes_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  const auto repeated = std::adjacent_find(amplitudes_.begin(), amplitudes_.end(),
                                           [](const auto& a, const auto& b) { return a.first == b.first; });
  if (repeated != amplitudes_.end()) throw ArgumentError("Fock state lists a configuration twice");
  double norm = 0.0;
  for (const auto& [config, amp] : amplitudes_) {
    if (config.total() != n_particles) {
      throw ArgumentError("Fock configuration has the wrong particle number");
    }
    if (config.count_below(n_modes()) != n_particles) {
      throw ArgumentError("Fock configuration occupies a mode beyond the arm count");
    }
    if (statistics == Statistics::fermion) {
      for (std::size_t m = 0; m < n_modes(); ++m) {
        if (config.count(m) > 1) throw ArgumentError("fermionic configuration with a doubly occupied mode");
      }
    }
    norm += std::norm(amp);
  }
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw ArgumentError("Fock state norm " + std::to_string(norm) + " != 1");
  }
}

Complex FockState::amplitude(ModeConfiguration config) const {
  const auto it = std::lower_bound(amplitudes_.begin(), amplitudes_.end(), config,
                                   [](const auto& entry, ModeConfiguration c) { return entry.first < c; });
  return (it == amplitudes_.end() || it->first != config) ? Complex{} : it->second;
}

FockState prepare_input(const StateVector& internal, Statistics statistics) {
  const std::size_t n = qubit_count(static_cast<std::size_t>(internal.size()));
  check_arm_count(n);
  const double norm = internal.norm();
  if (!(norm > 0.0)) throw ArgumentError("internal state is the zero vector");

  FockState::Amplitudes amps;
  for (std::size_t s = 0; s < static_cast<std::size_t>(internal.size()); ++s) {
    const Complex c = internal(static_cast<Eigen::Index>(s));
    if (c == Complex{}) continue;
    // Arm i carries qubit i; arms ascend with modes, so the operator product
    // is already in canonical order and carries no sign.
    ModeConfiguration config;
    for (std::size_t arm = 0; arm < n; ++arm) {
      const std::size_t spin = (s >> (n - 1 - arm)) & 1U;
      config = config.with_count(mode_index(arm, spin), 1);
    }
    amps.emplace_back(config, c / norm);
  }
  return FockState(statistics, n, n, std::move(amps));
}

FockEnsemble prepare_input(const DensityMatrix& internal, Statistics statistics) {
  const std::size_t n = qubit_count(internal.dim());
  check_arm_count(n);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(internal.matrix());
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");

  FockEnsemble ensemble;
  double total = 0.0;
  for (Eigen::Index k = solver.eigenvalues().size(); k-- > 0;) {
    const double weight = solver.eigenvalues()(k);
    if (weight < kRankTolerance) continue;
    ensemble.push_back({weight, prepare_input(StateVector(solver.eigenvectors().col(k)), statistics)});
    total += weight;
  }
  for (auto& member : ensemble) member.weight /= total;
  return ensemble;
}

FockState evolve(const FockState& input, const MultiportUnitary& u) {
  const std::size_t n_arms = input.n_arms();
  if (u.size() != n_arms) {
    throw ArgumentError("multiport has " + std::to_string(u.size()) + " arms, state has " +
                        std::to_string(n_arms));
  }
  const Statistics statistics = input.statistics();
  const bool fermionic = statistics == Statistics::fermion;
  WorkState output;
  std::array<WorkState, 2> sector;
  WorkState next;

  for (const auto& [config, amp] : input.amplitudes()) {
    double factorial_norm = 1.0;
    for (std::size_t m = 0; m < input.n_modes(); ++m) {
      for (unsigned j = 2; j <= config.count(m); ++j) factorial_norm *= static_cast<double>(j);
    }

    // Transformed operators of different spin act on disjoint modes, so the
    // product splits into a spin-0 factor and a spin-1 factor. Moving every
    // spin-0 operator to the left of every spin-1 operator costs one sign per
    // (spin-1, later spin-0) pair in the ascending input product.
    double reorder_sign = 1.0;
    if (fermionic) {
      unsigned spin1_seen = 0;
      for (std::size_t arm = 0; arm < n_arms; ++arm) {
        if (config.count(mode_index(arm, 0)) % 2 == 1 && spin1_seen % 2 == 1) reorder_sign = -reorder_sign;
        spin1_seen += config.count(mode_index(arm, 1));
      }
    }

    for (std::size_t spin = 0; spin < 2; ++spin) {
      WorkState& current = sector[spin];
      current.clear();
      current.emplace(0, Complex(1.0, 0.0));
      // Within a sector the rightmost operator of the ascending product acts first.
      for (std::size_t arm = n_arms; arm-- > 0;) {
        const std::size_t mode = mode_index(arm, spin);
        for (unsigned rep = 0; rep < config.count(mode); ++rep) {
          next.clear();
          for (const auto& [bits, a] : current) {
            const ModeConfiguration from = ModeConfiguration::from_packed(bits);
            for (std::size_t out_arm = 0; out_arm < n_arms; ++out_arm) {
              ModeConfiguration to;
              double factor = 0.0;
              if (!apply_creation(from, mode_index(out_arm, spin), statistics, to, factor)) continue;
              next[to.packed()] += a * u(arm, out_arm) * factor;
            }
          }
          current.swap(next);
        }
      }
    }

    // Merge C0 C1 |vac> into ascending mode order: a spin-1 operator in arm b
    // passes every spin-0 operator in arms above b.
    const Complex scale = amp * reorder_sign / std::sqrt(factorial_norm);
    for (const auto& [bits0, a0] : sector[0]) {
      const ModeConfiguration c0 = ModeConfiguration::from_packed(bits0);
      for (const auto& [bits1, a1] : sector[1]) {
        double sign = 1.0;
        if (fermionic) {
          const ModeConfiguration c1 = ModeConfiguration::from_packed(bits1);
          unsigned crossings = 0;
          unsigned spin0_above = 0;
          for (std::size_t arm = n_arms; arm-- > 0;) {
            crossings += c1.count(mode_index(arm, 1)) * spin0_above;
            spin0_above += c0.count(mode_index(arm, 0));
          }
          if (crossings % 2 == 1) sign = -1.0;
        }
        output[bits0 | bits1] += scale * sign * a0 * a1;
      }
    }
  }

  FockState::Amplitudes amps;
  amps.reserve(output.size());
  for (const auto& [bits, a] : output) amps.emplace_back(ModeConfiguration::from_packed(bits), a);
  return FockState(statistics, n_arms, input.n_particles(), std::move(amps));
}

FockEnsemble evolve(const FockEnsemble& input, const MultiportUnitary& u) {
  FockEnsemble out;
  out.reserve(input.size());
  for (const auto& member : input) out.push_back({member.weight, evolve(member.state, u)});
  return out;
}

std::vector<SpatialPattern> spatial_patterns(std::size_t n_arms, std::size_t n_particles) {
  if (n_arms == 0) throw ArgumentError("spatial_patterns: need at least one arm");
  std::vector<SpatialPattern> out;
  SpatialPattern current(n_arms, 0);
  enumerate_patterns(0, n_particles, current, out);
  return out;
}

std::string pattern_label(const SpatialPattern& pattern) {
  std::string label = "(";
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (i > 0) label += ',';
    label += std::to_string(pattern[i]);
  }
  return label + ")";
}

OutcomeDistribution::OutcomeDistribution(std::size_t n_arms, std::size_t n_particles,
                                         Probabilities probabilities)
    : n_arms_(n_arms), n_particles_(n_particles), probabilities_(std::move(probabilities)) {
  const auto patterns = spatial_patterns(n_arms, n_particles);
  if (patterns.size() != probabilities_.size()) {
    throw ArgumentError("outcome distribution does not cover the pattern space");
  }
  double total = 0.0;
  for (const auto& pattern : patterns) {
    const auto it = probabilities_.find(pattern);
    if (it == probabilities_.end()) throw ArgumentError("outcome distribution misses pattern " + pattern_label(pattern));
    if (!(it->second >= 0.0)) throw ArgumentError("negative outcome probability at " + pattern_label(pattern));
    total += it->second;
  }
  if (std::abs(total - 1.0) > kDistributionTolerance) {
    throw ArgumentError("outcome probabilities sum to " + std::to_string(total));
  }
}

double OutcomeDistribution::probability(const SpatialPattern& pattern) const {
  const auto it = probabilities_.find(pattern);
  if (it == probabilities_.end()) throw ArgumentError("pattern " + pattern_label(pattern) + " not in the outcome space");
  return it->second;
}

double OutcomeDistribution::antibunching_probability() const {
  double p = 0.0;
  for (const auto& [pattern, prob] : probabilities_) {
    bool distinct = true;
    for (unsigned c : pattern) distinct = distinct && c <= 1;
    if (distinct) p += prob;
  }
  return p;
}

double OutcomeDistribution::max_difference(const OutcomeDistribution& other) const {
  if (other.n_arms_ != n_arms_ || other.n_particles_ != n_particles_) {
    throw ArgumentError("comparing outcome distributions over different pattern spaces");
  }
  double diff = 0.0;
  for (const auto& [pattern, prob] : probabilities_) {
    diff = std::max(diff, std::abs(prob - other.probability(pattern)));
  }
  return diff;
}

OutcomeDistribution spatial_distribution(const FockEnsemble& ensemble) {
  if (ensemble.empty()) throw ArgumentError("empty Fock ensemble");
  const std::size_t n_arms = ensemble.front().state.n_arms();
  const std::size_t n_particles = ensemble.front().state.n_particles();
  const Statistics statistics = ensemble.front().state.statistics();

  // Accumulate on packed per-arm totals (4 bits per arm), in a fixed order.
  const auto patterns = spatial_patterns(n_arms, n_particles);
  std::unordered_map<std::uint64_t, std::size_t> slot;
  slot.reserve(patterns.size());
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    std::uint64_t key = 0;
    for (std::size_t arm = 0; arm < n_arms; ++arm) key |= std::uint64_t{patterns[i][arm]} << (4 * arm);
    slot.emplace(key, i);
  }
  std::vector<double> accumulated(patterns.size(), 0.0);
  for (const auto& member : ensemble) {
    const FockState& state = member.state;
    if (state.n_arms() != n_arms || state.n_particles() != n_particles ||
        state.statistics() != statistics) {
      throw ArgumentError("ensemble members disagree on arms, particles, or statistics");
    }
    for (const auto& [config, amp] : state.amplitudes()) {
      std::uint64_t key = 0;
      for (std::size_t arm = 0; arm < n_arms; ++arm) key |= std::uint64_t{config.arm_total(arm)} << (4 * arm);
      accumulated[slot.at(key)] += member.weight * std::norm(amp);
    }
  }
  OutcomeDistribution::Probabilities probs;
  for (std::size_t i = 0; i < patterns.size(); ++i) probs.emplace_hint(probs.end(), patterns[i], accumulated[i]);
  return OutcomeDistribution(n_arms, n_particles, std::move(probs));
}

OutcomeDistribution spatial_distribution(const FockState& state) {
  return spatial_distribution(FockEnsemble{{1.0, state}});
}

OutcomeDistribution simulate(const DensityMatrix& internal, Statistics statistics,
                             const MultiportUnitary& u) {
  return spatial_distribution(evolve(prepare_input(internal, statistics), u));
}

OutcomeDistribution simulate(const StateVector& internal, Statistics statistics,
                             const MultiportUnitary& u) {
  return spatial_distribution(evolve(prepare_input(internal, statistics), u));
}

}  // namespace statdisc::multiport
