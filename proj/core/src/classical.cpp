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

// Classical particles with an exclusion rule: probabilities of routings are
// summed instead of amplitudes.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "statdisc/applications.hpp"
#include "statdisc/errors.hpp"

namespace statdisc::applications {
namespace {

unsigned arm_capacity(PauliReading reading) { return reading == PauliReading::standard ? 1U : 2U; }

double binomial(std::size_t n, std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

struct RoutingCounts {
  double allowed = 0.0;
  double all_distinct = 0.0;
};

// Particles 0..n_up-1 carry spin up, the rest spin down. Walks all n^n
// routings (output arm per particle) and counts the ones satisfying the
// per-spin arm capacity, and among them the ones with every arm distinct.
RoutingCounts enumerate_routings(std::size_t n, std::size_t n_up, unsigned capacity) {
  RoutingCounts counts;
  std::vector<std::size_t> route(n, 0);
  std::vector<unsigned> up_load(n), down_load(n);
  while (true) {
    std::fill(up_load.begin(), up_load.end(), 0U);
    std::fill(down_load.begin(), down_load.end(), 0U);
    bool ok = true;
    for (std::size_t p = 0; p < n && ok; ++p) {
      unsigned& slot = p < n_up ? up_load[route[p]] : down_load[route[p]];
      ok = ++slot <= capacity;
    }
    if (ok) {
      counts.allowed += 1.0;
      bool distinct = true;
      for (std::size_t arm = 0; arm < n && distinct; ++arm) distinct = up_load[arm] + down_load[arm] <= 1;
      if (distinct) counts.all_distinct += 1.0;
    }
    std::size_t p = 0;
    while (p < n && ++route[p] == n) route[p++] = 0;
    if (p == n) break;
  }
  return counts;
}

// Uniform routing of `group` particles over n arms with at most `capacity`
// per arm, added into `load`.
void sample_group(std::size_t n, std::size_t group, unsigned capacity, std::mt19937_64& rng,
                  std::vector<unsigned>& load) {
  if (group == 0) return;
  if (capacity == 1) {
    std::vector<std::size_t> arms(n);
    std::iota(arms.begin(), arms.end(), 0);
    for (std::size_t i = 0; i < group; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, n - 1);
      std::swap(arms[i], arms[pick(rng)]);
      ++load[arms[i]];
    }
    return;
  }
  std::uniform_int_distribution<std::size_t> arm(0, n - 1);
  std::vector<unsigned> trial(n);
  while (true) {
    std::fill(trial.begin(), trial.end(), 0U);
    bool ok = true;
    for (std::size_t i = 0; i < group && ok; ++i) ok = ++trial[arm(rng)] <= capacity;
    if (ok) break;
  }
  for (std::size_t a = 0; a < n; ++a) load[a] += trial[a];
}

}  // namespace

std::string_view to_string(PauliReading reading) {
  return reading == PauliReading::standard ? "standard" : "literal";
}

PauliReading parse_pauli_reading(std::string_view text) {
  if (text == "standard") return PauliReading::standard;
  if (text == "literal") return PauliReading::literal;
  throw ArgumentError("unknown classical interpretation '" + std::string(text) +
                      "' (expected standard|literal)");
}

double classical_pauli_success(std::size_t n, PauliReading reading) {
  if (n == 0) throw ArgumentError("classical_pauli_success: n must be >= 1");
  if (n > kMaxExactClassical) {
    throw CapacityError("exact classical enumeration supports n <= " +
                        std::to_string(kMaxExactClassical) + "; use the Monte Carlo mode for n = " +
                        std::to_string(n));
  }
  const unsigned capacity = arm_capacity(reading);

  // Aligned spins: every particle carries the same internal state.
  const RoutingCounts aligned = enumerate_routings(n, n, capacity);
  const double p_distinct_aligned = aligned.all_distinct / aligned.allowed;

  // Independent uniform spins. Exit arms do not depend on the entry arm, so
  // an assignment matters only through its number of up spins.
  double p_distinct_mixed = 0.0;
  const double n_assignments = std::ldexp(1.0, static_cast<int>(n));
  for (std::size_t up = 0; up <= n; ++up) {
    const RoutingCounts c = enumerate_routings(n, up, capacity);
    p_distinct_mixed += binomial(n, up) / n_assignments * (c.all_distinct / c.allowed);
  }
  return 0.5 * p_distinct_aligned + 0.5 * (1.0 - p_distinct_mixed);
}

double classical_pauli_success_monte_carlo(std::size_t n, PauliReading reading, std::size_t samples,
                                           std::uint64_t seed) {
  if (n == 0) throw ArgumentError("classical_pauli_success_monte_carlo: n must be >= 1");
  if (samples == 0) throw ArgumentError("Monte Carlo mode needs at least one sample");
  const unsigned capacity = arm_capacity(reading);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<unsigned> load(n);
  std::size_t successes = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const bool aligned = coin(rng);
    std::size_t up = 0;
    if (aligned) {
      up = n;
    } else {
      for (std::size_t p = 0; p < n; ++p) up += coin(rng) ? 1 : 0;
    }
    std::fill(load.begin(), load.end(), 0U);
    sample_group(n, up, capacity, rng, load);
    sample_group(n, n - up, capacity, rng, load);
    const bool distinct = std::all_of(load.begin(), load.end(), [](unsigned c) { return c <= 1; });
    if (distinct == aligned) ++successes;
  }
  return static_cast<double>(successes) / static_cast<double>(samples);
}

std::vector<ClassicalComparisonRow> classical_comparison(std::size_t n_max) {
  std::vector<ClassicalComparisonRow> rows;
  for (std::size_t n = 1; n <= n_max; ++n) {
    rows.push_back({n, classical_pauli_success(n, PauliReading::standard),
                    classical_pauli_success(n, PauliReading::literal),
                    discrimination::helstrom_aligned_vs_mixed(n)});
  }
  return rows;
}

}  // namespace statdisc::applications
