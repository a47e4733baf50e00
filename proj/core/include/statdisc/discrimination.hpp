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

#pragma once

#include <cstddef>
#include <map>
#include <string_view>
#include <utility>

#include "statdisc/linalg.hpp"
#include "statdisc/multiport.hpp"

namespace statdisc::discrimination {

enum class Label { h0, h1 };

std::string_view to_string(Label label);

/// One of two candidate internal states with its prior probability.
struct Hypothesis {
  Label label;
  DensityMatrix state;
  double prior;
};

/// (H0, H1) with priors (prior0, 1 - prior0). Throws ArgumentError for a
/// prior outside [0, 1].
std::pair<Hypothesis, Hypothesis> hypothesis_pair(DensityMatrix state0, DensityMatrix state1,
                                                  double prior0 = 0.5);

/// Guessed hypothesis per observed spatial pattern.
using Strategy = std::map<multiport::SpatialPattern, Label>;

struct MapDecision {
  Strategy strategy;
  double success_probability;
};

struct DiscriminationReport {
  double p_helstrom;
  double p_bs;
  double gap;  // p_helstrom - p_bs
  Strategy strategy;
  multiport::Statistics statistics;
  std::size_t n;  // particle count
  multiport::OutcomeDistribution distribution0;
  multiport::OutcomeDistribution distribution1;
};

/// Optimal single-shot success probability, 1/2 (1 + ||p0 rho0 - p1 rho1||_1).
/// At equal priors this is 1/2 + 1/4 ||rho0 - rho1||_1.
double helstrom(const Hypothesis& h0, const Hypothesis& h1);

/// 1 - d_S / (2 d) with d_S the rank of the symmetric projector on n qubits
/// and d = 2^n, i.e. 1 - (n + 1) / 2^(n + 1). The rank and dimension are
/// measured, not assumed.
double helstrom_aligned_vs_mixed(std::size_t n);

/// Bayes rule on outcome patterns. Each pattern is assigned to the
/// hypothesis with the larger prior-weighted likelihood; near-ties (within
/// kTieTolerance) go to H0. The success probability is
/// sum_pattern max(p0 P0, p1 P1).
MapDecision map_strategy(const multiport::OutcomeDistribution& d0,
                         const multiport::OutcomeDistribution& d1,
                         std::pair<double, double> priors);

inline constexpr double kTieTolerance = 1e-12;

/// Sends both hypotheses through dft_unitary(n) and applies map_strategy.
DiscriminationReport beam_splitter_discrimination(const Hypothesis& h0, const Hypothesis& h1,
                                                  multiport::Statistics statistics);
DiscriminationReport beam_splitter_discrimination(const Hypothesis& h0, const Hypothesis& h1,
                                                  multiport::Statistics statistics,
                                                  const multiport::MultiportUnitary& u);

}  // namespace statdisc::discrimination
