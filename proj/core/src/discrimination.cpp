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

#include "statdisc/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "statdisc/errors.hpp"

namespace statdisc::discrimination {
namespace {

constexpr double kPriorTolerance = 1e-12;

void check_priors(double p0, double p1) {
  if (!(p0 >= 0.0 && p0 <= 1.0 && p1 >= 0.0 && p1 <= 1.0)) {
    throw ArgumentError("priors must lie in [0, 1]");
  }
  if (std::abs(p0 + p1 - 1.0) > kPriorTolerance) {
    throw ArgumentError("priors sum to " + std::to_string(p0 + p1) + ", expected 1");
  }
}

}  // namespace

std::string_view to_string(Label label) { return label == Label::h0 ? "H0" : "H1"; }

std::pair<Hypothesis, Hypothesis> hypothesis_pair(DensityMatrix state0, DensityMatrix state1,
                                                  double prior0) {
  check_priors(prior0, 1.0 - prior0);
  return {Hypothesis{Label::h0, std::move(state0), prior0},
          Hypothesis{Label::h1, std::move(state1), 1.0 - prior0}};
}

double helstrom(const Hypothesis& h0, const Hypothesis& h1) {
  check_priors(h0.prior, h1.prior);
  if (h0.state.dim() != h1.state.dim()) {
    throw ArgumentError("hypotheses live in spaces of different dimension");
  }
  const ComplexMatrix weighted = h0.prior * h0.state.matrix() - h1.prior * h1.state.matrix();
  return 0.5 * (1.0 + trace_norm(weighted));
}

double helstrom_aligned_vs_mixed(std::size_t n) {
  if (n == 0) throw ArgumentError("helstrom_aligned_vs_mixed: n must be >= 1");
  const ComplexMatrix projector = symmetric_projector(n);
  const auto symmetric_dim = static_cast<double>(numerical_rank(projector));
  const auto dim = static_cast<double>(projector.rows());
  // rho_N is always recognized; tau_N is recognized whenever it falls outside
  // the symmetric subspace, which happens with probability (d - d_S) / d.
  const double p_mixed_identified = (dim - symmetric_dim) / dim;
  return 0.5 * (1.0 + p_mixed_identified);
}

MapDecision map_strategy(const multiport::OutcomeDistribution& d0,
                         const multiport::OutcomeDistribution& d1,
                         std::pair<double, double> priors) {
  check_priors(priors.first, priors.second);
  if (d0.n_arms() != d1.n_arms() || d0.n_particles() != d1.n_particles()) {
    throw ArgumentError("outcome distributions are over different pattern spaces");
  }
  MapDecision decision{{}, 0.0};
  for (const auto& [pattern, p0] : d0.probabilities()) {
    const double w0 = priors.first * p0;
    const double w1 = priors.second * d1.probability(pattern);
    decision.strategy.emplace(pattern, w0 >= w1 - kTieTolerance ? Label::h0 : Label::h1);
    decision.success_probability += std::max(w0, w1);
  }
  return decision;
}

DiscriminationReport beam_splitter_discrimination(const Hypothesis& h0, const Hypothesis& h1,
                                                  multiport::Statistics statistics) {
  const std::size_t n = qubit_count(h0.state.dim());
  return beam_splitter_discrimination(h0, h1, statistics, multiport::dft_unitary(n));
}

DiscriminationReport beam_splitter_discrimination(const Hypothesis& h0, const Hypothesis& h1,
                                                  multiport::Statistics statistics,
                                                  const multiport::MultiportUnitary& u) {
  const double p_helstrom = helstrom(h0, h1);
  const std::size_t n = qubit_count(h0.state.dim());
  auto d0 = multiport::simulate(h0.state, statistics, u);
  auto d1 = multiport::simulate(h1.state, statistics, u);
  MapDecision decision = map_strategy(d0, d1, {h0.prior, h1.prior});
  return DiscriminationReport{p_helstrom,
                              decision.success_probability,
                              p_helstrom - decision.success_probability,
                              std::move(decision.strategy),
                              statistics,
                              n,
                              std::move(d0),
                              std::move(d1)};
}

}  // namespace statdisc::discrimination
