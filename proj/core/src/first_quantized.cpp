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

// First-quantized reference for the Fock simulator. Shares nothing with the
// creation-operator expansion except the MultiportUnitary type: the N-particle
// wavefunction over labeled (arm, spin) coordinates is built explicitly,
// propagated one particle at a time, projected onto the (anti)symmetric
// subspace, and measured in arm labels.

#include <algorithm>
#include <numeric>

#include "statdisc/errors.hpp"
#include "statdisc/multiport.hpp"

namespace statdisc::multiport {
namespace {

constexpr std::size_t kMaxOracleParticles = 5;

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

int parity(const std::vector<std::size_t>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

OutcomeDistribution first_quantized_oracle(const StateVector& internal, Statistics statistics,
                                           const MultiportUnitary& u) {
  const std::size_t n = qubit_count(static_cast<std::size_t>(internal.size()));
  if (n > kMaxOracleParticles) {
    throw CapacityError("first-quantized oracle supports at most " +
                        std::to_string(kMaxOracleParticles) + " particles");
  }
  if (u.size() != n) throw ArgumentError("multiport arm count differs from particle count");
  const double norm = internal.norm();
  if (!(norm > 0.0)) throw ArgumentError("internal state is the zero vector");

  // Single-particle coordinate x = 2 * arm + spin; particle 0 is the most
  // significant digit of the joint index.
  const std::size_t local_dim = 2 * n;
  const std::size_t dim = ipow(local_dim, n);
  std::vector<std::size_t> stride(n);
  for (std::size_t p = 0; p < n; ++p) stride[p] = ipow(local_dim, n - 1 - p);

  // Labeled product: particle i sits in arm i with spin s_i.
  std::vector<Complex> psi(dim, Complex{});
  for (std::size_t s = 0; s < (std::size_t{1} << n); ++s) {
    std::size_t index = 0;
    for (std::size_t p = 0; p < n; ++p) {
      const std::size_t spin = (s >> (n - 1 - p)) & 1U;
      index += (2 * p + spin) * stride[p];
    }
    psi[index] = internal(static_cast<Eigen::Index>(s)) / norm;
  }

  // One-body propagation of each particle's arm label.
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<Complex> next(dim, Complex{});
    for (std::size_t index = 0; index < dim; ++index) {
      if (psi[index] == Complex{}) continue;
      const std::size_t x = (index / stride[p]) % local_dim;
      const std::size_t base = index - x * stride[p];
      const std::size_t arm = x / 2, spin = x % 2;
      for (std::size_t out = 0; out < n; ++out) {
        next[base + (2 * out + spin) * stride[p]] += u(arm, out) * psi[index];
      }
    }
    psi.swap(next);
  }

  // (Anti)symmetrizer: sum over relabelings, signed for fermions.
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<std::vector<std::size_t>, int>> group;
  do {
    group.emplace_back(perm, statistics == Statistics::fermion ? parity(perm) : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Complex> projected(dim, Complex{});
  std::vector<std::size_t> digits(n);
  for (std::size_t index = 0; index < dim; ++index) {
    for (std::size_t p = 0; p < n; ++p) digits[p] = (index / stride[p]) % local_dim;
    Complex sum{};
    for (const auto& [pi, sign] : group) {
      std::size_t source = 0;
      for (std::size_t p = 0; p < n; ++p) source += digits[pi[p]] * stride[p];
      sum += static_cast<double>(sign) * psi[source];
    }
    projected[index] = sum;
  }

  double total = 0.0;
  for (const Complex& a : projected) total += std::norm(a);
  if (!(total > 0.0)) throw ArgumentError("state vanishes under (anti)symmetrization");

  OutcomeDistribution::Probabilities probs;
  for (auto& pattern : spatial_patterns(n, n)) probs.emplace(std::move(pattern), 0.0);
  SpatialPattern pattern(n);
  for (std::size_t index = 0; index < dim; ++index) {
    if (projected[index] == Complex{}) continue;
    std::fill(pattern.begin(), pattern.end(), 0U);
    for (std::size_t p = 0; p < n; ++p) ++pattern[((index / stride[p]) % local_dim) / 2];
    probs[pattern] += std::norm(projected[index]) / total;
  }
  return OutcomeDistribution(n, n, std::move(probs));
}

}  // namespace statdisc::multiport
