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

#include <cmath>
#include <numbers>
#include <random>

#include "statdisc/errors.hpp"
#include "statdisc/states.hpp"

namespace statdisc::states {
namespace {

Eigen::Matrix3d haar_rotation(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Quaterniond q(normal(rng), normal(rng), normal(rng), normal(rng));
  q.normalize();
  return q.toRotationMatrix();
}

std::vector<SphereNode> product_gauss_nodes(const ProductGaussRule& rule) {
  if (rule.polar_nodes == 0 || rule.azimuthal_nodes == 0) {
    throw ArgumentError("quadrature scheme has zero nodes");
  }
  const auto [z_nodes, z_weights] = gauss_legendre(rule.polar_nodes);
  std::optional<Eigen::Matrix3d> rotation;
  if (rule.rotation_seed) rotation = haar_rotation(*rule.rotation_seed);

  std::vector<SphereNode> nodes;
  nodes.reserve(rule.polar_nodes * rule.azimuthal_nodes);
  const double phi_step = 2.0 * std::numbers::pi / static_cast<double>(rule.azimuthal_nodes);
  for (std::size_t i = 0; i < rule.polar_nodes; ++i) {
    const double theta = std::acos(z_nodes[i]);
    // Gauss weights integrate dz over [-1, 1]; the sphere average needs 1/2.
    const double weight = 0.5 * z_weights[i] / static_cast<double>(rule.azimuthal_nodes);
    for (std::size_t j = 0; j < rule.azimuthal_nodes; ++j) {
      BlochDirection dir(theta, phi_step * static_cast<double>(j));
      if (rotation) dir = BlochDirection::from_vector(*rotation * dir.unit_vector());
      nodes.push_back({dir, weight});
    }
  }
  return nodes;
}

std::vector<SphereNode> monte_carlo_nodes(const MonteCarloRule& rule) {
  if (rule.samples == 0) throw ArgumentError("quadrature scheme has zero nodes");
  std::mt19937_64 rng(rule.seed);
  std::uniform_real_distribution<double> z_dist(-1.0, 1.0);
  std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * std::numbers::pi);
  std::vector<SphereNode> nodes;
  nodes.reserve(rule.samples);
  const double weight = 1.0 / static_cast<double>(rule.samples);
  for (std::size_t i = 0; i < rule.samples; ++i) {
    const double theta = std::acos(z_dist(rng));
    double phi = phi_dist(rng);
    if (phi >= 2.0 * std::numbers::pi) phi = 0.0;
    nodes.push_back({BlochDirection(theta, phi), weight});
  }
  return nodes;
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(std::size_t n) {
  if (n == 0) throw ArgumentError("gauss_legendre: need at least one node");
  if (n == 1) return {{0.0}, {2.0}};
  std::vector<double> x(n), w(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double root = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                           (static_cast<double>(n) + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = root;
      for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * root * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      derivative = static_cast<double>(n) * (root * p1 - p0) / (root * root - 1.0);
      const double step = p1 / derivative;
      root -= step;
      if (std::abs(step) < 1e-16) break;
    }
    x[i] = -root;
    x[n - 1 - i] = root;
    const double weight = 2.0 / ((1.0 - root * root) * derivative * derivative);
    w[i] = weight;
    w[n - 1 - i] = weight;
  }
  return {x, w};
}

std::vector<SphereNode> sphere_nodes(const QuadratureScheme& scheme) {
  return std::visit(
      [](const auto& rule) {
        using Rule = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<Rule, ProductGaussRule>) {
          return product_gauss_nodes(rule);
        } else {
          return monte_carlo_nodes(rule);
        }
      },
      scheme);
}

DensityMatrix quadrature_average(const DirectionalBuilder& builder, const QuadratureScheme& scheme) {
  const std::vector<SphereNode> nodes = sphere_nodes(scheme);
  std::optional<ComplexMatrix> sum;
  FactorShape shape;
  for (const SphereNode& node : nodes) {
    const DensityMatrix term = builder(node.direction);
    if (!sum) {
      sum = ComplexMatrix::Zero(term.dim(), term.dim());
      shape = term.factor_shape();
    } else if (term.dim() != static_cast<std::size_t>(sum->rows())) {
      throw ArgumentError("quadrature builder changed dimension between nodes");
    }
    *sum += node.weight * term.matrix();
  }
  // Weights sum to 1 only up to rounding; renormalize the trace.
  const double trace = sum->trace().real();
  ComplexMatrix avg = *sum / trace;
  avg = (0.5 * (avg + avg.adjoint())).eval();
  return DensityMatrix(std::move(avg), std::move(shape));
}

}  // namespace statdisc::states
