// Copyright 2026 The bs-sim authors
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

#ifndef BSSIM_QUADRATURE_HPP
#define BSSIM_QUADRATURE_HPP

#include <cmath>
#include <numbers>
#include <vector>

#include "bssim/errors.hpp"

namespace bssim {

struct QuadratureRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// Gauss-Legendre nodes and weights by Newton iteration on the Legendre
/// recurrence.
inline QuadratureRule gauss_legendre(int order) {
  if (order < 1) throw domain_error("quadrature order must be positive");
  QuadratureRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  return rule;
}

/// Rule mapped to the interval (a, b).
inline QuadratureRule gauss_legendre_on(int order, double a, double b) {
  QuadratureRule rule = gauss_legendre(order);
  const double mid = 0.5 * (a + b), halfw = 0.5 * (b - a);
  for (int i = 0; i < order; ++i) {
    rule.nodes[i] = mid + halfw * rule.nodes[i];
    rule.weights[i] *= halfw;
  }
  return rule;
}

}  // namespace bssim

#endif  // BSSIM_QUADRATURE_HPP
