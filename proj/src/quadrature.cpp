// Copyright 2026 The hdgvp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hdg/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hdg/errors.hpp"

namespace hdg {

QuadRule gauss_legendre(int q) {
  if (q < 1 || q > kMaxGaussPoints) {
    throw InvalidArgument("gauss_legendre: point count " + std::to_string(q) +
                          " outside [1, " + std::to_string(kMaxGaussPoints) + "]");
  }
  QuadRule rule;
  rule.nodes.assign(q, 0.0);
  rule.weights.assign(q, 0.0);

  // Newton iteration on P_q, started from the Chebyshev-like guess; roots
  // are symmetric so only half of them are computed.
  const int half = (q + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (q + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 1; j <= q; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = q * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) {
        break;
      }
    }
    // Recompute the derivative at the converged root for the weight.
    double p0 = 1.0;
    double p1 = 0.0;
    for (int j = 1; j <= q; ++j) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
    }
    dp = q * (z * p0 - p1) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[q - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[q - 1 - i] = w;
  }
  if (q % 2 == 1) {
    rule.nodes[q / 2] = 0.0;
  }
  return rule;
}

QuadRule composite_gauss_legendre(double a, double b, int panels, int points_per_panel) {
  if (!(b > a) || panels < 1) {
    throw InvalidArgument("composite_gauss_legendre: need b > a and at least one panel");
  }
  const QuadRule ref = gauss_legendre(points_per_panel);
  const double width = (b - a) / panels;
  QuadRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(panels) * points_per_panel);
  rule.weights.reserve(rule.nodes.capacity());
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    for (int i = 0; i < points_per_panel; ++i) {
      rule.nodes.push_back(lo + 0.5 * width * (ref.nodes[i] + 1.0));
      rule.weights.push_back(0.5 * width * ref.weights[i]);
    }
  }
  return rule;
}

}  // namespace hdg
