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

#pragma once

#include <vector>

namespace hdg {

/// Quadrature rule: nodes and positive weights. On the reference interval
/// [-1,1] the weights sum to 2.
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const noexcept { return static_cast<int>(nodes.size()); }
};

inline constexpr int kMaxGaussPoints = 64;

/// Gauss-Legendre rule with q points on [-1,1], exact up to degree 2q-1.
/// Throws InvalidArgument unless 1 <= q <= kMaxGaussPoints.
QuadRule gauss_legendre(int q);

/// Composite Gauss-Legendre rule on [a,b]: `panels` equal panels with
/// `points_per_panel` nodes each. Nodes are returned in increasing order.
QuadRule composite_gauss_legendre(double a, double b, int panels, int points_per_panel);

}  // namespace hdg
