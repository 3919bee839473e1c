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

#include "hdg/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace hdg {

namespace {

// Shift a field by a constant.
void add_constant(DGField& u, double c) {
  const double c0 = c * std::sqrt(2.0);  // c = (c sqrt 2) phi_0
  for (int j = 0; j < u.cells(); ++j) {
    u(j, 0) += c0;
  }
}

}  // namespace

DGField antiderivative(const DGField& u, double start) {
  const int p = u.degree();
  DGField F(u.mesh_ptr(), p + 1);
  std::vector<double> leg(static_cast<std::size_t>(p) + 2);  // coefficients in the P_m basis
  double left_value = start;
  for (int j = 0; j < u.cells(); ++j) {
    std::fill(leg.begin(), leg.end(), 0.0);
    const double half_h = 0.5 * u.mesh().h[j];
    const auto a = u.cell(j);
    // int_{-1}^{xi} P_0 = P_1 + P_0;  int_{-1}^{xi} P_m = (P_{m+1} - P_{m-1}) / (2m + 1).
    for (int m = 0; m <= p; ++m) {
      const double am = a[m] * std::sqrt(m + 0.5) * half_h;
      if (m == 0) {
        leg[0] += am;
        leg[1] += am;
      } else {
        leg[m + 1] += am / (2.0 * m + 1.0);
        leg[m - 1] -= am / (2.0 * m + 1.0);
      }
    }
    auto b = F.cell(j);
    for (int l = 0; l <= p + 1; ++l) {
      b[l] = leg[l] / std::sqrt(l + 0.5);
    }
    // The local antiderivative vanishes at xi = -1; lift it to the running value.
    b[0] += left_value * std::sqrt(2.0);
    left_value = F.right_trace(j);
  }
  return F;
}

ElectricField solve_poisson(const DGField& C0) {
  ElectricField E;
  E.rho0 = C0.integral() / C0.mesh().L;
  DGField source = C0;
  const double shift = E.rho0 * std::sqrt(2.0);
  for (int j = 0; j < source.cells(); ++j) {
    source(j, 0) -= shift;
  }
  E.field = antiderivative(source, 0.0);
  add_constant(E.field, -E.field.integral() / C0.mesh().L);
  E.Einf = sup_norm(E.field);
  return E;
}

double sup_norm(const DGField& u) {
  const int n = 2 * (u.degree() + 2);
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(n) + 2);
  samples.push_back(-1.0);
  samples.push_back(1.0);
  for (int i = 0; i < n; ++i) {
    samples.push_back(std::cos(std::numbers::pi * (i + 0.5) / n));
  }
  double mx = 0.0;
  for (int j = 0; j < u.cells(); ++j) {
    for (double xi : samples) {
      mx = std::max(mx, std::abs(u.eval_local(j, xi)));
    }
  }
  return mx;
}

DGField potential(const ElectricField& E) {
  DGField phi = antiderivative(E.field, 0.0);
  for (double& c : phi.coeffs()) {
    c = -c;
  }
  add_constant(phi, -phi.integral() / E.field.mesh().L);
  return phi;
}

}  // namespace hdg
