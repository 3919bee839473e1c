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

#include "hdg/scenarios.hpp"

#include <cmath>
#include <numbers>

#include "hdg/errors.hpp"
#include "hdg/quadrature.hpp"

namespace hdg {

double BumpOnTailParams::profile(double v) const {
  const double sp = std::sqrt(std::numbers::pi);
  const double db = v - v_d;
  return n_p / (sp * v_p) * std::exp(-v * v / (v_p * v_p)) +
         n_b / (sp * v_b) * std::exp(-db * db / (v_b * v_b));
}

KineticState init_separable(const std::function<double(double)>& xfactor,
                            const std::function<double(double)>& vprofile, const MeshPtr& mesh,
                            int k, const HermiteSpec& vspec, const ScalingState& scaling) {
  vspec.validate();
  const HermiteCoeffs a = project_velocity(vprofile, scaling.alpha0, vspec);
  const DGField X = project_to_Xh(xfactor, mesh, k);
  KineticState s = KineticState::zeros(mesh, k, vspec.N, scaling);
  for (int n = 0; n < vspec.N; ++n) {
    auto& c = s.modes[n].coeffs();
    const auto& xc = X.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = a[n] * xc[i];
    }
  }
  return s;
}

KineticState init_general(const std::function<double(double, double)>& f0, const MeshPtr& mesh,
                          int k, const HermiteSpec& vspec, const ScalingState& scaling) {
  vspec.validate();
  KineticState s = KineticState::zeros(mesh, k, vspec.N, scaling);
  const QuadRule quad = gauss_legendre(k + 2);
  std::vector<double> basis(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j < mesh->Nx; ++j) {
    for (int q = 0; q < quad.size(); ++q) {
      const double x = mesh->edges[j] + 0.5 * (quad.nodes[q] + 1.0) * mesh->h[j];
      const HermiteCoeffs a =
          project_velocity([&](double v) { return f0(x, v); }, scaling.alpha0, vspec);
      legendre_basis(quad.nodes[q], basis);
      for (int n = 0; n < vspec.N; ++n) {
        for (int m = 0; m <= k; ++m) {
          s.modes[n](j, m) += quad.weights[q] * a[n] * basis[m];
        }
      }
    }
  }
  return s;
}

namespace {

void check_common(double alpha0, double gamma) {
  if (!(alpha0 > 0.0)) {
    throw InvalidArgument("alpha0 must be positive");
  }
  if (!(gamma >= 0.0)) {
    throw InvalidArgument("gamma must be non-negative");
  }
}

}  // namespace

KineticState init_landau(const LandauParams& p, const MeshPtr& mesh, int N, int k, double alpha0,
                         double gamma, double v_max) {
  check_common(alpha0, gamma);
  const double inv = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  return init_separable([&](double x) { return 1.0 + p.delta * std::cos(p.wavenumber * x); },
                        [&](double v) { return inv * std::exp(-0.5 * v * v); }, mesh, k,
                        HermiteSpec::with_defaults(N, v_max), ScalingState::initial(alpha0, gamma));
}

KineticState init_bump_on_tail(const BumpOnTailParams& p, const MeshPtr& mesh, int N, int k,
                               double alpha0, double gamma, double v_max) {
  check_common(alpha0, gamma);
  const double kx = 2.0 * std::numbers::pi * p.n_harm / mesh->L;
  return init_separable([&](double x) { return 1.0 + p.kappa * std::cos(kx * x); },
                        [&](double v) { return p.profile(v); }, mesh, k,
                        HermiteSpec::with_defaults(N, v_max), ScalingState::initial(alpha0, gamma));
}

KineticState init_custom(const Expression& f0, const MeshPtr& mesh, int N, int k, double alpha0,
                         double gamma, double v_max) {
  check_common(alpha0, gamma);
  return init_general([&](double x, double v) { return f0(x, v); }, mesh, k,
                      HermiteSpec::with_defaults(N, v_max), ScalingState::initial(alpha0, gamma));
}

}  // namespace hdg
