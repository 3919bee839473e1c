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

#include "hdg/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hdg/errors.hpp"

namespace hdg {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343819;
// exp(709.78) is the largest finite double.
constexpr double kMaxExponent = 709.0;

}  // namespace

ScalingState ScalingState::initial(double alpha0, double gamma) {
  if (!(alpha0 > 0.0) || !(gamma >= 0.0)) {
    throw InvalidArgument("scaling: need alpha0 > 0 and gamma >= 0");
  }
  return ScalingState{alpha0, gamma, alpha0, 0.0};
}

HermiteSpec HermiteSpec::with_defaults(int N, double v_max) {
  HermiteSpec spec;
  spec.N = N;
  spec.vquad.v_max = v_max;
  spec.vquad.points = std::max(4 * N, 256);
  spec.validate();
  return spec;
}

void HermiteSpec::validate() const {
  if (N < 1) {
    throw InvalidArgument("hermite spec: N must be >= 1");
  }
  if (!(vquad.v_max > 0.0)) {
    throw InvalidArgument("hermite spec: v_max must be positive");
  }
  if (vquad.points < 2 * N) {
    throw InvalidArgument("hermite spec: need at least 2N velocity quadrature points");
  }
}

QuadRule HermiteSpec::rule() const {
  validate();
  constexpr int kMinPanels = 8;
  constexpr int kMaxPerPanel = 32;
  int per_panel = std::min(kMaxPerPanel, (vquad.points + kMinPanels - 1) / kMinPanels);
  per_panel = std::max(per_panel, 2);
  const int panels = std::max(kMinPanels, (vquad.points + per_panel - 1) / per_panel);
  return composite_gauss_legendre(-vquad.v_max, vquad.v_max, panels, per_panel);
}

void hermite_polys(double xi, std::span<double> out) {
  if (out.empty()) {
    throw InvalidArgument("hermite_polys: empty request (N = 0)");
  }
  out[0] = 1.0;
  if (out.size() > 1) {
    out[1] = xi;
  }
  for (std::size_t n = 2; n < out.size(); ++n) {
    const double dn = static_cast<double>(n);
    out[n] = (xi * out[n - 1] - std::sqrt(dn - 1.0) * out[n - 2]) / std::sqrt(dn);
  }
}

std::vector<double> hermite_polys(double xi, int N) {
  if (N < 1) {
    throw InvalidArgument("hermite_polys: empty request (N = 0)");
  }
  std::vector<double> out(static_cast<std::size_t>(N));
  hermite_polys(xi, out);
  return out;
}

void psi(double alpha, double v, std::span<double> out) {
  if (!(alpha > 0.0)) {
    throw InvalidArgument("psi: alpha must be positive");
  }
  if (out.empty()) {
    return;
  }
  const double xi = alpha * v;
  out[0] = alpha * kInvSqrt2Pi * std::exp(-0.5 * xi * xi);
  if (out.size() > 1) {
    out[1] = xi * out[0];
  }
  for (std::size_t n = 2; n < out.size(); ++n) {
    const double dn = static_cast<double>(n);
    out[n] = (xi * out[n - 1] - std::sqrt(dn - 1.0) * out[n - 2]) / std::sqrt(dn);
  }
}

std::vector<double> psi(double alpha, double v, int N) {
  std::vector<double> out(static_cast<std::size_t>(std::max(N, 0)));
  psi(alpha, v, out);
  return out;
}

double weight(double alpha, double v) {
  if (!(alpha > 0.0)) {
    throw InvalidArgument("weight: alpha must be positive");
  }
  const double e = 0.5 * (alpha * v) * (alpha * v);
  if (e > kMaxExponent) {
    throw OverflowError("weight: exp((alpha v)^2 / 2) overflows at alpha*v = " +
                        std::to_string(alpha * v) + "; check v_max");
  }
  return std::sqrt(2.0 * std::numbers::pi) * std::exp(e);
}

HermiteCoeffs project_velocity(const std::function<double(double)>& f, double alpha,
                               const HermiteSpec& spec) {
  if (!(alpha > 0.0)) {
    throw InvalidArgument("project_velocity: alpha must be positive");
  }
  const QuadRule rule = spec.rule();
  HermiteCoeffs coeffs(static_cast<std::size_t>(spec.N), 0.0);
  std::vector<double> h(coeffs.size());
  for (int q = 0; q < rule.size(); ++q) {
    const double fw = f(rule.nodes[q]) * rule.weights[q];
    if (fw == 0.0) {
      continue;
    }
    hermite_polys(alpha * rule.nodes[q], h);
    for (std::size_t n = 0; n < h.size(); ++n) {
      coeffs[n] += fw * h[n];
    }
  }
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (!std::isfinite(coeffs[n])) {
      throw NumericalFailure("project_velocity: non-finite Hermite coefficient", 0.0,
                             static_cast<int>(n), -1);
    }
  }
  return coeffs;
}

double reconstruct(std::span<const double> coeffs, double alpha, double v) {
  if (coeffs.empty()) {
    return 0.0;
  }
  std::vector<double> basis(coeffs.size());
  psi(alpha, v, basis);
  double sum = 0.0;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    sum += coeffs[n] * basis[n];
  }
  return sum;
}

double weighted_norm_v(std::span<const double> coeffs, double alpha) {
  double s = 0.0;
  for (double c : coeffs) {
    s += c * c;
  }
  return std::sqrt(alpha * s);
}

double alpha_rate(const ScalingState& state, double Einf) {
  const double a = state.alpha;
  return -0.5 * state.gamma * std::max(1.0, Einf * Einf) * a * a * a;
}

double alpha_from_integral(double alpha0, double gamma, double integral) {
  return alpha0 / std::sqrt(1.0 + gamma * alpha0 * alpha0 * integral);
}

double fokker_planck_apply(const std::function<double(double)>& g, double alpha, double v,
                           double step) {
  const double hs = step > 0.0 ? step : 1e-4 * std::max(1.0, std::abs(v));
  const double gm = g(v - hs);
  const double g0 = g(v);
  const double gp = g(v + hs);
  const double d1 = (gp - gm) / (2.0 * hs);
  const double d2 = (gp - 2.0 * g0 + gm) / (hs * hs);
  const double a2 = alpha * alpha;
  return -d2 - a2 * v * d1 - a2 * g0;
}

}  // namespace hdg
