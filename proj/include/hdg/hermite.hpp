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

// Time-scaled, asymmetrically weighted Hermite basis in velocity.
//
//   Psi_n(v) = alpha H_n(alpha v) exp(-(alpha v)^2 / 2) / sqrt(2 pi)
//
// with H_n the normalized probabilists' Hermite polynomials
//   sqrt(n) H_n = xi H_{n-1} - sqrt(n-1) H_{n-2},  H_{-1} = 0, H_0 = 1.
// Psi_n is orthogonal against the test functions H_m(alpha v):
//   int Psi_n H_m(alpha v) dv = delta_nm,
// so the weighted norm of an expansion is alpha * sum |c_n|^2.

#include <functional>
#include <span>
#include <vector>

#include "hdg/quadrature.hpp"

namespace hdg {

/// Time-dependent scaling alpha(t) together with its parameters.
/// alpha is nonincreasing and never exceeds alpha0; gamma == 0 freezes it.
struct ScalingState {
  double alpha0 = 1.0;
  double gamma = 0.0;
  double alpha = 1.0;
  double t = 0.0;

  static ScalingState initial(double alpha0, double gamma);
};

/// Truncation domain and composite Gauss-Legendre layout used for velocity
/// integrals.
struct VelocityQuadrature {
  double v_max = 8.0;
  int points = 0;  // total node count over [-v_max, v_max]
};

struct HermiteSpec {
  int N = 1;
  VelocityQuadrature vquad;

  /// Default layout: 4N points (at least 256) on [-v_max, v_max].
  static HermiteSpec with_defaults(int N, double v_max);

  /// Checks N >= 1, v_max > 0 and points >= 2N.
  void validate() const;

  /// Composite Gauss-Legendre rule: at least 8 panels, at most 32 points per
  /// panel.
  QuadRule rule() const;
};

using HermiteCoeffs = std::vector<double>;

/// H_0(xi) ... H_{N-1}(xi). Throws InvalidArgument for N == 0.
std::vector<double> hermite_polys(double xi, int N);
void hermite_polys(double xi, std::span<double> out);

/// Psi_0 ... Psi_{N-1} at (alpha, v). The recurrence runs on the damped
/// values directly so nothing overflows for large |alpha v|.
std::vector<double> psi(double alpha, double v, int N);
void psi(double alpha, double v, std::span<double> out);

/// omega(v) = sqrt(2 pi) exp((alpha v)^2 / 2). Throws OverflowError when the
/// exponent leaves the representable range.
double weight(double alpha, double v);

/// c_n = int f(v) H_n(alpha v) dv over the truncation domain.
HermiteCoeffs project_velocity(const std::function<double(double)>& f, double alpha,
                               const HermiteSpec& spec);

/// sum_n c_n Psi_n(alpha, v).
double reconstruct(std::span<const double> coeffs, double alpha, double v);

/// sqrt(alpha * sum c_n^2).
double weighted_norm_v(std::span<const double> coeffs, double alpha);

/// alpha' = -(gamma / 2) max(1, Einf^2) alpha^3.
double alpha_rate(const ScalingState& state, double Einf);

/// alpha(t) = alpha0 (1 + gamma alpha0^2 I)^(-1/2) with I = int_0^t max(1, |E|_inf^2).
double alpha_from_integral(double alpha0, double gamma, double integral);

/// F[g](v) = -g'' - alpha^2 v g' - alpha^2 g with second-order central
/// differences, step 1e-4 * max(1, |v|) unless given.
double fokker_planck_apply(const std::function<double(double)>& g, double alpha, double v,
                           double step = 0.0);

}  // namespace hdg
