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

#include <functional>

#include "hdg/expression.hpp"
#include "hdg/hermite.hpp"
#include "hdg/vlasov.hpp"

namespace hdg {

struct LandauParams {
  double delta = 0.01;
  double wavenumber = 0.5;
};

/// f0 = (1 + kappa cos(n_harm k x)) f_b(v), k = 2 pi / L, with
/// f_b = n_p/(sqrt(pi) v_p) exp(-v^2/v_p^2) + n_b/(sqrt(pi) v_b) exp(-(v - v_d)^2/v_b^2).
struct BumpOnTailParams {
  double kappa = 0.04;
  int n_harm = 3;
  double n_p = 0.9;
  double n_b = 0.1;
  double v_d = 4.5;
  double v_p = 1.4142135623730951;
  double v_b = 0.70710678118654757;

  double profile(double v) const;
};

/// Separable data: C_n = a_n(alpha0) * P_h[xfactor], a_n the velocity
/// coefficients of `vprofile` on the rule of `vspec`.
KineticState init_separable(const std::function<double(double)>& xfactor,
                            const std::function<double(double)>& vprofile, const MeshPtr& mesh,
                            int k, const HermiteSpec& vspec, const ScalingState& scaling);

/// General f0(x, v): velocity coefficients at each spatial quadrature node,
/// then L2 projection in x.
KineticState init_general(const std::function<double(double, double)>& f0, const MeshPtr& mesh,
                          int k, const HermiteSpec& vspec, const ScalingState& scaling);

KineticState init_landau(const LandauParams& p, const MeshPtr& mesh, int N, int k, double alpha0,
                         double gamma, double v_max = 8.0);

KineticState init_bump_on_tail(const BumpOnTailParams& p, const MeshPtr& mesh, int N, int k,
                               double alpha0, double gamma, double v_max = 8.0);

KineticState init_custom(const Expression& f0, const MeshPtr& mesh, int N, int k, double alpha0,
                         double gamma, double v_max = 8.0);

}  // namespace hdg
