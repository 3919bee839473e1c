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

// Conforming solve of the periodic 1D Poisson problem
//   dE/dx = C_0 - rho_0,   rho_0 = (1/L) int C_0 dx,   int E dx = 0.
// E is the exact cell-by-cell antiderivative of the neutralized source, so it
// is a continuous piecewise polynomial one degree above C_0.

#include "hdg/dg_mesh.hpp"

namespace hdg {

struct ElectricField {
  DGField field;       // degree k + 1, continuous and periodic
  double rho0 = 0.0;   // neutralizing background
  double Einf = 0.0;   // cached sup-norm

  double operator()(double x) const { return field.eval(x); }
};

/// Continuous antiderivative F with F(0) = start, one degree above u. The
/// result is periodic only when int u dx = 0.
DGField antiderivative(const DGField& u, double start = 0.0);

/// Neutralize, integrate and shift to zero mean; Einf is filled in.
ElectricField solve_poisson(const DGField& C0);

/// max |u| sampled at 2(degree + 2) Chebyshev points per cell plus both
/// cell endpoints.
double sup_norm(const DGField& u);
inline double sup_norm(const ElectricField& E) { return sup_norm(E.field); }

/// Phi with E = -dPhi/dx, continuous, periodic, zero mean; degree k + 2.
DGField potential(const ElectricField& E);

}  // namespace hdg
