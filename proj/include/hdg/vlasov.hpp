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

// Semi-discrete DG operator for the Hermite mode system
//
//   d/dt C_n + d/dx g_n = S_n,
//   g_n = (sqrt(n) C_{n-1} + sqrt(n+1) C_{n+1}) / alpha,
//   S_n = (alpha'/alpha) (n C_n + sqrt(n(n-1)) C_{n-2}) + E alpha sqrt(n) C_{n-1},
//
// with C_n = 0 outside 0 <= n < N and the penalized interface flux
//   g^_n = (g_n^- + g_n^+ - (nu_n / alpha) [C_n]) / 2.

#include <vector>

#include "hdg/dg_mesh.hpp"
#include "hdg/hermite.hpp"
#include "hdg/poisson.hpp"

namespace hdg {

/// The full unknown: N Hermite modes on one mesh, the scaling and the time.
struct KineticState {
  std::vector<DGField> modes;
  ScalingState scaling;
  double t = 0.0;

  static KineticState zeros(const MeshPtr& mesh, int k, int N, const ScalingState& scaling);

  int N() const { return static_cast<int>(modes.size()); }
  int degree() const { return modes.front().degree(); }
  const Mesh1D& mesh() const { return modes.front().mesh(); }
  const MeshPtr& mesh_ptr() const { return modes.front().mesh_ptr(); }
  double alpha() const { return scaling.alpha; }

  /// Same mesh and degree for every mode, N >= 1, finite coefficients.
  void validate() const;
};

struct FluxSpec {
  std::vector<double> nu;
  bool centered_mode0 = false;

  /// nu_n = nu_default for all n (sqrt(2N) when nu_default <= 0); nu_0 = 0
  /// when centered_mode0 is set.
  static FluxSpec defaults(int N, bool centered_mode0 = false, double nu_default = 0.0);
  void validate(int N) const;
};

/// g_n as a DG field; out-of-range neighbours count as zero.
DGField g_field(const KineticState& state, int n);

double numerical_flux(double gminus, double gplus, double Cminus, double Cplus, double nu_n,
                      double alpha);

/// S_n with the product E * C_{n-1} projected back to degree k by the
/// (k + 3)-point Gauss rule.
DGField source_field(const KineticState& state, const ElectricField& E, int n, double alpha_rate);

struct RhsOptions {
  // Drop the E alpha sqrt(n) C_{n-1} source (alpha' still uses the solved E).
  bool field_force = true;
};

struct RhsResult {
  std::vector<DGField> dmodes;
  ElectricField E;
  double alpha_rate = 0.0;
};

/// Assembles the mode derivatives with precomputed reference tables. The
/// operator itself is immutable; apply() allocates its own scratch.
class VlasovOperator {
public:
  VlasovOperator(MeshPtr mesh, int k, int N, FluxSpec flux, RhsOptions options = {});

  /// Writes dC_n/dt into `dmodes` (resized as needed) and returns alpha'.
  /// The solved field is stored in `E_out` when non-null. Throws
  /// NumericalFailure on non-finite output.
  double apply(const KineticState& state, std::vector<DGField>& dmodes,
               ElectricField* E_out = nullptr) const;

  const FluxSpec& flux() const { return flux_; }
  int degree() const { return k_; }
  int modes() const { return N_; }

private:
  MeshPtr mesh_;
  int k_;
  int N_;
  FluxSpec flux_;
  RhsOptions options_;

  int nq_;                       // volume quadrature points
  std::vector<double> qweights_;
  std::vector<double> basis_q_;  // nq x (k+1), phi_m at nodes
  std::vector<double> efield_q_; // nq x (k+2), basis of the field degree
  std::vector<double> dmat_;     // (k+1) x (k+1), int phi_l phi_m' dxi
  std::vector<double> phi_right_;
  std::vector<double> phi_left_;
};

/// Convenience wrapper: builds an operator and applies it once.
RhsResult rhs(const KineticState& state, const FluxSpec& flux, RhsOptions options = {});

}  // namespace hdg
