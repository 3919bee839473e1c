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

#include <span>
#include <string>
#include <vector>

#include "hdg/hermite.hpp"
#include "hdg/poisson.hpp"
#include "hdg/vlasov.hpp"

namespace hdg {

/// One time sample of the conserved quantities and norms.
struct DiagnosticsRecord {
  double t = 0.0;
  double mass = 0.0;
  double momentum = 0.0;
  double kinetic = 0.0;
  double electric = 0.0;
  double total_energy = 0.0;
  double l2_standard = 0.0;
  double l2_weighted = 0.0;
  double alpha = 0.0;
  double Einf = 0.0;
  double jump_dissipation = 0.0;
};

struct Moments {
  double mass = 0.0;
  double momentum = 0.0;
  double kinetic = 0.0;
};

/// Mass, momentum and kinetic energy from modes 0, 1 and 2:
///   int Psi_n dv = delta_n0, int v Psi_n dv = delta_n1 / alpha,
///   int v^2 Psi_n dv = (delta_n0 + sqrt(2) delta_n2) / alpha^2.
Moments moments(const KineticState& state);

/// (1/2) int E^2 dx, exact per cell.
double electric_energy(const ElectricField& E);

/// sqrt(alpha sum_n |C_n|^2_{L2(dx)}), the L2(omega dx dv) norm.
double weighted_l2(const KineticState& state);

/// Unweighted L2(dx dv) norm. The basis is not orthogonal without the
/// weight, so this needs the Gram matrix
///   int Psi_n Psi_m dv = alpha G_nm,  G_nm = int Psi_n(1, xi) Psi_m(1, xi) dxi,
/// which is independent of alpha and tabulated once per N.
class StandardNormGram {
public:
  explicit StandardNormGram(int N);
  int modes() const { return N_; }
  double operator()(int n, int m) const { return gram_[static_cast<std::size_t>(n) * N_ + m]; }
  double l2_standard(const KineticState& state) const;

private:
  int N_;
  std::vector<double> gram_;
};

double standard_l2(const KineticState& state);

/// sum_n nu_n sum_edges [C_n]^2.
double jump_dissipation(const KineticState& state, const FluxSpec& flux);

/// Builds full records; owns the Gram table so repeated sampling is cheap.
class DiagnosticsEngine {
public:
  DiagnosticsEngine(int N, FluxSpec flux);
  DiagnosticsRecord record(const KineticState& state) const;
  DiagnosticsRecord record(const KineticState& state, const ElectricField& E) const;

private:
  StandardNormGram gram_;
  FluxSpec flux_;
};

struct StabilityResult {
  bool passed = true;
  double worst_ratio = 0.0;  // max over samples of l2_w(t) / (l2_w(0) e^{t / 4 gamma})
};

/// Checks l2_weighted(t) <= l2_weighted(0) exp(t / (4 gamma)) (1 + tol).
StabilityResult stability_check(std::span<const DiagnosticsRecord> records, double gamma,
                                double tol = 1e-2);

struct ErrorReport {
  double l2_weighted_error = 0.0;
  double l2_standard_error = 0.0;
  std::string resolution;
  std::string reference_resolution;
};

/// Distance between two reconstructed distributions, evaluated on the
/// reference's tensor grid: (k_ref + 3) Gauss points per reference cell in x
/// and the velocity rule of `vspec`. The weighted error uses the reference
/// alpha in omega. Throws InvalidArgument on mismatched times or domains.
ErrorReport compare_states(const KineticState& a, const KineticState& ref, const HermiteSpec& vspec);

/// order_i = log2(e_{i-1} / e_i); rejects ladders whose mesh sizes do not
/// halve and ladders containing a zero error.
std::vector<double> convergence_order(std::span<const double> errors, std::span<const double> h);

std::string resolution_label(const KineticState& s);

}  // namespace hdg
