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

#include <cstddef>
#include <functional>
#include <vector>

#include "hdg/diagnostics.hpp"
#include "hdg/vlasov.hpp"

namespace hdg {

/// Exponential filter sigma(eta) = exp(-strength eta^order) for eta = n/(N-1)
/// above `cutoff`; modes below the cutoff are untouched.
struct FilterConfig {
  bool enabled = true;
  double strength = 36.0;
  int order = 36;
  double cutoff = 2.0 / 3.0;
  int every = 1;  // apply after every `every` steps
};

struct StepperConfig {
  double dt = 1e-3;
  double T = 1.0;
  FilterConfig filter;
  int output_every = 1;
  bool warn_cfl = true;

  void validate() const;
};

/// Right-hand side: fills d(modes)/dt and returns alpha'.
using RhsFunction = std::function<double(const KineticState&, std::vector<DGField>&)>;

/// Third order strong-stability-preserving Runge-Kutta (Shu-Osher form).
/// Advances the modes and alpha with the same stages. Keeps its own scratch.
class SspRk3 {
public:
  explicit SspRk3(RhsFunction rhs);
  void step(KineticState& state, double dt);

private:
  RhsFunction rhs_;
  KineticState stage_;
  std::vector<DGField> k_;
};

void ssp_rk3_step(KineticState& state, const VlasovOperator& op, double dt);

double hou_li_factor(int n, int N, const FilterConfig& cfg);
void hou_li_filter(KineticState& state, const FilterConfig& cfg);

/// Heuristic explicit limit h alpha / ((2k + 1) sqrt(2N)).
double cfl_limit(const KineticState& state);

using RecordSink = std::function<void(const DiagnosticsRecord&)>;

struct RunSummary {
  std::size_t steps = 0;
  std::size_t records = 0;
};

/// Integrates to cfg.T, shortening the last step to land on T exactly.
/// Records are sent to `sink` at t0, every output_every steps and at T.
/// On NumericalFailure the last valid state's record is flushed before the
/// exception propagates.
KineticState run(KineticState initial, const FluxSpec& flux, const StepperConfig& cfg,
                 const RecordSink& sink, RhsOptions options = {}, RunSummary* summary = nullptr);

}  // namespace hdg
