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

#include "hdg/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <utility>

#include "hdg/errors.hpp"

namespace hdg {

void StepperConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw InvalidArgument("dt must be positive");
  }
  if (!(T >= 0.0) || !std::isfinite(T)) {
    throw InvalidArgument("T must be non-negative");
  }
  if (output_every < 1) {
    throw InvalidArgument("output_every must be >= 1");
  }
  if (filter.every < 1) {
    throw InvalidArgument("filter cadence must be >= 1");
  }
  if (!(filter.strength >= 0.0) || filter.order < 1 || !(filter.cutoff >= 0.0 && filter.cutoff < 1.0)) {
    throw InvalidArgument("invalid filter parameters");
  }
}

SspRk3::SspRk3(RhsFunction rhs) : rhs_(std::move(rhs)) {}

namespace {

// dst = a * x + b * (y + dt * k)
void combine(std::vector<DGField>& dst, double a, const std::vector<DGField>& x, double b,
             const std::vector<DGField>& y, const std::vector<DGField>& k, double dt) {
  for (std::size_t n = 0; n < dst.size(); ++n) {
    auto& d = dst[n].coeffs();
    const auto& xs = x[n].coeffs();
    const auto& ys = y[n].coeffs();
    const auto& ks = k[n].coeffs();
    for (std::size_t i = 0; i < d.size(); ++i) {
      d[i] = a * xs[i] + b * (ys[i] + dt * ks[i]);
    }
  }
}

void check_alpha(double alpha, double t) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw NumericalFailure("alpha left (0, inf)", t, -1, -1);
  }
}

}  // namespace

void SspRk3::step(KineticState& u, double dt) {
  if (stage_.modes.size() != u.modes.size() || stage_.mesh_ptr() != u.mesh_ptr() ||
      stage_.degree() != u.degree()) {
    stage_ = u;
  }
  const double t0 = u.t;
  const double a0 = u.scaling.alpha;

  // u1 = u + dt L(u)
  double ar = rhs_(u, k_);
  stage_.scaling = u.scaling;
  combine(stage_.modes, 0.0, u.modes, 1.0, u.modes, k_, dt);
  double da = dt * ar;
  stage_.scaling.alpha = a0 + da;
  stage_.t = t0 + dt;
  check_alpha(stage_.scaling.alpha, stage_.t);

  // u2 = 3/4 u + 1/4 (u1 + dt L(u1))
  ar = rhs_(stage_, k_);
  combine(stage_.modes, 0.75, u.modes, 0.25, stage_.modes, k_, dt);
  da = 0.25 * (da + dt * ar);
  stage_.scaling.alpha = a0 + da;
  stage_.t = t0 + 0.5 * dt;
  check_alpha(stage_.scaling.alpha, stage_.t);

  // u+ = 1/3 u + 2/3 (u2 + dt L(u2))
  ar = rhs_(stage_, k_);
  combine(u.modes, 1.0 / 3.0, u.modes, 2.0 / 3.0, stage_.modes, k_, dt);
  u.scaling.alpha = a0 + 2.0 / 3.0 * (da + dt * ar);
  u.t = t0 + dt;
  u.scaling.t = u.t;
  check_alpha(u.scaling.alpha, u.t);
}

void ssp_rk3_step(KineticState& state, const VlasovOperator& op, double dt) {
  SspRk3 rk([&op](const KineticState& s, std::vector<DGField>& d) { return op.apply(s, d); });
  rk.step(state, dt);
}

double hou_li_factor(int n, int N, const FilterConfig& cfg) {
  if (N <= 1) {
    return 1.0;
  }
  const double eta = static_cast<double>(n) / (N - 1);
  if (eta <= cfg.cutoff) {
    return 1.0;
  }
  return std::exp(-cfg.strength * std::pow(eta, cfg.order));
}

void hou_li_filter(KineticState& state, const FilterConfig& cfg) {
  const int N = state.N();
  for (int n = 0; n < N; ++n) {
    const double s = hou_li_factor(n, N, cfg);
    if (s == 1.0) {
      continue;
    }
    for (double& c : state.modes[n].coeffs()) {
      c *= s;
    }
  }
}

double cfl_limit(const KineticState& state) {
  const auto& h = state.mesh().h;
  const double hmin = *std::min_element(h.begin(), h.end());
  return hmin * state.alpha() / ((2.0 * state.degree() + 1.0) * std::sqrt(2.0 * state.N()));
}

KineticState run(KineticState state, const FluxSpec& flux, const StepperConfig& cfg,
                 const RecordSink& sink, RhsOptions options, RunSummary* summary) {
  cfg.validate();
  state.validate();
  flux.validate(state.N());
  const VlasovOperator op(state.mesh_ptr(), state.degree(), state.N(), flux, options);
  const DiagnosticsEngine diag(state.N(), flux);
  SspRk3 rk([&op](const KineticState& s, std::vector<DGField>& d) { return op.apply(s, d); });

  RunSummary local;
  RunSummary& sum = summary ? *summary : local;
  auto emit = [&](const KineticState& s) {
    if (sink) {
      sink(diag.record(s));
    }
    ++sum.records;
  };

  const double t0 = state.t;
  const double span = cfg.T - t0;
  const std::size_t nsteps =
      span <= 0.0 ? 0 : static_cast<std::size_t>(std::ceil(span / cfg.dt * (1.0 - 1e-12)));
  emit(state);

  bool warned = false;
  KineticState last_good = state;
  bool last_emitted = true;
  try {
    for (std::size_t i = 1; i <= nsteps; ++i) {
      const double target = i == nsteps ? cfg.T : t0 + static_cast<double>(i) * cfg.dt;
      const double dt = target - state.t;
      if (cfg.warn_cfl && !warned && dt > cfl_limit(state)) {
        std::cerr << "warning: dt = " << dt << " exceeds the CFL estimate " << cfl_limit(state)
                  << " at t = " << state.t << "\n";
        warned = true;
      }
      rk.step(state, dt);
      state.t = target;
      state.scaling.t = target;
      if (cfg.filter.enabled && i % static_cast<std::size_t>(cfg.filter.every) == 0) {
        hou_li_filter(state, cfg.filter);
      }
      ++sum.steps;
      const bool out = i % static_cast<std::size_t>(cfg.output_every) == 0 || i == nsteps;
      if (out) {
        emit(state);
      }
      last_emitted = out;
      if (!out) {
        last_good = state;
      }
    }
  } catch (const NumericalFailure&) {
    if (!last_emitted) {
      emit(last_good);
    }
    throw;
  }
  return state;
}

}  // namespace hdg
