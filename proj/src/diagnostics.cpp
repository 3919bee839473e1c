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

#include "hdg/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hdg/errors.hpp"
#include "hdg/quadrature.hpp"

namespace hdg {

Moments moments(const KineticState& state) {
  const double alpha = state.alpha();
  Moments m;
  m.mass = state.modes[0].integral();
  if (state.N() > 1) {
    m.momentum = state.modes[1].integral() / alpha;
  }
  double second = m.mass;
  if (state.N() > 2) {
    second += std::sqrt(2.0) * state.modes[2].integral();
  }
  m.kinetic = second / (2.0 * alpha * alpha);
  return m;
}

double electric_energy(const ElectricField& E) { return 0.5 * E.field.l2_norm_squared(); }

double weighted_l2(const KineticState& state) {
  double s = 0.0;
  for (const auto& mode : state.modes) {
    s += mode.l2_norm_squared();
  }
  return std::sqrt(state.alpha() * s);
}

StandardNormGram::StandardNormGram(int N) : N_(N), gram_(static_cast<std::size_t>(N) * N, 0.0) {
  // Psi_n(1, xi)^2 <= C exp(-xi^2 / 2) for every n, so [-14, 14] loses < 1e-40.
  constexpr double kXiMax = 14.0;
  constexpr int kPerPanel = 32;
  const int points = std::max(512, 4 * N);
  const int panels = (points + kPerPanel - 1) / kPerPanel;
  const QuadRule rule = composite_gauss_legendre(-kXiMax, kXiMax, panels, kPerPanel);
  std::vector<double> p(static_cast<std::size_t>(N));
  for (int q = 0; q < rule.size(); ++q) {
    psi(1.0, rule.nodes[q], p);
    const double w = rule.weights[q];
    for (int n = 0; n < N; ++n) {
      const double wn = w * p[n];
      // Only n + m even survives by parity.
      for (int m = n; m < N; m += 2) {
        gram_[static_cast<std::size_t>(n) * N + m] += wn * p[m];
      }
    }
  }
  for (int n = 0; n < N; ++n) {
    for (int m = n; m < N; m += 2) {
      gram_[static_cast<std::size_t>(m) * N + n] = gram_[static_cast<std::size_t>(n) * N + m];
    }
  }
}

double StandardNormGram::l2_standard(const KineticState& state) const {
  if (state.N() != N_) {
    throw InvalidArgument("StandardNormGram: state has a different mode count");
  }
  const int K = state.degree() + 1;
  const auto& mesh = state.mesh();
  std::vector<double> c(static_cast<std::size_t>(N_));
  double total = 0.0;
  for (int j = 0; j < mesh.Nx; ++j) {
    double cell = 0.0;
    for (int l = 0; l < K; ++l) {
      for (int n = 0; n < N_; ++n) {
        c[n] = state.modes[n](j, l);
      }
      double quad = 0.0;
      for (int n = 0; n < N_; ++n) {
        if (c[n] == 0.0) {
          continue;
        }
        const double* row = gram_.data() + static_cast<std::size_t>(n) * N_;
        double s = row[n] * c[n];
        for (int m = n + 2; m < N_; m += 2) {
          s += 2.0 * row[m] * c[m];
        }
        quad += c[n] * s;
      }
      cell += quad;
    }
    total += 0.5 * mesh.h[j] * cell;
  }
  return std::sqrt(std::max(0.0, state.alpha() * total));
}

double standard_l2(const KineticState& state) { return StandardNormGram(state.N()).l2_standard(state); }

double jump_dissipation(const KineticState& state, const FluxSpec& flux) {
  double s = 0.0;
  for (int n = 0; n < state.N(); ++n) {
    const double nu = flux.nu.at(n);
    if (nu == 0.0) {
      continue;
    }
    double sn = 0.0;
    for (int e = 0; e < state.mesh().Nx; ++e) {
      const double jmp = jump(state.modes[n], e);
      sn += jmp * jmp;
    }
    s += nu * sn;
  }
  return s;
}

DiagnosticsEngine::DiagnosticsEngine(int N, FluxSpec flux) : gram_(N), flux_(std::move(flux)) {}

DiagnosticsRecord DiagnosticsEngine::record(const KineticState& state) const {
  return record(state, solve_poisson(state.modes[0]));
}

DiagnosticsRecord DiagnosticsEngine::record(const KineticState& state, const ElectricField& E) const {
  DiagnosticsRecord r;
  r.t = state.t;
  const Moments m = moments(state);
  r.mass = m.mass;
  r.momentum = m.momentum;
  r.kinetic = m.kinetic;
  r.electric = electric_energy(E);
  r.total_energy = r.kinetic + r.electric;
  r.l2_standard = gram_.l2_standard(state);
  r.l2_weighted = weighted_l2(state);
  r.alpha = state.alpha();
  r.Einf = E.Einf;
  r.jump_dissipation = jump_dissipation(state, flux_);
  return r;
}

StabilityResult stability_check(std::span<const DiagnosticsRecord> records, double gamma, double tol) {
  if (!(gamma > 0.0)) {
    throw InvalidArgument("stability_check: gamma must be positive");
  }
  StabilityResult result;
  if (records.empty()) {
    return result;
  }
  const double base = records.front().l2_weighted;
  const double t0 = records.front().t;
  for (const auto& r : records) {
    const double bound = base * std::exp((r.t - t0) / (4.0 * gamma));
    const double ratio = bound > 0.0 ? r.l2_weighted / bound : (r.l2_weighted > 0.0 ? INFINITY : 0.0);
    result.worst_ratio = std::max(result.worst_ratio, ratio);
    if (!(ratio <= 1.0 + tol)) {
      result.passed = false;
    }
  }
  return result;
}

std::string resolution_label(const KineticState& s) {
  return std::to_string(s.mesh().Nx) + "x" + std::to_string(s.N()) + " P" + std::to_string(s.degree());
}

namespace {

// Values of all modes of `s` at physical x.
void modes_at(const KineticState& s, double x, std::vector<double>& basis, std::vector<double>& out) {
  const auto& mesh = s.mesh();
  const double y = mesh.wrap(x);
  const int j = mesh.locate(y);
  const double xi = std::clamp(mesh.to_reference(j, y), -1.0, 1.0);
  legendre_basis(xi, basis);
  const int K = s.degree() + 1;
  for (int n = 0; n < s.N(); ++n) {
    const auto c = s.modes[n].cell(j);
    double v = 0.0;
    for (int m = 0; m < K; ++m) {
      v += c[m] * basis[m];
    }
    out[n] = v;
  }
}

std::vector<double> psi_table(double alpha, int N, const QuadRule& vrule) {
  std::vector<double> table(static_cast<std::size_t>(N) * vrule.size());
  std::vector<double> p(static_cast<std::size_t>(N));
  for (int q = 0; q < vrule.size(); ++q) {
    psi(alpha, vrule.nodes[q], p);
    for (int n = 0; n < N; ++n) {
      table[static_cast<std::size_t>(n) * vrule.size() + q] = p[n];
    }
  }
  return table;
}

}  // namespace

ErrorReport compare_states(const KineticState& a, const KineticState& ref, const HermiteSpec& vspec) {
  const double tscale = std::max(1.0, std::abs(ref.t));
  if (std::abs(a.t - ref.t) > 1e-9 * tscale) {
    throw InvalidArgument("compare_states: states are at different times (" + std::to_string(a.t) +
                          " vs " + std::to_string(ref.t) + ")");
  }
  if (std::abs(a.mesh().L - ref.mesh().L) > 1e-12 * ref.mesh().L) {
    throw InvalidArgument("compare_states: states live on different domains");
  }
  const QuadRule vrule = vspec.rule();
  const int nv = vrule.size();
  std::vector<double> omega(nv);
  for (int q = 0; q < nv; ++q) {
    omega[q] = weight(ref.alpha(), vrule.nodes[q]);
  }
  const std::vector<double> pa = psi_table(a.alpha(), a.N(), vrule);
  const std::vector<double> pr = psi_table(ref.alpha(), ref.N(), vrule);

  const auto& mesh = ref.mesh();
  const QuadRule xrule = gauss_legendre(ref.degree() + 3);
  std::vector<double> basis_a(static_cast<std::size_t>(a.degree()) + 1);
  std::vector<double> basis_r(static_cast<std::size_t>(ref.degree()) + 1);
  std::vector<double> ca(static_cast<std::size_t>(a.N()));
  std::vector<double> cr(static_cast<std::size_t>(ref.N()));
  std::vector<double> fa(nv);
  std::vector<double> fr(nv);

  double err_w = 0.0;
  double err_s = 0.0;
  for (int j = 0; j < mesh.Nx; ++j) {
    for (int qx = 0; qx < xrule.size(); ++qx) {
      const double x = mesh.edges[j] + 0.5 * (xrule.nodes[qx] + 1.0) * mesh.h[j];
      const double wx = 0.5 * mesh.h[j] * xrule.weights[qx];
      modes_at(a, x, basis_a, ca);
      modes_at(ref, x, basis_r, cr);
      std::fill(fa.begin(), fa.end(), 0.0);
      std::fill(fr.begin(), fr.end(), 0.0);
      for (int n = 0; n < a.N(); ++n) {
        const double c = ca[n];
        const double* row = pa.data() + static_cast<std::size_t>(n) * nv;
        for (int q = 0; q < nv; ++q) {
          fa[q] += c * row[q];
        }
      }
      for (int n = 0; n < ref.N(); ++n) {
        const double c = cr[n];
        const double* row = pr.data() + static_cast<std::size_t>(n) * nv;
        for (int q = 0; q < nv; ++q) {
          fr[q] += c * row[q];
        }
      }
      double sw = 0.0;
      double ss = 0.0;
      for (int q = 0; q < nv; ++q) {
        const double d = fa[q] - fr[q];
        const double d2 = d * d * vrule.weights[q];
        ss += d2;
        sw += d2 * omega[q];
      }
      err_w += wx * sw;
      err_s += wx * ss;
    }
  }
  ErrorReport report;
  report.l2_weighted_error = std::sqrt(err_w);
  report.l2_standard_error = std::sqrt(err_s);
  report.resolution = resolution_label(a);
  report.reference_resolution = resolution_label(ref);
  return report;
}

std::vector<double> convergence_order(std::span<const double> errors, std::span<const double> h) {
  if (errors.size() < 2 || errors.size() != h.size()) {
    throw InvalidArgument("convergence_order: need at least two levels with matching mesh sizes");
  }
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!(errors[i] > 0.0) || !std::isfinite(errors[i])) {
      throw InvalidArgument("convergence_order: level " + std::to_string(i) +
                            " has a zero or non-finite error (degenerate ladder)");
    }
  }
  std::vector<double> orders;
  for (std::size_t i = 1; i < errors.size(); ++i) {
    if (std::abs(h[i - 1] / h[i] - 2.0) > 1e-9) {
      throw InvalidArgument("convergence_order: mesh sizes must halve between levels");
    }
    orders.push_back(std::log2(errors[i - 1] / errors[i]));
  }
  return orders;
}

}  // namespace hdg
