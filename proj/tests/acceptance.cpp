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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hdg/config.hpp"
#include "hdg/diagnostics.hpp"
#include "hdg/driver.hpp"
#include "hdg/errors.hpp"
#include "hdg/hermite.hpp"
#include "hdg/poisson.hpp"
#include "hdg/quadrature.hpp"
#include "hdg/scenarios.hpp"
#include "hdg/snapshot.hpp"
#include "hdg/stepper.hpp"
#include "hdg/vlasov.hpp"

using namespace hdg;

namespace {

constexpr double kPi = std::numbers::pi;

struct Verdict {
  bool pass = true;
  std::string summary;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

class Clock {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Landau setup of the convergence study.
RunConfig landau_ladder_config(const std::string& dir) {
  RunConfig c = RunConfig::defaults(Scenario::Landau);
  c.landau.delta = 0.01;
  c.landau.wavenumber = 0.5;
  c.gamma = 1.0;
  c.alpha0 = 1.0;
  c.dt = 1e-3;
  c.T = 0.5;
  c.nu_default = 1.0;
  c.output_dir = dir;
  c.csv = "";
  c.snapshot = "";
  return c;
}

RunConfig bump_config(const std::string& dir, double gamma) {
  RunConfig c = RunConfig::defaults(Scenario::BumpOnTail);
  c.gamma = gamma;
  c.centered_mode0 = true;
  c.output_dir = dir;
  c.csv = "bump_on_tail_gamma" + fmt("%g", gamma) + ".csv";
  c.snapshot = "bump_on_tail_gamma" + fmt("%g", gamma) + ".snap";
  return c;
}

RunConfig landau_long_config(const std::string& dir, double gamma) {
  RunConfig c = RunConfig::defaults(Scenario::Landau);
  c.landau.delta = 0.01;
  c.gamma = gamma;
  c.T = 10.0;
  c.output_every = 50;
  c.output_dir = dir;
  c.csv = "landau_gamma" + fmt("%g", gamma) + ".csv";
  c.snapshot = "landau_gamma" + fmt("%g", gamma) + ".snap";
  return c;
}

struct RunResult {
  std::vector<DiagnosticsRecord> records;
  std::size_t steps = 0;
  std::string failure;
};

class RunCache {
public:
  const RunResult& get(const std::string& key, const RunConfig& cfg) {
    auto it = runs_.find(key);
    if (it != runs_.end()) return it->second;
    Clock clock;
    RunResult r;
    std::cerr << "  running " << key << " ..." << std::flush;
    try {
      RunOutcome out = run_scenario(cfg, true);
      r.records = std::move(out.records);
      r.steps = out.steps;
    } catch (const NumericalFailure& e) {
      r.failure = e.what();
    }
    std::cerr << " " << fmt("%.1f", clock.seconds()) << " s\n";
    return runs_.emplace(key, std::move(r)).first->second;
  }

private:
  std::map<std::string, RunResult> runs_;
};

// ---------------------------------------------------------------- criterion 1

struct TableRow {
  int n;
  double p1;
  double p2;
};
constexpr TableRow kTable[] = {
    {16, 5.12e-4, 1.44e-5}, {32, 1.05e-4, 1.68e-6}, {64, 2.31e-5, 2.05e-7}, {128, 5.42e-6, 2.48e-8}};

Verdict criterion1(const std::string& dir) {
  const RunConfig cfg = landau_ladder_config(dir);
  Verdict v;
  std::ostringstream sum;
  for (int degree : {1, 2}) {
    const double lo = degree == 1 ? 1.8 : 2.7;
    const double hi = degree == 1 ? 2.5 : 3.3;
    Clock clock;
    const ConvergenceTable t = run_convergence(cfg, 4, degree, &std::cerr);
    std::cout << "P" << degree << " ladder (" << fmt("%.0f", clock.seconds()) << " s)\n"
              << format_convergence(t);
    for (const ConvergenceRow& r : t.rows) {
      double published = 0.0;
      for (const TableRow& tr : kTable) {
        if (tr.n == r.Nx) published = degree == 1 ? tr.p1 : tr.p2;
      }
      const double factor = std::max(r.error_weighted / published, published / r.error_weighted);
      const bool scored = r.Nx >= 32;
      const bool order_ok = r.Nx < 64 || (r.order >= lo && r.order <= hi);
      const bool factor_ok = factor <= 5.0;
      std::cout << "  " << r.Nx << "x" << r.N << " P" << degree << ": error "
                << fmt("%.3e", r.error_weighted) << " vs table " << fmt("%.2e", published) << " (factor "
                << fmt("%.2f", factor) << ")";
      if (!std::isnan(r.order)) std::cout << ", order " << fmt("%.2f", r.order);
      std::cout << (scored ? "" : " [informational]") << "\n";
      if (scored && !(order_ok && factor_ok)) v.pass = false;
    }
    sum << "P" << degree << " orders " << fmt("%.2f", t.rows[2].order) << ","
        << fmt("%.2f", t.rows[3].order) << " ";
  }
  v.summary = sum.str() + "(32->64->128, errors within 5x of table)";
  return v;
}

// ---------------------------------------------------------------- criterion 2

Verdict criterion2(RunCache& cache, const std::string& dir) {
  const RunResult& r = cache.get("bump_on_tail gamma=0.01", bump_config(dir, 0.01));
  Verdict v;
  if (!r.failure.empty()) return {false, "run failed: " + r.failure};
  const double e0 = r.records.front().total_energy;
  const double m0 = r.records.front().mass;
  double de = 0.0;
  double dm = 0.0;
  for (const auto& rec : r.records) {
    de = std::max(de, std::abs(rec.total_energy - e0) / std::abs(e0));
    dm = std::max(dm, std::abs(rec.mass - m0));
  }
  const double mass_tol = 1e-12 * std::abs(m0) * static_cast<double>(r.steps);
  v.pass = de <= 1e-5 && dm <= mass_tol;
  v.summary = "energy variation " + fmt("%.3e", de) + " (<= 1e-5), mass drift " + fmt("%.3e", dm) +
              " (<= " + fmt("%.3e", mass_tol) + ", " + std::to_string(r.steps) + " steps)";
  return v;
}

// ---------------------------------------------------------------- criterion 3

Verdict criterion3(RunCache& cache, const std::string& dir) {
  Verdict v;
  std::ostringstream sum;
  for (double g : {1e-2, 1e-1, 1.0}) {
    for (int sc = 0; sc < 2; ++sc) {
      const std::string key = std::string(sc == 0 ? "landau" : "bump_on_tail") + " gamma=" + fmt("%g", g);
      const RunResult& r = cache.get(key, sc == 0 ? landau_long_config(dir, g) : bump_config(dir, g));
      if (!r.failure.empty()) {
        v.pass = false;
        std::cout << "  " << key << ": run failed: " << r.failure << "\n";
        continue;
      }
      const StabilityResult s = stability_check(r.records, g);
      std::cout << "  " << key << ": worst l2_w(t)/(l2_w(0) e^{t/(4 gamma)}) = "
                << fmt("%.6f", s.worst_ratio) << "\n";
      if (!s.passed) v.pass = false;
      sum << key << " " << fmt("%.4f", s.worst_ratio) << "; ";
    }
  }
  v.summary = "worst ratios (<= 1.01): " + sum.str();
  return v;
}

// ---------------------------------------------------------------- criterion 4

Verdict criterion4(RunCache& cache, const std::string& dir) {
  Verdict v;
  std::ostringstream sum;
  for (int sc = 0; sc < 2; ++sc) {
    std::vector<const RunResult*> runs;
    const double gammas[] = {0.0, 1e-2, 1e-1};
    for (double g : gammas) {
      const std::string key = std::string(sc == 0 ? "landau" : "bump_on_tail") + " gamma=" + fmt("%g", g);
      runs.push_back(&cache.get(key, sc == 0 ? landau_long_config(dir, g) : bump_config(dir, g)));
    }
    const double alpha0 = sc == 0 ? 1.0 : 5.0 / 7.0;
    const char* name = sc == 0 ? "landau" : "bump_on_tail";
    bool monotone = true;
    bool bounded = true;
    bool ordered = true;
    double margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i) {
      const RunResult& r = *runs[i];
      if (!r.failure.empty()) {
        v.pass = false;
        std::cout << "  " << name << " gamma=" << gammas[i] << ": run failed\n";
        continue;
      }
      double emax = 0.0;
      for (const auto& rec : r.records) emax = std::max(emax, rec.Einf);
      for (std::size_t j = 0; j < r.records.size(); ++j) {
        const auto& rec = r.records[j];
        if (j > 0 && rec.alpha > r.records[j - 1].alpha) monotone = false;
        if (rec.alpha > alpha0) bounded = false;
        const double lower =
            alpha0 / std::sqrt(1.0 + gammas[i] * alpha0 * alpha0 * (1.0 + emax * emax) * rec.t);
        if (rec.alpha < lower) bounded = false;
        if (gammas[i] > 0.0 && rec.t > 0.0) margin = std::min(margin, rec.alpha / lower);
      }
      if (i > 0 && runs[i - 1]->failure.empty()) {
        const auto& a = runs[i - 1]->records;
        const auto& b = r.records;
        if (a.size() != b.size()) ordered = false;
        for (std::size_t j = 0; j < std::min(a.size(), b.size()); ++j) {
          if (a[j].t != b[j].t || b[j].alpha > a[j].alpha) ordered = false;
        }
      }
      std::cout << "  " << name << " gamma=" << gammas[i] << ": alpha(T) = "
                << fmt("%.6f", r.records.back().alpha) << ", max Einf = " << fmt("%.4f", emax) << "\n";
    }
    if (!(monotone && bounded && ordered)) v.pass = false;
    sum << name << (monotone ? " monotone" : " NOT-monotone") << (bounded ? " bounded" : " NOT-bounded")
        << (ordered ? " ordered" : " NOT-ordered") << " (min alpha/lower " << fmt("%.4f", margin)
        << "); ";
  }
  v.summary = sum.str();
  return v;
}

// ---------------------------------------------------------------- criterion 5

struct Suite {
  std::string name;
  std::function<std::pair<bool, std::string>()> run;
};

std::pair<bool, std::string> suite_orthogonality() {
  constexpr int N = 40;
  double worst = 0.0;
  for (double alpha : {1.0, 0.5, 2.0}) {
    HermiteSpec spec = HermiteSpec::with_defaults(N, 20.0 / alpha);
    spec.vquad.points = 1024;
    const QuadRule r = spec.rule();
    std::vector<double> p(N);
    std::vector<double> h(N);
    std::vector<double> gram(N * N, 0.0);
    for (int q = 0; q < r.size(); ++q) {
      psi(alpha, r.nodes[q], p);
      hermite_polys(alpha * r.nodes[q], h);
      for (int n = 0; n < N; ++n) {
        for (int m = 0; m < N; ++m) gram[n * N + m] += r.weights[q] * p[n] * h[m];
      }
    }
    for (int n = 0; n < N; ++n) {
      for (int m = 0; m < N; ++m) worst = std::max(worst, std::abs(gram[n * N + m] - (n == m ? 1.0 : 0.0)));
    }
  }
  return {worst <= 1e-10, "max |<Psi_n, H_m> - delta| = " + fmt("%.2e", worst) + " (<= 1e-10)"};
}

std::pair<bool, std::string> suite_eigenfunctions() {
  double worst = 0.0;
  for (double alpha : {1.0, 0.7}) {
    for (int n = 0; n < 10; ++n) {
      auto g = [&](double w) { return psi(alpha, w, n + 1)[n]; };
      for (int i = 0; i <= 200; ++i) {
        const double v = -6.0 + 12.0 * i / 200.0;
        worst = std::max(worst, std::abs(fokker_planck_apply(g, alpha, v) - alpha * alpha * n * g(v)));
      }
    }
  }
  return {worst <= 1e-5, "max residual " + fmt("%.2e", worst) + " (<= 1e-5, finite-difference bound)"};
}

std::pair<bool, std::string> suite_poisson() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uni(-0.5, 0.5);
  double worst = 0.0;
  for (int k = 0; k <= 3; ++k) {
    const MeshPtr m = build_mesh_from_edges({0.0, 0.4, 0.5, 1.2, 2.0, 2.9});
    DGField C0(m, k);
    for (double& c : C0.coeffs()) c = uni(rng);
    const ElectricField E = solve_poisson(C0);
    std::vector<double> d(k + 2);
    for (int j = 0; j < m->Nx; ++j) {
      for (double xi : {-1.0, -0.6, -0.1, 0.3, 0.8, 1.0}) {
        legendre_basis_derivative(xi, d);
        double dE = 0.0;
        for (int l = 0; l <= k + 1; ++l) dE += E.field(j, l) * d[l];
        dE *= 2.0 / m->h[j];
        worst = std::max(worst, std::abs(dE - (C0.eval_local(j, xi) - E.rho0)));
      }
    }
    for (int e = 0; e < m->Nx; ++e) worst = std::max(worst, std::abs(jump(E.field, e)));
    worst = std::max(worst, std::abs(E.field.integral()));
  }
  return {worst <= 1e-12, "max |E' - (C0 - rho0)|, jump, mean = " + fmt("%.2e", worst) + " (<= 1e-12)"};
}

std::pair<bool, std::string> suite_flux() {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double g = uni(rng);
    const double c = uni(rng);
    const double nu = 5.0 + uni(rng);
    const double alpha = 1.5 + 0.5 * uni(rng);
    worst = std::max(worst, std::abs(numerical_flux(g, g, c, c, nu, alpha) - g));
  }
  // uniform-in-x states: every interface flux equals the physical flux, so dC/dt = 0
  const MeshPtr m = build_mesh(2.0, 6);
  KineticState s = KineticState::zeros(m, 2, 8, ScalingState::initial(0.9, 0.0));
  for (int n = 0; n < 8; ++n) {
    for (int j = 0; j < 6; ++j) s.modes[n](j, 0) = n == 0 ? 1.0 : 0.3 / (n + 1.0);
  }
  const RhsResult r = rhs(s, FluxSpec::defaults(8));
  for (const auto& d : r.dmodes) {
    for (double c : d.coeffs()) worst = std::max(worst, std::abs(c));
  }
  return {worst <= 1e-14, "max |flux(u,u) - g(u)| and uniform-state rhs = " + fmt("%.2e", worst) + " (<= 1e-14)"};
}

std::pair<bool, std::string> suite_dg_order() {
  const double L = 2.0 * kPi;
  auto g = [](double x) { return std::sin(x) + 0.3 * std::cos(2.0 * x); };
  const QuadRule fine = gauss_legendre(10);
  double worst = 0.0;
  std::ostringstream out;
  for (int k = 0; k <= 3; ++k) {
    double prev = 0.0;
    for (int Nx = 8; Nx <= 64; Nx *= 2) {
      const MeshPtr m = build_mesh(L, Nx);
      const DGField u = project_to_Xh(g, m, k);
      double err = 0.0;
      for (int j = 0; j < Nx; ++j) {
        for (int q = 0; q < fine.size(); ++q) {
          const double x = m->edges[j] + 0.5 * (fine.nodes[q] + 1.0) * m->h[j];
          const double d = u.eval_local(j, fine.nodes[q]) - g(x);
          err += 0.5 * m->h[j] * fine.weights[q] * d * d;
        }
      }
      err = std::sqrt(err);
      if (prev > 0.0) worst = std::max(worst, std::abs(std::log2(prev / err) - (k + 1.0)));
      prev = err;
    }
  }
  return {worst <= 0.2, "max |order - (k+1)| over k=0..3 = " + fmt("%.3f", worst) + " (<= 0.2)"};
}

std::pair<bool, std::string> suite_spectral_decay() {
  const double alpha = 0.5;
  auto g = [](double v) { return std::exp(-(v - 1.0) * (v - 1.0) / 4.0); };
  const auto c = project_velocity(g, alpha, HermiteSpec::with_defaults(160, 24.0));
  auto tail = [&](int N) {
    double s = 0.0;
    for (int n = N; n < 160; ++n) s += c[n] * c[n];
    return std::sqrt(alpha * s);
  };
  double worst = std::numeric_limits<double>::infinity();
  int pairs = 0;
  for (int N = 4; N <= 64; N *= 2) {
    if (tail(N) < 1e-10) break;
    worst = std::min(worst, tail(N) / std::max(tail(2 * N), 1e-300));
    ++pairs;
  }
  return {pairs > 0 && worst >= 4.0,
          "min error ratio per doubling " + fmt("%.1f", worst) + " over " + std::to_string(pairs) +
              " doublings (>= 4 until 1e-10)"};
}

std::pair<bool, std::string> suite_norm_identity() {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int N = 4 + trial % 9;
    const int k = trial % 4;
    const double alpha = 0.5 + 0.03 * trial;
    const MeshPtr m = build_mesh(3.0, 5);
    KineticState s = KineticState::zeros(m, k, N, ScalingState::initial(alpha, 0.0));
    for (auto& mode : s.modes) {
      for (double& c : mode.coeffs()) c = uni(rng);
    }
    const double coeff = weighted_l2(s);
    const double vmax = 14.0 / alpha;
    const QuadRule vr = composite_gauss_legendre(-vmax, vmax, 32, 24);
    const QuadRule xr = gauss_legendre(k + 2);
    std::vector<double> p(N);
    double quad = 0.0;
    for (int j = 0; j < m->Nx; ++j) {
      for (int qx = 0; qx < xr.size(); ++qx) {
        std::vector<double> cn(N);
        for (int n = 0; n < N; ++n) cn[n] = s.modes[n].eval_local(j, xr.nodes[qx]);
        for (int qv = 0; qv < vr.size(); ++qv) {
          psi(alpha, vr.nodes[qv], p);
          double f = 0.0;
          for (int n = 0; n < N; ++n) f += cn[n] * p[n];
          quad += 0.5 * m->h[j] * xr.weights[qx] * vr.weights[qv] * f * f * weight(alpha, vr.nodes[qv]);
        }
      }
    }
    worst = std::max(worst, std::abs(coeff * coeff - quad) / quad);
  }
  return {worst <= 1e-8, "max relative mismatch over 50 random states " + fmt("%.2e", worst) + " (<= 1e-8)"};
}

std::pair<bool, std::string> suite_rk3_order() {
  RunConfig cfg = RunConfig::defaults(Scenario::Landau);
  cfg.landau.delta = 0.01;
  cfg.Nx = 32;
  cfg.N = 16;
  cfg.k = 1;
  cfg.gamma = 1.0;
  cfg.T = 0.5;
  cfg.filter.enabled = false;
  const KineticState init = initial_state(cfg);
  const FluxSpec flux = flux_for(cfg);
  auto advance = [&](double dt) {
    StepperConfig sc;
    sc.dt = dt;
    sc.T = cfg.T;
    sc.filter.enabled = false;
    sc.output_every = 1000000;
    sc.warn_cfl = false;
    return run(init, flux, sc, nullptr);
  };
  const KineticState ref = advance(6.25e-5);
  const HermiteSpec vspec = HermiteSpec::with_defaults(cfg.N, cfg.v_max);
  std::vector<double> errs;
  std::vector<double> dts;
  for (double dt = 4e-3; dt >= 5e-4 * 0.99; dt /= 2.0) {
    errs.push_back(compare_states(advance(dt), ref, vspec).l2_weighted_error);
    dts.push_back(dt);
  }
  const std::vector<double> orders = convergence_order(errs, dts);
  bool ok = true;
  std::string list;
  for (double o : orders) {
    ok = ok && std::abs(o - 3.0) <= 0.3;
    list += fmt("%.2f ", o);
  }
  return {ok, "orders " + list + "for dt 4e-3 -> 5e-4 (3.0 +- 0.3)"};
}

Verdict criterion5() {
  const std::vector<Suite> suites = {
      {"hermite orthogonality", suite_orthogonality},
      {"liouville eigenfunctions", suite_eigenfunctions},
      {"poisson exactness", suite_poisson},
      {"flux consistency", suite_flux},
      {"dg projection order", suite_dg_order},
      {"spectral projection decay", suite_spectral_decay},
      {"weighted norm identity", suite_norm_identity},
      {"rk3 temporal order", suite_rk3_order},
  };
  Verdict v;
  int passed = 0;
  for (const Suite& s : suites) {
    Clock clock;
    const auto [ok, detail] = s.run();
    std::cout << "  " << (ok ? "ok  " : "FAIL") << " " << s.name << ": " << detail << " ("
              << fmt("%.1f", clock.seconds()) << " s)\n";
    if (ok) {
      ++passed;
    } else {
      v.pass = false;
    }
  }
  v.summary = std::to_string(passed) + "/" + std::to_string(suites.size()) + " property suites";
  return v;
}

// ---------------------------------------------------------------- criterion 6

Verdict criterion6(const std::string& dir) {
  RunConfig cfg = landau_ladder_config(dir);
  cfg.ladder_start = 8;
  const ConvergenceTable t = run_convergence(cfg, 2, 0);
  const KineticState ref = read_snapshot(t.reference_path).state;
  const HermiteSpec vspec = HermiteSpec::with_defaults(ref.N(), cfg.v_max);
  std::vector<int> Ns = {16, 32, 64, 128, 256};
  std::vector<double> errs;
  for (int N : Ns) {
    RunConfig lc = cfg;
    lc.Nx = 128;
    lc.N = N;
    lc.k = 2;
    lc.dt = ladder_dt(cfg, 128, N, 2);
    lc.csv = "";
    lc.snapshot = "";
    Clock clock;
    const RunOutcome out = run_scenario(lc, false);
    errs.push_back(compare_states(out.final_state, ref, vspec).l2_weighted_error);
    std::cout << "  128x" << N << " P2 (dt " << fmt("%.3g", lc.dt) << "): weighted error "
              << fmt("%.3e", errs.back()) << " (" << fmt("%.0f", clock.seconds()) << " s)\n";
  }
  const double floor = errs.back();
  Verdict v;
  int checked = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < errs.size(); ++i) {
    if (errs[i] <= 4.0 * floor) break;
    const double ratio = errs[i] / errs[i + 1];
    worst = std::min(worst, ratio);
    ++checked;
    if (ratio < 4.0) v.pass = false;
  }
  if (checked == 0) v.pass = false;
  v.summary = "min error ratio per N doubling " + fmt("%.1f", worst) + " over " + std::to_string(checked) +
              " doublings before floor " + fmt("%.2e", floor) + " (>= 4)";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::string dir = "acceptance_output";
  std::vector<int> only;
  app.add_option("--output-dir", dir, "directory for cached references and run outputs");
  app.add_option("--only", only, "run only the listed criteria")->check(CLI::Range(1, 6));
  CLI11_PARSE(app, argc, argv);
  const std::set<int> selected = only.empty() ? std::set<int>{1, 2, 3, 4, 5, 6}
                                              : std::set<int>(only.begin(), only.end());

  RunCache cache;
  std::vector<std::pair<int, Verdict>> results;
  auto attempt = [&](int id, const std::function<Verdict()>& f) {
    if (!selected.count(id)) return;
    std::cout << "--- criterion " << id << "\n" << std::flush;
    Clock clock;
    Verdict v;
    try {
      v = f();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    v.summary += " [" + fmt("%.0f", clock.seconds()) + " s]";
    results.emplace_back(id, v);
    std::cout << "criterion " << id << ": " << (v.pass ? "PASS" : "FAIL") << " " << v.summary << "\n"
              << std::flush;
  };
  attempt(5, [] { return criterion5(); });
  attempt(1, [&] { return criterion1(dir); });
  attempt(6, [&] { return criterion6(dir); });
  attempt(2, [&] { return criterion2(cache, dir); });
  attempt(3, [&] { return criterion3(cache, dir); });
  attempt(4, [&] { return criterion4(cache, dir); });

  std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::cout << "=== summary\n";
  bool all = true;
  for (const auto& [id, v] : results) {
    std::cout << "criterion " << id << ": " << (v.pass ? "PASS" : "FAIL") << " " << v.summary << "\n";
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
