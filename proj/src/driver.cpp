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

#include "hdg/driver.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "hdg/errors.hpp"
#include "hdg/snapshot.hpp"

namespace hdg {

const char* const kCsvHeader =
    "t,mass,momentum,kinetic,electric,total_energy,l2_standard,l2_weighted,alpha,Einf,jump_dissipation";

KineticState initial_state(const RunConfig& cfg) {
  cfg.validate();
  const MeshPtr mesh = build_mesh(cfg.L, cfg.Nx);
  switch (cfg.scenario) {
    case Scenario::Landau: {
      LandauParams p = cfg.landau;
      p.wavenumber = cfg.wavenumber();
      return init_landau(p, mesh, cfg.N, cfg.k, cfg.alpha0, cfg.gamma, cfg.v_max);
    }
    case Scenario::BumpOnTail:
      return init_bump_on_tail(cfg.bump, mesh, cfg.N, cfg.k, cfg.alpha0, cfg.gamma, cfg.v_max);
    case Scenario::Custom:
      return init_custom(Expression::parse(cfg.f0), mesh, cfg.N, cfg.k, cfg.alpha0, cfg.gamma,
                         cfg.v_max);
  }
  throw ConfigError("scenario: unsupported");
}

FluxSpec flux_for(const RunConfig& cfg) {
  return FluxSpec::defaults(cfg.N, cfg.centered_mode0, cfg.nu_default);
}

StepperConfig stepper_for(const RunConfig& cfg) {
  StepperConfig s;
  s.dt = cfg.dt;
  s.T = cfg.T;
  s.filter = cfg.filter;
  s.output_every = cfg.output_every;
  return s;
}

void write_csv(std::ostream& out, std::span<const DiagnosticsRecord> records) {
  out << kCsvHeader << "\n";
  for (const auto& r : records) {
    out << format_number(r.t) << ',' << format_number(r.mass) << ',' << format_number(r.momentum)
        << ',' << format_number(r.kinetic) << ',' << format_number(r.electric) << ','
        << format_number(r.total_energy) << ',' << format_number(r.l2_standard) << ','
        << format_number(r.l2_weighted) << ',' << format_number(r.alpha) << ','
        << format_number(r.Einf) << ',' << format_number(r.jump_dissipation) << "\n";
  }
}

namespace {

void ensure_dir(const std::string& file) {
  const auto parent = std::filesystem::path(file).parent_path();
  if (!parent.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(parent, ec);
    if (ec) {
      throw IoError("cannot create directory '" + parent.string() + "': " + ec.message());
    }
  }
}

void write_csv_file(const std::string& path, std::span<const DiagnosticsRecord> records) {
  ensure_dir(path);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write '" + path + "'");
  }
  write_csv(out, records);
}

KineticState integrate(const RunConfig& cfg, const StepperConfig& sc, std::vector<DiagnosticsRecord>* records,
                       std::size_t* steps) {
  RunSummary summary;
  RecordSink sink;
  if (records) {
    sink = [records](const DiagnosticsRecord& r) { records->push_back(r); };
  }
  KineticState out = run(initial_state(cfg), flux_for(cfg), sc, sink, {}, &summary);
  if (steps) {
    *steps = summary.steps;
  }
  return out;
}

}  // namespace

RunOutcome run_scenario(const RunConfig& cfg, bool write_files) {
  cfg.validate();
  RunOutcome outcome;
  outcome.csv_path = cfg.csv_path();
  outcome.snapshot_path = cfg.snapshot_path();
  try {
    outcome.final_state = integrate(cfg, stepper_for(cfg), &outcome.records, &outcome.steps);
  } catch (const NumericalFailure&) {
    if (write_files) {
      write_csv_file(outcome.csv_path, outcome.records);
    }
    throw;
  }
  if (write_files) {
    write_csv_file(outcome.csv_path, outcome.records);
    ensure_dir(outcome.snapshot_path);
    write_snapshot(outcome.snapshot_path, outcome.final_state, cfg.scenario_hash());
  }
  return outcome;
}

double ladder_dt(const RunConfig& cfg, int Nx, int N, int k) {
  if (cfg.cfl_safety <= 0.0) {
    return cfg.dt;
  }
  const double alpha_low = alpha_from_integral(cfg.alpha0, cfg.gamma, cfg.T);
  const double h = cfg.L / Nx;
  const double limit = h * alpha_low / ((2.0 * k + 1.0) * std::sqrt(2.0 * N));
  return std::min(cfg.dt, cfg.cfl_safety * limit);
}

namespace {

RunConfig level_config(const RunConfig& base, int Nx, int N, int k) {
  RunConfig c = base;
  c.Nx = Nx;
  c.N = N;
  c.k = k;
  c.dt = ladder_dt(base, Nx, N, k);
  c.output_every = std::numeric_limits<int>::max();
  return c;
}

std::string reference_file(const RunConfig& ref) {
  std::string key = std::to_string(ref.scenario_hash());
  for (const char* k : {"Nx", "N", "k", "v_max", "dt", "T", "gamma", "alpha0", "nu_default",
                        "centered_mode0", "filter", "filter_strength", "filter_order",
                        "filter_cutoff", "filter_every"}) {
    key += std::string("|") + k + "=" + ref.get(k);
  }
  char name[128];
  std::snprintf(name, sizeof name, "reference_%dx%d_P%d_%016llx.snap", ref.Nx, ref.N, ref.k,
                static_cast<unsigned long long>(fnv1a(key)));
  return (std::filesystem::path(ref.output_dir) / name).string();
}

std::string label(int Nx, int N, int k) {
  return std::to_string(Nx) + "x" + std::to_string(N) + " P" + std::to_string(k);
}

}  // namespace

ConvergenceTable run_convergence(const RunConfig& cfg, int levels, int degree, std::ostream* log) {
  cfg.validate();
  if (levels < 2) {
    throw ConfigError("levels: need at least 2 ladder levels");
  }
  if (degree < 0 || degree > 3) {
    throw ConfigError("degree: must be in {0, 1, 2, 3}");
  }
  ConvergenceTable table;
  const RunConfig ref_cfg = level_config(cfg, cfg.reference_Nx, cfg.reference_N, cfg.reference_k);
  table.reference = label(ref_cfg.Nx, ref_cfg.N, ref_cfg.k);
  table.reference_path = reference_file(ref_cfg);

  KineticState ref;
  if (std::filesystem::exists(table.reference_path)) {
    Snapshot snap = read_snapshot(table.reference_path);
    if (snap.scenario_hash == cfg.scenario_hash() && std::abs(snap.state.t - cfg.T) <= 1e-12 * std::max(1.0, cfg.T)) {
      ref = std::move(snap.state);
      table.reference_cached = true;
    }
  }
  if (!table.reference_cached) {
    if (log) {
      *log << "computing reference " << table.reference << " (dt = " << ref_cfg.dt << ")\n";
    }
    ref = integrate(ref_cfg, stepper_for(ref_cfg), nullptr, nullptr);
    ensure_dir(table.reference_path);
    write_snapshot(table.reference_path, ref, cfg.scenario_hash());
  } else if (log) {
    *log << "using cached reference " << table.reference_path << "\n";
  }

  const HermiteSpec vspec = HermiteSpec::with_defaults(ref.N(), cfg.v_max);
  std::vector<double> errors;
  std::vector<double> hs;
  for (int i = 0; i < levels; ++i) {
    const int n = cfg.ladder_start << i;
    const RunConfig lc = level_config(cfg, n, n, degree);
    if (log) {
      *log << "running " << label(n, n, degree) << " (dt = " << lc.dt << ")\n";
    }
    const KineticState s = integrate(lc, stepper_for(lc), nullptr, nullptr);
    const ErrorReport e = compare_states(s, ref, vspec);
    ConvergenceRow row;
    row.Nx = n;
    row.N = n;
    row.k = degree;
    row.h = cfg.L / n;
    row.dt = lc.dt;
    row.error_weighted = e.l2_weighted_error;
    row.error_standard = e.l2_standard_error;
    row.order = std::numeric_limits<double>::quiet_NaN();
    table.rows.push_back(row);
    errors.push_back(row.error_weighted);
    hs.push_back(row.h);
  }
  const std::vector<double> orders = convergence_order(errors, hs);
  for (std::size_t i = 0; i < orders.size(); ++i) {
    table.rows[i + 1].order = orders[i];
  }
  return table;
}

std::string format_convergence(const ConvergenceTable& table) {
  std::ostringstream out;
  char line[160];
  out << "# reference " << table.reference << (table.reference_cached ? " (cached)" : "") << "\n";
  std::snprintf(line, sizeof line, "%-14s %-10s %-13s %-6s %-13s\n", "resolution", "dt",
                "weighted_L2", "order", "standard_L2");
  out << line;
  for (const auto& r : table.rows) {
    char order[16];
    if (std::isnan(r.order)) {
      std::snprintf(order, sizeof order, "-");
    } else {
      std::snprintf(order, sizeof order, "%.2f", r.order);
    }
    std::snprintf(line, sizeof line, "%-14s %-10.3e %-13.3e %-6s %-13.3e\n",
                  label(r.Nx, r.N, r.k).c_str(), r.dt, r.error_weighted, order, r.error_standard);
    out << line;
  }
  return out.str();
}

ErrorReport compare_snapshots(const std::string& a, const std::string& b, double v_max) {
  const Snapshot sa = read_snapshot(a);
  const Snapshot sb = read_snapshot(b);
  if (sa.scenario_hash != sb.scenario_hash) {
    throw InvalidArgument("compare: snapshots come from different scenarios");
  }
  return compare_states(sa.state, sb.state, HermiteSpec::with_defaults(sb.state.N(), v_max));
}

}  // namespace hdg
