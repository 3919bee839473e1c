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

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hdg/config.hpp"
#include "hdg/diagnostics.hpp"

namespace hdg {

extern const char* const kCsvHeader;

KineticState initial_state(const RunConfig& cfg);
FluxSpec flux_for(const RunConfig& cfg);
StepperConfig stepper_for(const RunConfig& cfg);

void write_csv(std::ostream& out, std::span<const DiagnosticsRecord> records);

struct RunOutcome {
  KineticState final_state;
  std::vector<DiagnosticsRecord> records;
  std::size_t steps = 0;
  std::string csv_path;
  std::string snapshot_path;
};

/// Runs the configured scenario. With `write_files` the CSV and final
/// snapshot are written under cfg.output_dir; on NumericalFailure the CSV
/// holds the records up to the last valid state before the error propagates.
RunOutcome run_scenario(const RunConfig& cfg, bool write_files = true);

struct ConvergenceRow {
  int Nx = 0;
  int N = 0;
  int k = 0;
  double h = 0.0;
  double dt = 0.0;
  double error_weighted = 0.0;
  double error_standard = 0.0;
  double order = 0.0;  // NaN on the first row
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  std::string reference;
  std::string reference_path;
  bool reference_cached = false;
};

/// Step used by ladder runs: cfg.dt, capped at cfl_safety times the CFL
/// estimate evaluated at alpha0 (1 + gamma alpha0^2 T)^{-1/2}.
double ladder_dt(const RunConfig& cfg, int Nx, int N, int k);

/// Runs Nx = N = ladder_start 2^i for i < levels at degree `degree`, and a
/// reference solution cached under output_dir, then compares at T.
ConvergenceTable run_convergence(const RunConfig& cfg, int levels, int degree,
                                 std::ostream* log = nullptr);

std::string format_convergence(const ConvergenceTable& table);

/// Compares two snapshot files; they must share scenario, domain and time.
ErrorReport compare_snapshots(const std::string& a, const std::string& b, double v_max = 8.0);

}  // namespace hdg
