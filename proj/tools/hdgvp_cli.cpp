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

#include <cmath>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "hdgvp.h"

namespace {

int exit_code(hdg_status s) {
  switch (s) {
    case HDG_OK: return 0;
    case HDG_ERR_NUMERICAL:
    case HDG_ERR_OVERFLOW: return 2;
    default: return 1;
  }
}

int report(hdg_status s) {
  if (s != HDG_OK) {
    std::fprintf(stderr, "error: %s\n", hdg_last_error());
  }
  return exit_code(s);
}

void keep_last(const hdg_record* r, void* user) { *static_cast<hdg_record*>(user) = *r; }

int cmd_run(const std::string& config, const std::string& output_dir) {
  hdg_config* cfg = nullptr;
  hdg_status s = hdg_config_load(config.c_str(), &cfg);
  if (s != HDG_OK) {
    return report(s);
  }
  hdg_record last{};
  hdg_run_summary summary{};
  s = hdg_run(cfg, output_dir.empty() ? nullptr : output_dir.c_str(), keep_last, &last, &summary);
  char csv[4096] = "";
  char snap[4096] = "";
  if (!output_dir.empty()) {
    hdg_config_set(cfg, "output_dir", output_dir.c_str());
  }
  hdg_config_output_path(cfg, HDG_OUTPUT_CSV, csv, sizeof csv, nullptr);
  hdg_config_output_path(cfg, HDG_OUTPUT_SNAPSHOT, snap, sizeof snap, nullptr);
  hdg_config_free(cfg);
  if (s != HDG_OK) {
    if (summary.numerical_failure) {
      std::fprintf(stderr, "run aborted after %zu steps; diagnostics up to the last valid state were written\n",
                   summary.steps);
    }
    return report(s);
  }
  std::printf("steps %zu, records %zu\n", summary.steps, summary.records);
  std::printf("wrote %s\nwrote %s\n", csv, snap);
  std::printf("t %.6g  alpha %.10g  mass %.15g  total_energy %.15g  l2_weighted %.10g\n", last.t,
              last.alpha, last.mass, last.total_energy, last.l2_weighted);
  return 0;
}

int cmd_convergence(const std::string& config, int levels, int degree, const std::string& output_dir) {
  hdg_config* cfg = nullptr;
  hdg_status s = hdg_config_load(config.c_str(), &cfg);
  if (s != HDG_OK) {
    return report(s);
  }
  hdg_table* table = nullptr;
  s = hdg_convergence(cfg, levels, degree, output_dir.empty() ? nullptr : output_dir.c_str(), 1, &table);
  hdg_config_free(cfg);
  if (s != HDG_OK) {
    return report(s);
  }
  std::fputs(hdg_table_text(table), stdout);
  hdg_table_free(table);
  return 0;
}

int cmd_compare(const std::string& a, const std::string& b, double v_max) {
  hdg_error_report e{};
  const hdg_status s = hdg_compare_files(a.c_str(), b.c_str(), v_max, &e);
  if (s != HDG_OK) {
    return report(s);
  }
  std::printf("l2_weighted_error %.17g\nl2_standard_error %.17g\n", e.l2_weighted_error,
              e.l2_standard_error);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hdgvp: Vlasov-Poisson solver with scaled Hermite velocity modes and DG in space"};
  app.require_subcommand(1);
  std::string output_dir;
  app.add_option("--output-dir", output_dir, "Directory for CSV, snapshot and reference files");

  std::string config;
  auto* run = app.add_subcommand("run", "Run one configured scenario");
  run->add_option("--config", config, "Config file (key = value)")->required();
  run->add_option("--output-dir", output_dir, "Directory for output files");

  int levels = 4;
  int degree = 1;
  auto* conv = app.add_subcommand("convergence", "Error/order table against a reference solution");
  conv->add_option("--config", config, "Config file (key = value)")->required();
  conv->add_option("--levels", levels, "Ladder levels, Nx = N doubling from ladder_start");
  conv->add_option("--degree", degree, "DG degree of the ladder");
  conv->add_option("--output-dir", output_dir, "Directory for the cached reference");

  std::string a;
  std::string b;
  double v_max = 8.0;
  auto* cmp = app.add_subcommand("compare", "Distance between two snapshots");
  cmp->add_option("--a", a, "Snapshot")->required();
  cmp->add_option("--b", b, "Reference snapshot")->required();
  cmp->add_option("--v-max", v_max, "Velocity truncation of the comparison grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  if (*run) {
    return cmd_run(config, output_dir);
  }
  if (*conv) {
    return cmd_convergence(config, levels, degree, output_dir);
  }
  return cmd_compare(a, b, v_max);
}
