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

#include <cstdint>
#include <string>

#include "hdg/scenarios.hpp"
#include "hdg/stepper.hpp"

namespace hdg {

enum class Scenario { Landau, BumpOnTail, Custom };

const char* scenario_name(Scenario s);

/// Flat `key = value` run description. Real-valued keys accept constant
/// expressions such as `4*pi` or `sqrt(2)/2`.
struct RunConfig {
  Scenario scenario = Scenario::Landau;
  int Nx = 32;
  int N = 32;
  int k = 1;
  double L = 0.0;
  double v_max = 8.0;
  double dt = 1e-3;
  double T = 0.5;
  double gamma = 1.0;
  double alpha0 = 1.0;
  double nu_default = 0.0;  // 0 selects sqrt(2N)
  bool centered_mode0 = false;
  FilterConfig filter;
  int output_every = 10;

  LandauParams landau;      // wavenumber 0 selects 2 pi / L
  BumpOnTailParams bump;
  std::string f0;

  std::string output_dir = ".";
  std::string csv;          // empty selects <scenario>_diagnostics.csv
  std::string snapshot;     // empty selects <scenario>_final.snap

  int reference_Nx = 512;
  int reference_N = 512;
  int reference_k = 2;
  int ladder_start = 16;
  double cfl_safety = 0.8;  // ladder runs cap dt at this fraction of the CFL estimate; 0 disables

  static RunConfig defaults(Scenario s);
  static RunConfig parse(const std::string& text);
  static RunConfig load(const std::string& path);

  /// Throws ConfigError naming the key when it is unknown or the value is bad.
  void set(const std::string& key, const std::string& value);
  std::string get(const std::string& key) const;

  void validate() const;

  double wavenumber() const;
  std::string csv_path() const;
  std::string snapshot_path() const;

  /// FNV-1a over the scenario's physical description (initial data and
  /// domain); resolution and numerical parameters are excluded.
  std::uint64_t scenario_hash() const;
};

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t seed = 1469598103934665603ULL);

}  // namespace hdg
