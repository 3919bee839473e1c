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
#include <iosfwd>
#include <string>

#include "hdg/vlasov.hpp"

namespace hdg {

/// Shortest decimal form that reads back to the same double.
std::string format_number(double x);
double parse_number(const std::string& s);

struct Snapshot {
  KineticState state;
  std::uint64_t scenario_hash = 0;
};

/// Text header of `key value` lines closed by `end_header`, then one row
/// `n j c_0 ... c_k` per mode and cell, n-major.
void write_snapshot(std::ostream& out, const KineticState& state, std::uint64_t scenario_hash);
void write_snapshot(const std::string& path, const KineticState& state, std::uint64_t scenario_hash);

Snapshot read_snapshot(std::istream& in);
Snapshot read_snapshot(const std::string& path);

}  // namespace hdg
