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

#include "hdg/config.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>

#include "hdg/errors.hpp"
#include "hdg/snapshot.hpp"

namespace hdg {

const char* scenario_name(Scenario s) {
  switch (s) {
    case Scenario::Landau: return "landau";
    case Scenario::BumpOnTail: return "bump_on_tail";
    case Scenario::Custom: return "custom";
  }
  return "?";
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Scenario parse_scenario(const std::string& v) {
  if (v == "landau") return Scenario::Landau;
  if (v == "bump_on_tail") return Scenario::BumpOnTail;
  if (v == "custom") return Scenario::Custom;
  throw ConfigError("scenario: unknown scenario '" + v + "' (landau, bump_on_tail, custom)");
}

double parse_real(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec == std::errc() && end == v.data() + v.size()) {
    return out;
  }
  try {
    out = Expression::parse(v)(0.0, 0.0);
  } catch (const ConfigError&) {
    throw ConfigError(key + ": expected a real number, got '" + v + "'");
  }
  if (!std::isfinite(out)) {
    throw ConfigError(key + ": value is not finite");
  }
  return out;
}

int parse_int(const std::string& key, const std::string& v) {
  int out = 0;
  const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || end != v.data() + v.size()) {
    throw ConfigError(key + ": expected an integer, got '" + v + "'");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(key + ": expected true or false, got '" + v + "'");
}

std::string show(bool b) { return b ? "true" : "false"; }
std::string show(int i) { return std::to_string(i); }
std::string show(double d) { return format_number(d); }

struct Field {
  const char* name;
  bool physical;
  std::function<void(RunConfig&, const std::string&, const std::string&)> set;
  std::function<std::string(const RunConfig&)> get;
};

#define HDG_REAL(key, member, phys)                                                         \
  Field{key, phys, [](RunConfig& c, const std::string& k, const std::string& v) {           \
          c.member = parse_real(k, v);                                                       \
        },                                                                                   \
        [](const RunConfig& c) { return show(c.member); }}
#define HDG_INT(key, member, phys)                                                          \
  Field{key, phys, [](RunConfig& c, const std::string& k, const std::string& v) {           \
          c.member = parse_int(k, v);                                                        \
        },                                                                                   \
        [](const RunConfig& c) { return show(c.member); }}
#define HDG_BOOL(key, member, phys)                                                         \
  Field{key, phys, [](RunConfig& c, const std::string& k, const std::string& v) {           \
          c.member = parse_bool(k, v);                                                       \
        },                                                                                   \
        [](const RunConfig& c) { return show(c.member); }}
#define HDG_STR(key, member, phys)                                                          \
  Field{key, phys, [](RunConfig& c, const std::string&, const std::string& v) { c.member = v; }, \
        [](const RunConfig& c) { return c.member; }}

const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      Field{"scenario", true,
            [](RunConfig& c, const std::string&, const std::string& v) {
              c.scenario = parse_scenario(v);
            },
            [](const RunConfig& c) { return std::string(scenario_name(c.scenario)); }},
      HDG_INT("Nx", Nx, false),
      HDG_INT("N", N, false),
      HDG_INT("k", k, false),
      HDG_REAL("L", L, true),
      HDG_REAL("v_max", v_max, false),
      HDG_REAL("dt", dt, false),
      HDG_REAL("T", T, false),
      HDG_REAL("gamma", gamma, false),
      HDG_REAL("alpha0", alpha0, false),
      HDG_REAL("nu_default", nu_default, false),
      HDG_BOOL("centered_mode0", centered_mode0, false),
      HDG_BOOL("filter", filter.enabled, false),
      HDG_REAL("filter_strength", filter.strength, false),
      HDG_INT("filter_order", filter.order, false),
      HDG_REAL("filter_cutoff", filter.cutoff, false),
      HDG_INT("filter_every", filter.every, false),
      HDG_INT("output_every", output_every, false),
      HDG_REAL("delta", landau.delta, true),
      HDG_REAL("wavenumber", landau.wavenumber, true),
      HDG_REAL("kappa", bump.kappa, true),
      HDG_INT("n_harm", bump.n_harm, true),
      HDG_REAL("n_p", bump.n_p, true),
      HDG_REAL("n_b", bump.n_b, true),
      HDG_REAL("v_d", bump.v_d, true),
      HDG_REAL("v_p", bump.v_p, true),
      HDG_REAL("v_b", bump.v_b, true),
      HDG_STR("f0", f0, true),
      HDG_STR("output_dir", output_dir, false),
      HDG_STR("csv", csv, false),
      HDG_STR("snapshot", snapshot, false),
      HDG_INT("reference_Nx", reference_Nx, false),
      HDG_INT("reference_N", reference_N, false),
      HDG_INT("reference_k", reference_k, false),
      HDG_INT("ladder_start", ladder_start, false),
      HDG_REAL("cfl_safety", cfl_safety, false),
  };
  return table;
}

#undef HDG_REAL
#undef HDG_INT
#undef HDG_BOOL
#undef HDG_STR

const Field& field(const std::string& key) {
  for (const auto& f : fields()) {
    if (key == f.name) {
      return f;
    }
  }
  throw ConfigError("unknown key '" + key + "'");
}

}  // namespace

RunConfig RunConfig::defaults(Scenario s) {
  RunConfig c;
  c.scenario = s;
  switch (s) {
    case Scenario::Landau:
      c.L = 4.0 * std::numbers::pi;
      break;
    case Scenario::BumpOnTail:
      c.L = 62.0;
      c.Nx = 64;
      c.N = 128;
      c.k = 2;
      c.T = 50.0;
      c.gamma = 0.01;
      c.alpha0 = 5.0 / 7.0;
      c.output_every = 100;
      break;
    case Scenario::Custom:
      c.L = 2.0 * std::numbers::pi;
      c.gamma = 0.1;
      break;
  }
  return c;
}

void RunConfig::set(const std::string& key, const std::string& value) {
  field(key).set(*this, key, trim(value));
}

std::string RunConfig::get(const std::string& key) const { return field(key).get(*this); }

RunConfig RunConfig::parse(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    field(key);
    if (!seen.insert(key).second) {
      throw ConfigError("duplicate key '" + key + "'");
    }
    entries.emplace_back(std::move(key), std::move(value));
  }
  Scenario s = Scenario::Landau;
  for (const auto& [key, value] : entries) {
    if (key == "scenario") {
      s = parse_scenario(value);
    }
  }
  RunConfig c = defaults(s);
  for (const auto& [key, value] : entries) {
    c.set(key, value);
  }
  return c;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot read config file '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void RunConfig::validate() const {
  auto require = [](bool ok, const std::string& msg) {
    if (!ok) {
      throw ConfigError(msg);
    }
  };
  require(Nx >= 1, "Nx: must be >= 1");
  require(N >= 1, "N: must be >= 1");
  require(k >= 0 && k <= 3, "k: must be in {0, 1, 2, 3}");
  require(L > 0.0, "L: must be positive");
  require(v_max > 0.0, "v_max: must be positive");
  require(dt > 0.0, "dt: must be positive");
  require(T >= 0.0, "T: must be non-negative");
  require(gamma >= 0.0, "gamma: must be non-negative");
  require(alpha0 > 0.0, "alpha0: must be positive");
  require(nu_default >= 0.0, "nu_default: must be non-negative");
  require(output_every >= 1, "output_every: must be >= 1");
  require(!filter.enabled || N >= 4, "filter: filtered runs need N >= 4");
  require(filter.strength >= 0.0, "filter_strength: must be non-negative");
  require(filter.order >= 1, "filter_order: must be >= 1");
  require(filter.cutoff >= 0.0 && filter.cutoff < 1.0, "filter_cutoff: must be in [0, 1)");
  require(filter.every >= 1, "filter_every: must be >= 1");
  require(landau.wavenumber >= 0.0, "wavenumber: must be non-negative");
  require(bump.v_p > 0.0, "v_p: must be positive");
  require(bump.v_b > 0.0, "v_b: must be positive");
  require(scenario != Scenario::Custom || !f0.empty(), "f0: required for the custom scenario");
  require(reference_Nx >= 1 && reference_N >= 1, "reference_Nx, reference_N: must be >= 1");
  require(reference_k >= 0 && reference_k <= 3, "reference_k: must be in {0, 1, 2, 3}");
  require(ladder_start >= 1, "ladder_start: must be >= 1");
  require(cfl_safety >= 0.0, "cfl_safety: must be non-negative");
  if (scenario == Scenario::Custom) {
    Expression::parse(f0);
  }
}

double RunConfig::wavenumber() const {
  return landau.wavenumber > 0.0 ? landau.wavenumber : 2.0 * std::numbers::pi / L;
}

namespace {

std::string join(const std::string& dir, const std::string& name) {
  const std::filesystem::path p(name);
  if (p.is_absolute()) {
    return name;
  }
  return (std::filesystem::path(dir) / p).string();
}

}  // namespace

std::string RunConfig::csv_path() const {
  return join(output_dir, csv.empty() ? std::string(scenario_name(scenario)) + "_diagnostics.csv" : csv);
}

std::string RunConfig::snapshot_path() const {
  return join(output_dir,
              snapshot.empty() ? std::string(scenario_name(scenario)) + "_final.snap" : snapshot);
}

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t RunConfig::scenario_hash() const {
  std::string text = std::string("scenario=") + scenario_name(scenario) + "\nL=" + format_number(L) + "\n";
  switch (scenario) {
    case Scenario::Landau:
      text += "delta=" + format_number(landau.delta) + "\nwavenumber=" + format_number(wavenumber()) + "\n";
      break;
    case Scenario::BumpOnTail:
      for (const char* key : {"kappa", "n_harm", "n_p", "n_b", "v_d", "v_p", "v_b"}) {
        text += std::string(key) + "=" + get(key) + "\n";
      }
      break;
    case Scenario::Custom:
      text += "f0=" + f0 + "\n";
      break;
  }
  return fnv1a(text);
}

}  // namespace hdg
