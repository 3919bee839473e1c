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

#include "hdg/snapshot.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "hdg/errors.hpp"

namespace hdg {

namespace {

constexpr const char* kMagic = "hdgvp-snapshot 1";

}  // namespace

std::string format_number(double x) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) {
    throw InvalidArgument("format_number: conversion failed");
  }
  return std::string(buf, end);
}

double parse_number(const std::string& s) {
  double out = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw IoError("bad number '" + s + "'");
  }
  return out;
}

void write_snapshot(std::ostream& out, const KineticState& state, std::uint64_t scenario_hash) {
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(scenario_hash));
  out << kMagic << "\n";
  out << "t " << format_number(state.t) << "\n";
  out << "alpha " << format_number(state.scaling.alpha) << "\n";
  out << "alpha0 " << format_number(state.scaling.alpha0) << "\n";
  out << "gamma " << format_number(state.scaling.gamma) << "\n";
  out << "Nx " << state.mesh().Nx << "\n";
  out << "N " << state.N() << "\n";
  out << "k " << state.degree() << "\n";
  out << "L " << format_number(state.mesh().L) << "\n";
  out << "scenario_hash " << hash << "\n";
  out << "end_header\n";
  const int K = state.degree() + 1;
  std::string row;
  for (int n = 0; n < state.N(); ++n) {
    for (int j = 0; j < state.mesh().Nx; ++j) {
      row = std::to_string(n) + " " + std::to_string(j);
      for (int m = 0; m < K; ++m) {
        row += ' ';
        row += format_number(state.modes[n](j, m));
      }
      row += '\n';
      out << row;
    }
  }
}

void write_snapshot(const std::string& path, const KineticState& state, std::uint64_t scenario_hash) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write snapshot '" + path + "'");
  }
  write_snapshot(out, state, scenario_hash);
  if (!out) {
    throw IoError("write failed for snapshot '" + path + "'");
  }
}

Snapshot read_snapshot(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kMagic) {
    throw IoError("not a snapshot file");
  }
  std::map<std::string, std::string> header;
  while (std::getline(in, line) && line != "end_header") {
    const auto sp = line.find(' ');
    if (sp == std::string::npos) {
      throw IoError("malformed snapshot header line '" + line + "'");
    }
    header[line.substr(0, sp)] = line.substr(sp + 1);
  }
  if (line != "end_header") {
    throw IoError("snapshot header is not terminated");
  }
  auto need = [&](const char* key) -> const std::string& {
    const auto it = header.find(key);
    if (it == header.end()) {
      throw IoError(std::string("snapshot header lacks '") + key + "'");
    }
    return it->second;
  };
  auto need_int = [&](const char* key) {
    const std::string& s = need(key);
    int v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) {
      throw IoError(std::string("snapshot header: bad integer for '") + key + "'");
    }
    return v;
  };
  Snapshot snap;
  const int Nx = need_int("Nx");
  const int N = need_int("N");
  const int k = need_int("k");
  if (Nx < 1 || N < 1 || k < 0) {
    throw IoError("snapshot header: invalid resolution");
  }
  ScalingState scaling;
  scaling.alpha0 = parse_number(need("alpha0"));
  scaling.gamma = parse_number(need("gamma"));
  scaling.alpha = parse_number(need("alpha"));
  scaling.t = parse_number(need("t"));
  snap.scenario_hash = std::stoull(need("scenario_hash"), nullptr, 16);
  snap.state = KineticState::zeros(build_mesh(parse_number(need("L")), Nx), k, N, scaling);
  snap.state.t = scaling.t;

  const long long rows = static_cast<long long>(N) * Nx;
  for (long long r = 0; r < rows; ++r) {
    if (!std::getline(in, line) || in.eof()) {
      throw IoError("snapshot truncated after " + std::to_string(r) + " rows");
    }
    std::istringstream ls(line);
    int n = -1;
    int j = -1;
    ls >> n >> j;
    if (n != r / Nx || j != r % Nx) {
      throw IoError("snapshot row " + std::to_string(r) + " is out of order");
    }
    for (int m = 0; m <= k; ++m) {
      std::string tok;
      if (!(ls >> tok)) {
        throw IoError("snapshot row " + std::to_string(r) + " is short");
      }
      snap.state.modes[n](j, m) = parse_number(tok);
    }
  }
  return snap;
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read snapshot '" + path + "'");
  }
  return read_snapshot(in);
}

}  // namespace hdg
