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

#include "hdgvp.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <exception>
#include <iostream>
#include <memory>
#include <string>

#include "hdg/driver.hpp"
#include "hdg/errors.hpp"
#include "hdg/snapshot.hpp"

struct hdg_config {
  hdg::RunConfig cfg;
};

struct hdg_state {
  hdg::KineticState state;
  std::uint64_t scenario_hash = 0;
};

struct hdg_table {
  hdg::ConvergenceTable table;
  std::string text;
};

namespace {

thread_local std::string g_last_error;

hdg_status fail(hdg_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
hdg_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return HDG_OK;
  } catch (const hdg::ConfigError& e) {
    return fail(HDG_ERR_CONFIG, e.what());
  } catch (const hdg::InvalidArgument& e) {
    return fail(HDG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const hdg::IoError& e) {
    return fail(HDG_ERR_IO, e.what());
  } catch (const hdg::NumericalFailure& e) {
    return fail(HDG_ERR_NUMERICAL, e.what());
  } catch (const hdg::OverflowError& e) {
    return fail(HDG_ERR_OVERFLOW, e.what());
  } catch (const std::exception& e) {
    return fail(HDG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HDG_ERR_INTERNAL, "unknown error");
  }
}

hdg_status null_arg(const char* what) {
  return fail(HDG_ERR_INVALID_ARGUMENT, std::string(what) + " must not be NULL");
}

hdg_record to_c(const hdg::DiagnosticsRecord& r) {
  return hdg_record{r.t,           r.mass,        r.momentum, r.kinetic, r.electric,
                    r.total_energy, r.l2_standard, r.l2_weighted, r.alpha, r.Einf,
                    r.jump_dissipation};
}

}  // namespace

extern "C" {

const char* hdg_last_error(void) { return g_last_error.c_str(); }

const char* hdg_version(void) { return "0.1.0"; }

const char* hdg_csv_header(void) { return hdg::kCsvHeader; }

hdg_status hdg_config_default(const char* scenario, hdg_config** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    auto c = std::make_unique<hdg_config>();
    c->cfg = hdg::RunConfig::parse(std::string("scenario = ") + (scenario ? scenario : "landau"));
    *out = c.release();
  });
}

hdg_status hdg_config_parse(const char* text, hdg_config** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    auto c = std::make_unique<hdg_config>();
    c->cfg = hdg::RunConfig::parse(text);
    *out = c.release();
  });
}

hdg_status hdg_config_load(const char* path, hdg_config** out) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    auto c = std::make_unique<hdg_config>();
    c->cfg = hdg::RunConfig::load(path);
    *out = c.release();
  });
}

hdg_status hdg_config_set(hdg_config* cfg, const char* key, const char* value) {
  if (!cfg) return null_arg("cfg");
  if (!key || !value) return null_arg("key/value");
  return guarded([&] { cfg->cfg.set(key, value); });
}

namespace {

void copy_out(const std::string& v, char* buf, size_t len, size_t* needed) {
  if (needed) {
    *needed = v.size() + 1;
  }
  if (buf && len > 0) {
    const size_t n = std::min(len - 1, v.size());
    std::memcpy(buf, v.data(), n);
    buf[n] = '\0';
  }
}

}  // namespace

hdg_status hdg_config_get(const hdg_config* cfg, const char* key, char* buf, size_t len,
                          size_t* needed) {
  if (!cfg) return null_arg("cfg");
  if (!key) return null_arg("key");
  return guarded([&] { copy_out(cfg->cfg.get(key), buf, len, needed); });
}

hdg_status hdg_config_output_path(const hdg_config* cfg, hdg_output_kind kind, char* buf, size_t len,
                                  size_t* needed) {
  if (!cfg) return null_arg("cfg");
  return guarded([&] {
    copy_out(kind == HDG_OUTPUT_CSV ? cfg->cfg.csv_path() : cfg->cfg.snapshot_path(), buf, len, needed);
  });
}

hdg_status hdg_config_validate(const hdg_config* cfg) {
  if (!cfg) return null_arg("cfg");
  return guarded([&] { cfg->cfg.validate(); });
}

void hdg_config_free(hdg_config* cfg) { delete cfg; }

hdg_status hdg_state_create(const hdg_config* cfg, hdg_state** out) {
  if (!cfg) return null_arg("cfg");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    auto s = std::make_unique<hdg_state>();
    s->state = hdg::initial_state(cfg->cfg);
    s->scenario_hash = cfg->cfg.scenario_hash();
    *out = s.release();
  });
}

hdg_status hdg_state_read(const char* path, hdg_state** out) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    hdg::Snapshot snap = hdg::read_snapshot(std::string(path));
    auto s = std::make_unique<hdg_state>();
    s->state = std::move(snap.state);
    s->scenario_hash = snap.scenario_hash;
    *out = s.release();
  });
}

hdg_status hdg_state_write(const hdg_state* state, const char* path) {
  if (!state) return null_arg("state");
  if (!path) return null_arg("path");
  return guarded([&] { hdg::write_snapshot(std::string(path), state->state, state->scenario_hash); });
}

hdg_status hdg_state_info_get(const hdg_state* state, hdg_state_info* out) {
  if (!state) return null_arg("state");
  if (!out) return null_arg("out");
  const auto& s = state->state;
  out->t = s.t;
  out->alpha = s.scaling.alpha;
  out->alpha0 = s.scaling.alpha0;
  out->gamma = s.scaling.gamma;
  out->L = s.mesh().L;
  out->Nx = s.mesh().Nx;
  out->N = s.N();
  out->k = s.degree();
  out->scenario_hash = state->scenario_hash;
  g_last_error.clear();
  return HDG_OK;
}

hdg_status hdg_state_coeff(const hdg_state* state, int n, int j, int m, double* out) {
  if (!state) return null_arg("state");
  if (!out) return null_arg("out");
  const auto& s = state->state;
  if (n < 0 || n >= s.N() || j < 0 || j >= s.mesh().Nx || m < 0 || m > s.degree()) {
    return fail(HDG_ERR_INVALID_ARGUMENT, "hdg_state_coeff: index out of range");
  }
  *out = s.modes[n](j, m);
  g_last_error.clear();
  return HDG_OK;
}

hdg_status hdg_state_eval(const hdg_state* state, double x, double v, double* out) {
  if (!state) return null_arg("state");
  if (!out) return null_arg("out");
  return guarded([&] {
    const auto& s = state->state;
    std::vector<double> c(static_cast<size_t>(s.N()));
    for (int n = 0; n < s.N(); ++n) {
      c[n] = s.modes[n].eval(x);
    }
    *out = hdg::reconstruct(c, s.alpha(), v);
  });
}

hdg_status hdg_state_record(const hdg_state* state, const hdg_config* cfg, hdg_record* out) {
  if (!state) return null_arg("state");
  if (!cfg) return null_arg("cfg");
  if (!out) return null_arg("out");
  return guarded([&] {
    hdg::RunConfig c = cfg->cfg;
    c.N = state->state.N();
    const hdg::DiagnosticsEngine engine(c.N, hdg::flux_for(c));
    *out = to_c(engine.record(state->state));
  });
}

void hdg_state_free(hdg_state* state) { delete state; }

hdg_status hdg_state_advance(hdg_state* state, const hdg_config* cfg, hdg_record_callback cb,
                             void* user) {
  if (!state) return null_arg("state");
  if (!cfg) return null_arg("cfg");
  return guarded([&] {
    hdg::RunConfig c = cfg->cfg;
    c.N = state->state.N();
    hdg::RecordSink sink;
    if (cb) {
      sink = [cb, user](const hdg::DiagnosticsRecord& r) {
        const hdg_record rec = to_c(r);
        cb(&rec, user);
      };
    }
    state->state = hdg::run(state->state, hdg::flux_for(c), hdg::stepper_for(c), sink);
  });
}

hdg_status hdg_run(const hdg_config* cfg, const char* output_dir, hdg_record_callback cb, void* user,
                   hdg_run_summary* summary) {
  if (!cfg) return null_arg("cfg");
  if (summary) {
    *summary = hdg_run_summary{0, 0, 0};
  }
  hdg::RunOutcome outcome;
  bool failed = false;
  const hdg_status st = guarded([&] {
    hdg::RunConfig c = cfg->cfg;
    if (output_dir) {
      c.output_dir = output_dir;
    }
    try {
      outcome = hdg::run_scenario(c, true);
    } catch (const hdg::NumericalFailure&) {
      failed = true;
      throw;
    }
    if (cb) {
      for (const auto& r : outcome.records) {
        const hdg_record rec = to_c(r);
        cb(&rec, user);
      }
    }
  });
  if (summary) {
    summary->steps = outcome.steps;
    summary->records = outcome.records.size();
    summary->numerical_failure = failed ? 1 : 0;
  }
  return st;
}

hdg_status hdg_compare_states(const hdg_state* a, const hdg_state* reference, double v_max,
                              hdg_error_report* out) {
  if (!a || !reference) return null_arg("state");
  if (!out) return null_arg("out");
  return guarded([&] {
    const hdg::ErrorReport e = hdg::compare_states(
        a->state, reference->state, hdg::HermiteSpec::with_defaults(reference->state.N(), v_max));
    out->l2_weighted_error = e.l2_weighted_error;
    out->l2_standard_error = e.l2_standard_error;
  });
}

hdg_status hdg_compare_files(const char* a, const char* b, double v_max, hdg_error_report* out) {
  if (!a || !b) return null_arg("path");
  if (!out) return null_arg("out");
  return guarded([&] {
    const hdg::ErrorReport e = hdg::compare_snapshots(a, b, v_max);
    out->l2_weighted_error = e.l2_weighted_error;
    out->l2_standard_error = e.l2_standard_error;
  });
}

hdg_status hdg_convergence(const hdg_config* cfg, int levels, int degree, const char* output_dir,
                           int verbose, hdg_table** out) {
  if (!cfg) return null_arg("cfg");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    hdg::RunConfig c = cfg->cfg;
    if (output_dir) {
      c.output_dir = output_dir;
    }
    auto t = std::make_unique<hdg_table>();
    t->table = hdg::run_convergence(c, levels, degree, verbose ? &std::cerr : nullptr);
    t->text = hdg::format_convergence(t->table);
    *out = t.release();
  });
}

size_t hdg_table_rows(const hdg_table* table) { return table ? table->table.rows.size() : 0; }

hdg_status hdg_table_row(const hdg_table* table, size_t i, hdg_convergence_row* out) {
  if (!table) return null_arg("table");
  if (!out) return null_arg("out");
  if (i >= table->table.rows.size()) {
    return fail(HDG_ERR_INVALID_ARGUMENT, "hdg_table_row: index out of range");
  }
  const auto& r = table->table.rows[i];
  *out = hdg_convergence_row{r.Nx, r.N, r.k, r.h, r.dt, r.error_weighted, r.error_standard, r.order};
  g_last_error.clear();
  return HDG_OK;
}

const char* hdg_table_text(const hdg_table* table) { return table ? table->text.c_str() : ""; }

void hdg_table_free(hdg_table* table) { delete table; }

hdg_status hdg_convergence_orders(const double* errors, const double* h, size_t n, double* orders) {
  if (!errors || !h || !orders) return null_arg("errors/h/orders");
  return guarded([&] {
    const auto o = hdg::convergence_order(std::span<const double>(errors, n), std::span<const double>(h, n));
    std::copy(o.begin(), o.end(), orders);
  });
}

}  // extern "C"
