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

#include "hdg/vlasov.hpp"

#include <cmath>
#include <string>

#include "hdg/errors.hpp"
#include "hdg/quadrature.hpp"

namespace hdg {

KineticState KineticState::zeros(const MeshPtr& mesh, int k, int N, const ScalingState& scaling) {
  if (N < 1) {
    throw InvalidArgument("KineticState: need N >= 1");
  }
  KineticState s;
  s.modes.assign(static_cast<std::size_t>(N), DGField(mesh, k));
  s.scaling = scaling;
  s.t = scaling.t;
  return s;
}

void KineticState::validate() const {
  if (modes.empty()) {
    throw InvalidArgument("KineticState: no modes");
  }
  const auto& mesh0 = modes.front().mesh_ptr();
  const int k = modes.front().degree();
  for (int n = 0; n < N(); ++n) {
    if (modes[n].mesh_ptr() != mesh0 && modes[n].mesh().edges != mesh0->edges) {
      throw InvalidArgument("KineticState: modes live on different meshes");
    }
    if (modes[n].degree() != k) {
      throw InvalidArgument("KineticState: modes have different degrees");
    }
    if (!modes[n].all_finite()) {
      throw NumericalFailure("KineticState: non-finite coefficient", t, n, -1);
    }
  }
  if (!(scaling.alpha > 0.0)) {
    throw InvalidArgument("KineticState: alpha must be positive");
  }
}

FluxSpec FluxSpec::defaults(int N, bool centered_mode0, double nu_default) {
  FluxSpec spec;
  const double nu = nu_default > 0.0 ? nu_default : std::sqrt(2.0 * N);
  spec.nu.assign(static_cast<std::size_t>(N), nu);
  spec.centered_mode0 = centered_mode0;
  if (centered_mode0) {
    spec.nu[0] = 0.0;
  }
  return spec;
}

void FluxSpec::validate(int N) const {
  if (static_cast<int>(nu.size()) != N) {
    throw InvalidArgument("FluxSpec: expected " + std::to_string(N) + " viscosity coefficients");
  }
  for (int n = 0; n < N; ++n) {
    if (!std::isfinite(nu[n]) || nu[n] < 0.0) {
      throw InvalidArgument("FluxSpec: nu_" + std::to_string(n) + " must be finite and >= 0");
    }
    if (nu[n] == 0.0 && !(n == 0 && centered_mode0)) {
      throw InvalidArgument("FluxSpec: nu_" + std::to_string(n) +
                            " = 0 is only allowed for mode 0 with a centered flux");
    }
  }
}

DGField g_field(const KineticState& state, int n) {
  const int N = state.N();
  if (n < 0 || n >= N) {
    throw InvalidArgument("g_field: mode index out of range");
  }
  DGField g(state.mesh_ptr(), state.degree());
  const double inv_alpha = 1.0 / state.alpha();
  auto& out = g.coeffs();
  if (n >= 1) {
    const double s = std::sqrt(static_cast<double>(n)) * inv_alpha;
    const auto& lo = state.modes[n - 1].coeffs();
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] += s * lo[i];
    }
  }
  if (n + 1 < N) {
    const double s = std::sqrt(static_cast<double>(n + 1)) * inv_alpha;
    const auto& hi = state.modes[n + 1].coeffs();
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] += s * hi[i];
    }
  }
  return g;
}

double numerical_flux(double gminus, double gplus, double Cminus, double Cplus, double nu_n,
                      double alpha) {
  return 0.5 * (gminus + gplus - (nu_n / alpha) * (Cplus - Cminus));
}

DGField source_field(const KineticState& state, const ElectricField& E, int n, double alpha_rate) {
  const int k = state.degree();
  const double alpha = state.alpha();
  DGField S(state.mesh_ptr(), k);
  if (n <= 0) {
    return S;
  }
  const double dn = static_cast<double>(n);
  const double ratio = alpha_rate / alpha;
  auto& out = S.coeffs();
  const auto& cn = state.modes[n].coeffs();
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] += ratio * dn * cn[i];
  }
  if (n >= 2) {
    const double s = ratio * std::sqrt(dn * (dn - 1.0));
    const auto& c2 = state.modes[n - 2].coeffs();
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] += s * c2[i];
    }
  }
  const QuadRule quad = gauss_legendre(k + 3);
  std::vector<double> basis(static_cast<std::size_t>(k) + 1);
  const DGField& cprev = state.modes[n - 1];
  const double force = alpha * std::sqrt(dn);
  for (int j = 0; j < state.mesh().Nx; ++j) {
    auto sj = S.cell(j);
    for (int q = 0; q < quad.size(); ++q) {
      const double xi = quad.nodes[q];
      const double prod = E.field.eval_local(j, xi) * cprev.eval_local(j, xi);
      legendre_basis(xi, basis);
      for (int m = 0; m <= k; ++m) {
        sj[m] += force * quad.weights[q] * prod * basis[m];
      }
    }
  }
  return S;
}

VlasovOperator::VlasovOperator(MeshPtr mesh, int k, int N, FluxSpec flux, RhsOptions options)
    : mesh_(std::move(mesh)), k_(k), N_(N), flux_(std::move(flux)), options_(options) {
  if (k < 0 || N < 1) {
    throw InvalidArgument("VlasovOperator: need k >= 0 and N >= 1");
  }
  flux_.validate(N);
  const int K = k + 1;
  const QuadRule quad = gauss_legendre(k + 3);
  nq_ = quad.size();
  qweights_ = quad.weights;
  basis_q_.assign(static_cast<std::size_t>(nq_) * K, 0.0);
  efield_q_.assign(static_cast<std::size_t>(nq_) * (K + 1), 0.0);
  for (int q = 0; q < nq_; ++q) {
    legendre_basis(quad.nodes[q], std::span<double>(basis_q_.data() + q * K, K));
    legendre_basis(quad.nodes[q], std::span<double>(efield_q_.data() + q * (K + 1), K + 1));
  }
  // D_lm = int phi_l phi_m' dxi; the integrand has degree 2k - 1, exact with k + 2 points.
  dmat_.assign(static_cast<std::size_t>(K) * K, 0.0);
  std::vector<double> b(K);
  std::vector<double> db(K);
  for (int q = 0; q < nq_; ++q) {
    legendre_basis(quad.nodes[q], b);
    legendre_basis_derivative(quad.nodes[q], db);
    for (int l = 0; l < K; ++l) {
      for (int m = 0; m < K; ++m) {
        dmat_[l * K + m] += quad.weights[q] * b[l] * db[m];
      }
    }
  }
  phi_right_.resize(K);
  phi_left_.resize(K);
  legendre_basis(1.0, phi_right_);
  legendre_basis(-1.0, phi_left_);
}

double VlasovOperator::apply(const KineticState& state, std::vector<DGField>& dmodes,
                             ElectricField* E_out) const {
  const int K = k_ + 1;
  const int Nx = mesh_->Nx;
  const int N = N_;
  if (state.N() != N || state.degree() != k_ || state.mesh().Nx != Nx) {
    throw InvalidArgument("VlasovOperator: state shape does not match the operator");
  }
  const double alpha = state.alpha();
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw NumericalFailure("rhs: invalid alpha", state.t, -1, -1);
  }

  ElectricField E = solve_poisson(state.modes[0]);
  if (!std::isfinite(E.Einf)) {
    throw NumericalFailure("rhs: non-finite electric field", state.t, 0, -1);
  }
  const double arate = alpha_rate(state.scaling, E.Einf);
  const double ratio = arate / alpha;
  const double inv_alpha = 1.0 / alpha;

  // Field at the volume quadrature nodes, cell-major.
  std::vector<double> e_q(static_cast<std::size_t>(Nx) * nq_, 0.0);
  if (options_.field_force) {
    for (int j = 0; j < Nx; ++j) {
      const auto ec = E.field.cell(j);
      for (int q = 0; q < nq_; ++q) {
        double s = 0.0;
        for (int m = 0; m <= K; ++m) {
          s += ec[m] * efield_q_[q * (K + 1) + m];
        }
        e_q[j * nq_ + q] = s;
      }
    }
  }

  if (dmodes.size() != static_cast<std::size_t>(N)) {
    dmodes.assign(static_cast<std::size_t>(N), DGField(mesh_, k_));
  }

  std::vector<double> g(static_cast<std::size_t>(Nx) * K);
  std::vector<double> g_right(Nx), g_left(Nx), c_right(Nx), c_left(Nx);
  std::vector<double> ghat(static_cast<std::size_t>(Nx) + 1);
  const auto& h = mesh_->h;

  for (int n = 0; n < N; ++n) {
    const double dn = static_cast<double>(n);
    const double* cn = state.modes[n].coeffs().data();
    const double* cm1 = n >= 1 ? state.modes[n - 1].coeffs().data() : nullptr;
    const double* cm2 = n >= 2 ? state.modes[n - 2].coeffs().data() : nullptr;
    const double* cp1 = n + 1 < N ? state.modes[n + 1].coeffs().data() : nullptr;
    const double s_lo = std::sqrt(dn) * inv_alpha;
    const double s_hi = std::sqrt(dn + 1.0) * inv_alpha;
    const std::size_t total = static_cast<std::size_t>(Nx) * K;
    for (std::size_t i = 0; i < total; ++i) {
      double v = 0.0;
      if (cm1) v += s_lo * cm1[i];
      if (cp1) v += s_hi * cp1[i];
      g[i] = v;
    }
    for (int j = 0; j < Nx; ++j) {
      double gr = 0.0, gl = 0.0, cr = 0.0, cl = 0.0;
      for (int m = 0; m < K; ++m) {
        gr += g[j * K + m] * phi_right_[m];
        gl += g[j * K + m] * phi_left_[m];
        cr += cn[j * K + m] * phi_right_[m];
        cl += cn[j * K + m] * phi_left_[m];
      }
      g_right[j] = gr;
      g_left[j] = gl;
      c_right[j] = cr;
      c_left[j] = cl;
    }
    // ghat[e] lives on the left edge of cell e; ghat[Nx] wraps to ghat[0].
    const double nu_n = flux_.nu[n];
    for (int e = 0; e < Nx; ++e) {
      const int left = e == 0 ? Nx - 1 : e - 1;
      ghat[e] = numerical_flux(g_right[left], g_left[e], c_right[left], c_left[e], nu_n, alpha);
    }
    ghat[Nx] = ghat[0];

    const double src_diag = ratio * dn;
    const double src_lower = n >= 2 ? ratio * std::sqrt(dn * (dn - 1.0)) : 0.0;
    const double force = alpha * std::sqrt(dn);
    double* out = dmodes[n].coeffs().data();
    for (int j = 0; j < Nx; ++j) {
      const double scale = 2.0 / h[j];
      const double* gj = g.data() + j * K;
      double* oj = out + j * K;
      for (int m = 0; m < K; ++m) {
        double vol = 0.0;
        for (int l = 0; l < K; ++l) {
          vol += gj[l] * dmat_[l * K + m];
        }
        const double surf = -ghat[j + 1] * phi_right_[m] + ghat[j] * phi_left_[m];
        double src = src_diag * cn[j * K + m];
        if (cm2) src += src_lower * cm2[j * K + m];
        oj[m] = scale * (vol + surf) + src;
      }
      if (cm1 && options_.field_force && n >= 1) {
        const double* c1 = cm1 + j * K;
        for (int q = 0; q < nq_; ++q) {
          const double* bq = basis_q_.data() + q * K;
          double cval = 0.0;
          for (int m = 0; m < K; ++m) {
            cval += c1[m] * bq[m];
          }
          const double w = force * qweights_[q] * e_q[j * nq_ + q] * cval;
          for (int m = 0; m < K; ++m) {
            oj[m] += w * bq[m];
          }
        }
      }
    }
    for (int j = 0; j < Nx; ++j) {
      for (int m = 0; m < K; ++m) {
        if (!std::isfinite(out[j * K + m])) {
          throw NumericalFailure("rhs: non-finite mode derivative", state.t, n, j);
        }
      }
    }
  }

  if (E_out) {
    *E_out = std::move(E);
  }
  return arate;
}

RhsResult rhs(const KineticState& state, const FluxSpec& flux, RhsOptions options) {
  state.validate();
  VlasovOperator op(state.mesh_ptr(), state.degree(), state.N(), flux, options);
  RhsResult result;
  result.alpha_rate = op.apply(state, result.dmodes, &result.E);
  return result;
}

}  // namespace hdg
