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

#include "hdg/dg_mesh.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hdg/errors.hpp"

namespace hdg {

double Mesh1D::wrap(double x) const {
  double y = std::fmod(x, L);
  if (y < 0.0) {
    y += L;
  }
  if (y >= L) {
    y = 0.0;
  }
  return y;
}

int Mesh1D::locate(double x) const {
  const double y = wrap(x);
  // upper_bound finds the first edge strictly greater than y.
  auto it = std::upper_bound(edges.begin(), edges.end(), y);
  int j = static_cast<int>(it - edges.begin()) - 1;
  return std::clamp(j, 0, Nx - 1);
}

double Mesh1D::to_reference(int j, double x) const {
  return 2.0 * (x - edges[j]) / h[j] - 1.0;
}

double Mesh1D::max_h() const { return *std::max_element(h.begin(), h.end()); }

bool Mesh1D::is_uniform(double rel_tol) const {
  const double h0 = L / Nx;
  return std::all_of(h.begin(), h.end(), [&](double hj) { return std::abs(hj - h0) <= rel_tol * h0; });
}

MeshPtr build_mesh(double L, int Nx) {
  if (!(L > 0.0) || Nx < 1) {
    throw InvalidArgument("build_mesh: need L > 0 and Nx >= 1");
  }
  auto mesh = std::make_shared<Mesh1D>();
  mesh->L = L;
  mesh->Nx = Nx;
  mesh->edges.resize(Nx + 1);
  for (int j = 0; j <= Nx; ++j) {
    mesh->edges[j] = L * static_cast<double>(j) / Nx;
  }
  mesh->edges[Nx] = L;
  mesh->h.assign(Nx, L / Nx);
  return mesh;
}

MeshPtr build_mesh_from_edges(std::vector<double> edges) {
  if (edges.size() < 2 || edges.front() != 0.0) {
    throw InvalidArgument("build_mesh_from_edges: need at least two edges starting at 0");
  }
  auto mesh = std::make_shared<Mesh1D>();
  mesh->Nx = static_cast<int>(edges.size()) - 1;
  mesh->L = edges.back();
  mesh->h.resize(mesh->Nx);
  for (int j = 0; j < mesh->Nx; ++j) {
    mesh->h[j] = edges[j + 1] - edges[j];
    if (!(mesh->h[j] > 0.0)) {
      throw InvalidArgument("build_mesh_from_edges: edges must increase strictly");
    }
  }
  mesh->edges = std::move(edges);
  return mesh;
}

void legendre_basis(double xi, std::span<double> out) {
  double p_prev = 0.0;
  double p = 1.0;
  for (std::size_t m = 0; m < out.size(); ++m) {
    out[m] = std::sqrt(m + 0.5) * p;
    const double next = ((2.0 * m + 1.0) * xi * p - m * p_prev) / (m + 1.0);
    p_prev = p;
    p = next;
  }
}

void legendre_basis_derivative(double xi, std::span<double> out) {
  // P'_{m+1} = P'_{m-1} + (2m+1) P_m.
  std::vector<double> p(out.size() + 1);
  {
    double p_prev = 0.0;
    double pc = 1.0;
    for (std::size_t m = 0; m < p.size(); ++m) {
      p[m] = pc;
      const double next = ((2.0 * m + 1.0) * xi * pc - m * p_prev) / (m + 1.0);
      p_prev = pc;
      pc = next;
    }
  }
  std::vector<double> dp(out.size(), 0.0);
  for (std::size_t m = 1; m < out.size(); ++m) {
    dp[m] = (m >= 2 ? dp[m - 2] : 0.0) + (2.0 * m - 1.0) * p[m - 1];
  }
  for (std::size_t m = 0; m < out.size(); ++m) {
    out[m] = std::sqrt(m + 0.5) * dp[m];
  }
}

double legendre_at(int m, double xi) {
  std::vector<double> b(static_cast<std::size_t>(m) + 1);
  legendre_basis(xi, b);
  return b[m];
}

DGField::DGField(MeshPtr mesh, int degree) : mesh_(std::move(mesh)), degree_(degree) {
  if (!mesh_) {
    throw InvalidArgument("DGField: null mesh");
  }
  if (degree < 0) {
    throw InvalidArgument("DGField: negative degree");
  }
  coeffs_.assign(static_cast<std::size_t>(mesh_->Nx) * (degree + 1), 0.0);
}

double DGField::eval_local(int j, double xi) const {
  // Clenshaw-free direct sum; degrees here are tiny.
  double p_prev = 0.0;
  double p = 1.0;
  double sum = 0.0;
  const auto c = cell(j);
  for (int m = 0; m <= degree_; ++m) {
    sum += c[m] * std::sqrt(m + 0.5) * p;
    const double next = ((2.0 * m + 1.0) * xi * p - m * p_prev) / (m + 1.0);
    p_prev = p;
    p = next;
  }
  return sum;
}

double DGField::eval(double x) const {
  const double y = mesh_->wrap(x);
  const int j = mesh_->locate(y);
  return eval_local(j, mesh_->to_reference(j, y));
}

double DGField::cell_integral(int j) const {
  // int phi_0 dxi = sqrt(2), dx = h/2 dxi.
  return (*this)(j, 0) * mesh_->h[j] / std::sqrt(2.0);
}

double DGField::integral() const {
  double s = 0.0;
  for (int j = 0; j < cells(); ++j) {
    s += cell_integral(j);
  }
  return s;
}

double DGField::l2_norm_squared() const {
  double s = 0.0;
  for (int j = 0; j < cells(); ++j) {
    double cj = 0.0;
    for (double c : cell(j)) {
      cj += c * c;
    }
    s += 0.5 * mesh_->h[j] * cj;
  }
  return s;
}

bool DGField::all_finite() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return std::isfinite(c); });
}

void DGField::fill_zero() { std::fill(coeffs_.begin(), coeffs_.end(), 0.0); }

std::pair<double, double> traces(const DGField& u, int edge) {
  const int Nx = u.cells();
  if (edge < 0 || edge > Nx) {
    throw InvalidArgument("traces: edge index " + std::to_string(edge) + " out of range");
  }
  const int left = (edge - 1 + Nx) % Nx;
  const int right = edge % Nx;
  return {u.right_trace(left), u.left_trace(right)};
}

double jump(const DGField& u, int edge) {
  const auto [minus, plus] = traces(u, edge);
  return plus - minus;
}

double average(const DGField& u, int edge) {
  const auto [minus, plus] = traces(u, edge);
  return 0.5 * (plus + minus);
}

DGField project_to_Xh(const std::function<double(double)>& g, const MeshPtr& mesh, int k,
                      const QuadRule& quad) {
  DGField u(mesh, k);
  std::vector<double> basis(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j < mesh->Nx; ++j) {
    auto c = u.cell(j);
    for (int q = 0; q < quad.size(); ++q) {
      const double xi = quad.nodes[q];
      const double x = mesh->edges[j] + 0.5 * (xi + 1.0) * mesh->h[j];
      const double gw = g(x) * quad.weights[q];
      legendre_basis(xi, basis);
      for (int m = 0; m <= k; ++m) {
        c[m] += gw * basis[m];
      }
    }
  }
  return u;
}

DGField project_to_Xh(const std::function<double(double)>& g, const MeshPtr& mesh, int k) {
  return project_to_Xh(g, mesh, k, gauss_legendre(k + 2));
}

double skeleton_norm(const DGField& u) {
  double s = 0.0;
  for (int e = 0; e < u.cells(); ++e) {
    const auto [minus, plus] = traces(u, e);
    s += minus * minus + plus * plus;
  }
  return std::sqrt(s);
}

}  // namespace hdg
