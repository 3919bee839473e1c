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

// Periodic 1D mesh and the modal discontinuous polynomial space on it.
//
// Each cell I_j = [x_{j-1/2}, x_{j+1/2}) is mapped affinely to [-1,1]; the
// local basis is the L2-orthonormal Legendre family
//   phi_m(xi) = sqrt((2m+1)/2) P_m(xi),
// so the cell mass matrix is (h_j / 2) I.

#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "hdg/quadrature.hpp"

namespace hdg {

struct Mesh1D {
  double L = 0.0;
  int Nx = 0;
  std::vector<double> edges;  // Nx + 1 increasing values, edges[0] = 0, edges[Nx] = L
  std::vector<double> h;      // cell lengths

  /// Periodic image of x in [0, L).
  double wrap(double x) const;
  /// Cell index containing x after periodic wrap; cells are half-open on the right.
  int locate(double x) const;
  /// Maps x (already wrapped into cell j) to the reference coordinate.
  double to_reference(int j, double x) const;
  double max_h() const;
  bool is_uniform(double rel_tol = 1e-12) const;
};

using MeshPtr = std::shared_ptr<const Mesh1D>;

/// Uniform periodic mesh of [0, L] with Nx cells.
MeshPtr build_mesh(double L, int Nx);
/// General periodic partition; edges must start at 0 and increase strictly.
MeshPtr build_mesh_from_edges(std::vector<double> edges);

/// phi_0(xi) ... phi_{out.size()-1}(xi).
void legendre_basis(double xi, std::span<double> out);
/// d phi_m / d xi for m = 0 ... out.size()-1.
void legendre_basis_derivative(double xi, std::span<double> out);
double legendre_at(int m, double xi);

/// Piecewise polynomial of fixed degree on a shared mesh, stored as per-cell
/// orthonormal-Legendre coefficients (row-major: cell, then mode).
class DGField {
public:
  DGField() = default;
  DGField(MeshPtr mesh, int degree);

  const Mesh1D& mesh() const { return *mesh_; }
  const MeshPtr& mesh_ptr() const { return mesh_; }
  int degree() const { return degree_; }
  int ndof() const { return degree_ + 1; }
  int cells() const { return mesh_->Nx; }

  std::span<double> cell(int j) {
    return {coeffs_.data() + static_cast<std::size_t>(j) * ndof(), static_cast<std::size_t>(ndof())};
  }
  std::span<const double> cell(int j) const {
    return {coeffs_.data() + static_cast<std::size_t>(j) * ndof(), static_cast<std::size_t>(ndof())};
  }
  double& operator()(int j, int m) { return coeffs_[static_cast<std::size_t>(j) * ndof() + m]; }
  double operator()(int j, int m) const { return coeffs_[static_cast<std::size_t>(j) * ndof() + m]; }

  std::vector<double>& coeffs() { return coeffs_; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  /// Value at physical x, wrapped periodically.
  double eval(double x) const;
  /// Value of the cell-j polynomial at reference coordinate xi.
  double eval_local(int j, double xi) const;
  double left_trace(int j) const { return eval_local(j, -1.0); }
  double right_trace(int j) const { return eval_local(j, 1.0); }

  double cell_integral(int j) const;
  double integral() const;
  /// int |u|^2 dx.
  double l2_norm_squared() const;
  bool all_finite() const;

  void fill_zero();

private:
  MeshPtr mesh_;
  int degree_ = 0;
  std::vector<double> coeffs_;
};

/// (u^-, u^+) at edge `edge` in [0, Nx]; edges 0 and Nx are the same point.
std::pair<double, double> traces(const DGField& u, int edge);
/// [u] = u^+ - u^-.
double jump(const DGField& u, int edge);
/// {u} = (u^+ + u^-) / 2.
double average(const DGField& u, int edge);

/// Cell-wise L2 projection of g onto degree-k polynomials using `quad`.
DGField project_to_Xh(const std::function<double(double)>& g, const MeshPtr& mesh, int k,
                      const QuadRule& quad);
/// Same with the default k + 2 point rule.
DGField project_to_Xh(const std::function<double(double)>& g, const MeshPtr& mesh, int k);

/// sqrt( sum over edges of |u^+|^2 + |u^-|^2 ).
double skeleton_norm(const DGField& u);

}  // namespace hdg
