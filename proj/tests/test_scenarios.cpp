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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hdg/diagnostics.hpp"
#include "hdg/scenarios.hpp"

using namespace hdg;

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs(const DGField& u) {
  double m = 0.0;
  for (double c : u.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace

TEST(Landau, UnperturbedIsPureGroundMode) {
  const MeshPtr m = build_mesh(4.0 * kPi, 8);
  const KineticState s = init_landau({0.0, 0.5}, m, 12, 2, 1.0, 1.0, 12.0);
  for (int j = 0; j < 8; ++j) {
    EXPECT_NEAR(s.modes[0](j, 0), std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(s.modes[0](j, 1), 0.0, 1e-14);
  }
  for (int n = 1; n < 12; ++n) EXPECT_LT(max_abs(s.modes[n]), 1e-14);
}

TEST(Landau, PerturbedDensity) {
  const double k = kPi / 6.0;
  const MeshPtr m = build_mesh(12.0, 64);
  const KineticState s = init_landau({0.01, k}, m, 16, 2, 1.0, 1.0, 12.0);
  double peak = 0.0;
  for (int i = 0; i <= 1200; ++i) peak = std::max(peak, s.modes[0].eval(12.0 * i / 1200.0));
  EXPECT_NEAR(peak, 1.01, 1e-6);
  for (int n = 1; n < 16; ++n) EXPECT_LT(max_abs(s.modes[n]), 1e-12);
}

TEST(Landau, WeightedNormWithRescaledBasis) {
  const MeshPtr m = build_mesh(4.0 * kPi, 32);
  const KineticState s = init_landau({0.01, 0.5}, m, 128, 3, 0.5, 1.0);
  const double w = weighted_l2(s);
  EXPECT_NEAR(w * w, 9.49975825795449708, 1e-8);  // oracle
  EXPECT_GT(max_abs(s.modes[2]), 1e-3);
  EXPECT_LT(max_abs(s.modes[3]), 1e-14);
}

TEST(BumpOnTail, MassAndDrift) {
  const MeshPtr m = build_mesh(62.0, 64);
  const KineticState s = init_bump_on_tail({}, m, 128, 2, 5.0 / 7.0, 0.01);
  const Moments mo = moments(s);
  EXPECT_NEAR(mo.mass / 62.0, 0.9999999999998709, 1e-11);  // oracle
  EXPECT_NEAR(mo.momentum / mo.mass, 0.449999999999025, 1e-10);  // oracle
}

TEST(BumpOnTail, UnperturbedIsUniform) {
  BumpOnTailParams p;
  p.kappa = 0.0;
  const MeshPtr m = build_mesh(62.0, 16);
  const KineticState s = init_bump_on_tail(p, m, 32, 2, 5.0 / 7.0, 0.01);
  EXPECT_NEAR(moments(s).mass, 62.0 * 0.9999999999998709, 1e-9);
  for (const auto& mode : s.modes) {
    for (int j = 0; j < 16; ++j) {
      EXPECT_NEAR(mode(j, 0), mode(0, 0), 1e-14);
      EXPECT_NEAR(mode(j, 1), 0.0, 1e-14);
      EXPECT_NEAR(mode(j, 2), 0.0, 1e-14);
    }
  }
}

TEST(BumpOnTail, SymmetricBulkHasNoOddModes) {
  BumpOnTailParams p;
  p.n_b = 0.0;
  const MeshPtr m = build_mesh(62.0, 8);
  const KineticState s = init_bump_on_tail(p, m, 24, 1, 1.0, 0.01, 14.0);
  for (int n = 1; n < 24; n += 2) EXPECT_LT(max_abs(s.modes[n]), 1e-12) << n;
  for (int n = 2; n < 24; n += 2) EXPECT_LT(max_abs(s.modes[n]), 1e-12) << n;
}

TEST(Custom, ExpressionMatchesLandau) {
  const MeshPtr m = build_mesh(4.0 * kPi, 8);
  const Expression f0 = Expression::parse("(1 + 0.01*cos(0.5*x)) * exp(-v^2/2) / sqrt(2*pi)");
  const KineticState a = init_custom(f0, m, 10, 2, 0.8, 1.0);
  const KineticState b = init_landau({0.01, 0.5}, m, 10, 2, 0.8, 1.0);
  for (int n = 0; n < 10; ++n)
    for (std::size_t i = 0; i < a.modes[n].coeffs().size(); ++i)
      EXPECT_NEAR(a.modes[n].coeffs()[i], b.modes[n].coeffs()[i], 1e-13);
}

TEST(Expression, ParsesAndEvaluates) {
  EXPECT_NEAR(Expression::parse("2^3^2")(0, 0), 512.0, 1e-12);
  EXPECT_NEAR(Expression::parse("-x*v + 3")(2, 4), -5.0, 1e-15);
  EXPECT_NEAR(Expression::parse("sin(pi/2) + abs(-e)")(0, 0), 1.0 + std::numbers::e, 1e-15);
  EXPECT_NEAR(Expression::parse("1e-3 * 2")(0, 0), 2e-3, 1e-18);
  EXPECT_ANY_THROW(Expression::parse("sin(x"));
  EXPECT_ANY_THROW(Expression::parse("foo(1)"));
  EXPECT_ANY_THROW(Expression::parse("1 +"));
}
