// Copyright 2026 The ptlab Authors.
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

#include "ptlab/lp.hpp"

#include <gtest/gtest.h>

#include <random>

namespace ptlab {
namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

TEST(Solve, ContradictoryBoundsAreInfeasible) {
  LinearProgram lp;
  const int x = lp.add_variable("x");
  lp.add_constraint({{x, q(1)}}, Relation::kGe, q(1), "lower");
  lp.add_constraint({{x, q(1)}}, Relation::kLe, q(0), "upper");
  const LpVerdict v = solve(lp);
  ASSERT_EQ(v.status, LpStatus::kInfeasible);
  EXPECT_TRUE(is_farkas_certificate(lp, v.multipliers));
  EXPECT_LT(v.multipliers[0], 0);
  EXPECT_GT(v.multipliers[1], 0);
}

TEST(Solve, BoxedMaximum) {
  LinearProgram lp;
  const int x = lp.add_variable("x");
  lp.add_constraint({{x, q(1)}}, Relation::kLe, q(3, 4));
  lp.set_objective({{x, q(1)}}, Sense::kMaximize);
  const LpVerdict v = solve(lp);
  ASSERT_EQ(v.status, LpStatus::kOptimal);
  EXPECT_EQ(v.value, q(3, 4));
  EXPECT_EQ(v.point[0], q(3, 4));
  EXPECT_EQ(v.multipliers[0], q(1));
}

TEST(Solve, FeasibilityWithoutObjective) {
  LinearProgram lp;
  const int x = lp.add_variable("x"), y = lp.add_variable("y");
  lp.add_constraint({{x, q(1)}, {y, q(1)}}, Relation::kEq, q(1));
  lp.add_constraint({{x, q(1)}, {y, q(-1)}}, Relation::kGe, q(1, 2));
  const LpVerdict v = solve(lp);
  ASSERT_EQ(v.status, LpStatus::kFeasible);
  EXPECT_TRUE(is_feasible_point(lp, v.point));
}

TEST(Solve, UnboundedRay) {
  LinearProgram lp;
  const int x = lp.add_variable("x"), y = lp.add_variable("y");
  lp.add_constraint({{x, q(1)}, {y, q(-1)}}, Relation::kLe, q(1));
  lp.set_objective({{x, q(1)}}, Sense::kMaximize);
  const LpVerdict v = solve(lp);
  ASSERT_EQ(v.status, LpStatus::kUnbounded);
  EXPECT_TRUE(is_improving_ray(lp, v.ray));
}

TEST(Solve, MinimizeWithNegativeRhs) {
  LinearProgram lp;
  const int x = lp.add_variable("x"), y = lp.add_variable("y");
  lp.add_constraint({{x, q(-1)}, {y, q(-2)}}, Relation::kLe, q(-4));  // x + 2y >= 4
  lp.add_constraint({{x, q(3)}, {y, q(1)}}, Relation::kGe, q(3));
  lp.set_objective({{x, q(2)}, {y, q(3)}}, Sense::kMinimize);
  const LpVerdict v = solve(lp);
  ASSERT_EQ(v.status, LpStatus::kOptimal);
  EXPECT_EQ(v.value, q(31, 5));  // vertex (2/5, 9/5)
  EXPECT_TRUE(verify(lp, v));
}

// Classic degenerate example on which the textbook pivot rule cycles.
TEST(Solve, DegenerateExampleTerminates) {
  LinearProgram lp;
  for (int i = 0; i < 4; ++i) lp.add_variable("x" + std::to_string(i + 4));
  lp.add_constraint({{0, q(1, 4)}, {1, q(-8)}, {2, q(-1)}, {3, q(9)}}, Relation::kLe, q(0));
  lp.add_constraint({{0, q(1, 2)}, {1, q(-12)}, {2, q(-1, 2)}, {3, q(3)}}, Relation::kLe, q(0));
  lp.add_constraint({{2, q(1)}}, Relation::kLe, q(1));
  lp.set_objective({{0, q(-3, 4)}, {1, q(20)}, {2, q(-1, 2)}, {3, q(6)}}, Sense::kMinimize);
  const LpVerdict v = solve(lp);
  ASSERT_EQ(v.status, LpStatus::kOptimal);
  EXPECT_EQ(v.value, q(-5, 4));
}

TEST(Solve, RejectsOversizedTableau) {
  LinearProgram lp;
  for (int i = 0; i < 2100; ++i) lp.add_variable("v");
  for (int i = 0; i < 2100; ++i) lp.add_constraint({{i, q(1)}}, Relation::kEq, q(1));
  try {
    solve(lp);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSpaceTooLarge);
  }
}

TEST(Certificates, RejectForgeries) {
  LinearProgram lp;
  const int x = lp.add_variable("x");
  lp.add_constraint({{x, q(1)}}, Relation::kGe, q(1));
  lp.add_constraint({{x, q(1)}}, Relation::kLe, q(0));
  EXPECT_FALSE(is_farkas_certificate(lp, {q(1), q(1)}));   // wrong sign on the >= row
  EXPECT_FALSE(is_farkas_certificate(lp, {q(0), q(0)}));   // y.b = 0
  EXPECT_TRUE(is_farkas_certificate(lp, {q(-2), q(2)}));
  EXPECT_FALSE(is_feasible_point(lp, {q(1, 2)}));
  EXPECT_FALSE(verify(lp, LpVerdict{LpStatus::kFeasible, {q(0)}, q(0), {}, {}}));
}

TEST(TextFormat, RoundTrip) {
  LinearProgram lp;
  const int x = lp.add_variable("p[00]"), y = lp.add_variable("p[11]");
  lp.add_constraint({{x, q(1)}, {y, q(1)}}, Relation::kEq, q(1), "norm");
  lp.add_constraint({{x, q(-3, 7)}}, Relation::kGe, q(-1, 2));
  lp.set_objective({{y, q(2)}}, Sense::kMinimize);
  const std::string text = export_lp(lp);
  const LinearProgram back = import_lp(text);
  EXPECT_EQ(export_lp(back), text);
  EXPECT_EQ(solve(back).value, solve(lp).value);
  EXPECT_THROW(import_lp("constraint c ~ 1 1 0\n"), Error);
  EXPECT_THROW(import_lp("frobnicate\n"), Error);
}

TEST(VerdictJson, Shape) {
  LinearProgram lp;
  const int x = lp.add_variable("x");
  lp.add_constraint({{x, q(1)}}, Relation::kLe, q(3, 4));
  lp.set_objective({{x, q(1)}}, Sense::kMaximize);
  const Json j = verdict_to_json(solve(lp));
  EXPECT_EQ(j["status"], "Optimal");
  EXPECT_EQ(j["value"], "3/4");
}

// ---------------------------------------------------------------------------
// Cross-check against exhaustive vertex enumeration on small random LPs.

// Solves the square system exactly; nullopt if singular.
std::optional<std::vector<Rational>> gauss(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(a[piv][c]) == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Best objective over vertices, or nullopt if there are none (infeasible,
// since the nonnegativity bounds make every nonempty region pointed).
std::optional<Rational> best_vertex(const LinearProgram& lp) {
  const int n = lp.variable_count();
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const auto& c : lp.constraints()) {
    std::vector<Rational> r(static_cast<std::size_t>(n));
    for (const auto& [v, k] : c.terms) r[v] += k;
    rows.push_back(r);
    rhs.push_back(c.rhs);
  }
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> r(static_cast<std::size_t>(n));
    r[j] = 1;
    rows.push_back(r);
    rhs.push_back(0);
  }
  std::optional<Rational> best;
  const int total = static_cast<int>(rows.size());
  const Rational s = lp.objective()->sense == Sense::kMaximize ? Rational(1) : Rational(-1);
  for (unsigned mask = 0; mask < (1u << total); ++mask) {
    if (__builtin_popcount(mask) != n) continue;
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (int i = 0; i < total; ++i) {
      if (mask & (1u << i)) {
        a.push_back(rows[i]);
        b.push_back(rhs[i]);
      }
    }
    const auto x = gauss(a, b);
    if (!x || !is_feasible_point(lp, *x)) continue;
    Rational val;
    for (const auto& [v, k] : lp.objective()->terms) val += k * (*x)[v];
    if (!best || s * val > s * *best) best = val;
  }
  return best;
}

TEST(SolveProperties, AgreesWithVertexEnumeration) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> coef(-4, 4), rhs(-3, 6), den(1, 3);
  int optimal = 0, infeasible = 0, unbounded = 0;
  for (int trial = 0; trial < 400; ++trial) {
    LinearProgram lp;
    const int n = std::uniform_int_distribution<int>(1, 3)(rng);
    const int m = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int j = 0; j < n; ++j) lp.add_variable("x" + std::to_string(j));
    for (int i = 0; i < m; ++i) {
      SparseRow r;
      for (int j = 0; j < n; ++j) {
        const long c = coef(rng);
        if (c != 0) r.emplace_back(j, q(c, den(rng)));
      }
      const Relation rel = static_cast<Relation>(std::uniform_int_distribution<int>(0, 2)(rng));
      lp.add_constraint(std::move(r), rel, q(rhs(rng), den(rng)));
    }
    SparseRow obj;
    for (int j = 0; j < n; ++j) obj.emplace_back(j, q(coef(rng)));
    lp.set_objective(std::move(obj), trial % 2 ? Sense::kMaximize : Sense::kMinimize);

    const LpVerdict v = solve(lp);
    ASSERT_TRUE(verify(lp, v));
    const auto best = best_vertex(lp);
    switch (v.status) {
      case LpStatus::kOptimal:
        ++optimal;
        ASSERT_TRUE(best.has_value());
        ASSERT_EQ(v.value, *best) << export_lp(lp);
        break;
      case LpStatus::kInfeasible:
        ++infeasible;
        ASSERT_FALSE(best.has_value()) << export_lp(lp);
        break;
      case LpStatus::kUnbounded:
        ++unbounded;
        ASSERT_TRUE(best.has_value());
        break;
      case LpStatus::kFeasible:
        FAIL() << "objective present but verdict is Feasible";
    }
  }
  EXPECT_GT(optimal, 50);
  EXPECT_GT(infeasible, 20);
  EXPECT_GT(unbounded, 10);
}

}  // namespace
}  // namespace ptlab
