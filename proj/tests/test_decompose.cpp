#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "basiclab/arrays.hpp"
#include "basiclab/decompose.hpp"
#include "basiclab/errors.hpp"
#include "basiclab/simplex.hpp"
#include "helpers.hpp"

using namespace basiclab;

namespace {

std::vector<double> alternating(std::size_t count) {
  std::vector<double> f(count);
  for (std::size_t i = 0; i < count; ++i) f[i] = (i % 2 == 0) ? 1.0 : -1.0;
  return f;
}

}  // namespace

TEST_CASE("simplex solves a textbook LP") {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6, x,y >= 0; optimum 2.8 at
  // (1.6, 1.2). Standard form: minimize -x - y with slacks.
  std::vector<std::vector<double>> A = {{1, 2, 1, 0}, {3, 1, 0, 1}};
  std::vector<double> b = {4, 6};
  std::vector<double> c = {-1, -1, 0, 0};
  const LpSolution sol = solve_standard_form(A, b, c);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(-2.8));
  CHECK(sol.x[0] == doctest::Approx(1.6));
  CHECK(sol.x[1] == doctest::Approx(1.2));
}

TEST_CASE("simplex detects infeasibility and unboundedness") {
  SUBCASE("x = -1, x >= 0 is infeasible") {
    const LpSolution sol = solve_standard_form({{1}}, {-1}, {0});
    CHECK(sol.status == LpStatus::Infeasible);
  }
  SUBCASE("minimize -x s.t. x - s = 0 is unbounded") {
    const LpSolution sol = solve_standard_form({{1, -1}}, {0}, {-1, 0});
    CHECK(sol.status == LpStatus::Unbounded);
  }
}

TEST_CASE("build_incidence column layout") {
  PointSet X{2, {{1, 2}, {1, 3}, {4, 2}}};
  const IncidenceSystem sys = build_incidence(X, {1, 2, 3});
  // Axis 1 values {1, 4}, axis 2 values {2, 3}, axis-major ascending.
  REQUIRE(sys.columns.size() == 4);
  CHECK(sys.columns[0] == std::pair<int, double>{1, 1.0});
  CHECK(sys.columns[1] == std::pair<int, double>{1, 4.0});
  CHECK(sys.columns[2] == std::pair<int, double>{2, 2.0});
  CHECK(sys.columns[3] == std::pair<int, double>{2, 3.0});
  CHECK(sys.row_columns[0] == std::vector<int>{0, 2});
  CHECK(sys.row_columns[1] == std::vector<int>{0, 3});
  CHECK(sys.row_columns[2] == std::vector<int>{1, 2});
  CHECK(sys.rhs == std::vector<double>{1, 2, 3});
}

TEST_CASE("solve_exact on the 4-point zigzag") {
  const SternfeldArray z = gen_plane_zigzag(4);
  PointSet X{2, z.points};
  const auto family = solve_exact(X, alternating(4));
  REQUIRE(family.has_value());
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(family->evaluate(X.points[i]) ==
          doctest::Approx(i % 2 == 0 ? 1.0 : -1.0));
}

TEST_CASE("solve_exact rejects the alternating 4-cycle") {
  PointSet X{2, {{0, 0}, {0, 1}, {1, 1}, {1, 0}}};
  CHECK_FALSE(solve_exact(X, alternating(4)).has_value());
}

TEST_CASE("min_supnorm: zigzag minimax values") {
  SUBCASE("m = 4 gives 2") {
    const SternfeldArray z = gen_plane_zigzag(4);
    PointSet X{2, z.points};
    const MinimaxOutcome out = min_supnorm(X, alternating(4));
    REQUIRE(out.status == MinimaxOutcome::Status::Optimal);
    CHECK(out.value == doctest::Approx(2.0));
    REQUIRE(out.family.has_value());
    CHECK(out.family->norm() == doctest::Approx(2.0));
    for (std::size_t i = 0; i < 4; ++i)
      CHECK(out.family->evaluate(X.points[i]) ==
            doctest::Approx(i % 2 == 0 ? 1.0 : -1.0));
  }
  SUBCASE("m = 8 gives 4") {
    const SternfeldArray z = gen_plane_zigzag(8);
    PointSet X{2, z.points};
    const MinimaxOutcome out = min_supnorm(X, alternating(8));
    REQUIRE(out.status == MinimaxOutcome::Status::Optimal);
    CHECK(out.value == doctest::Approx(4.0));
  }
  SUBCASE("general m gives m/2") {
    for (int m = 2; m <= 12; m += 2) {
      const SternfeldArray z = gen_plane_zigzag(m);
      PointSet X{2, z.points};
      const MinimaxOutcome out =
          min_supnorm(X, alternating(static_cast<std::size_t>(m)));
      REQUIRE(out.status == MinimaxOutcome::Status::Optimal);
      CHECK(out.value == doctest::Approx(m / 2.0));
    }
  }
}

TEST_CASE("min_supnorm: the alternating 4-cycle is infeasible") {
  PointSet X{2, {{0, 0}, {0, 1}, {1, 1}, {1, 0}}};
  const MinimaxOutcome out = min_supnorm(X, alternating(4));
  CHECK(out.status == MinimaxOutcome::Status::Infeasible);
}

TEST_CASE("min_supnorm on the empty set is trivially optimal") {
  PointSet X{2, {}};
  const MinimaxOutcome out = min_supnorm(X, {});
  CHECK(out.status == MinimaxOutcome::Status::Optimal);
  CHECK(out.value == 0.0);
}

TEST_CASE("min_supnorm agrees with solve_exact feasibility on random sets") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const PointSet X = testing::random_grid_pointset(8, 3, rng);
    std::vector<double> f(X.points.size());
    for (double& v : f)
      v = std::uniform_real_distribution<double>(-2, 2)(rng);
    const bool exact = solve_exact(X, f).has_value();
    const MinimaxOutcome out = min_supnorm(X, f);
    CHECK(exact == (out.status == MinimaxOutcome::Status::Optimal));
    if (out.status == MinimaxOutcome::Status::Optimal) {
      REQUIRE(out.family.has_value());
      CHECK(out.family->norm() <= out.value + 1e-7);
      for (std::size_t i = 0; i < X.points.size(); ++i)
        CHECK(out.family->evaluate(X.points[i]) ==
              doctest::Approx(f[i]).epsilon(1e-6));
    }
  }
}

TEST_CASE("extend picks the nearest key, ties toward the smaller") {
  CoordinateFunctionFamily fam;
  fam.axes.push_back(AxisTable{{{0.0, 5.0}, {2.0, -3.0}}});
  CHECK(extend(fam, 1, 0.0) == 5.0);
  CHECK(extend(fam, 1, 0.9) == 5.0);
  CHECK(extend(fam, 1, 1.0) == 5.0);   // tie -> smaller key
  CHECK(extend(fam, 1, 1.1) == -3.0);
  CHECK(extend(fam, 1, 100.0) == -3.0);
}

TEST_CASE("e_step removes points with singleton fibers") {
  // A 3-point path: (0,0)-(0,1)-(1,1). The x-fiber of (1,1) and the
  // y-fiber of (0,0) are singletons, so one step leaves only (0,1).
  PointSet X{2, {{0, 0}, {0, 1}, {1, 1}}};
  const PointSet Y1 = e_step(X);
  CHECK(Y1.points == std::vector<Point>{{0, 1}});
  const ETrace tr = e_iterate(X);
  CHECK(tr.empties);
  CHECK(tr.stages.back().empty());
}

TEST_CASE("e_iterate on the 4-cycle reaches a nonempty fixpoint") {
  PointSet X{2, {{0, 0}, {0, 1}, {1, 1}, {1, 0}}};
  const ETrace tr = e_iterate(X);
  CHECK_FALSE(tr.empties);
  CHECK(tr.stages[tr.l].size() == 4);  // the cycle survives untouched
  CHECK(tr.l == 0);
}

TEST_CASE("is_forest matches e_iterate emptiness on random plane sets") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const PointSet X = testing::random_grid_pointset(9, 4, rng);
    CHECK(is_forest(X) == e_iterate(X).empties);
  }
}

TEST_CASE("zigzags are forests, products of two zigzags empty out") {
  for (int m = 2; m <= 10; ++m) {
    const SternfeldArray z = gen_plane_zigzag(m);
    PointSet X{2, z.points};
    CHECK(is_forest(X));
    CHECK(e_iterate(X).empties);
  }
}
