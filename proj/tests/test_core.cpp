#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "basiclab/core.hpp"
#include "basiclab/errors.hpp"

using namespace basiclab;

TEST_CASE("voxel adjacency recognizes single-axis unit steps") {
  const GridShape shape{2, 4};
  CHECK(voxel_adjacency({1, 1}, {2, 1}, shape) == 1);
  CHECK(voxel_adjacency({2, 3}, {2, 2}, shape) == 2);
  CHECK_FALSE(voxel_adjacency({1, 1}, {2, 2}, shape).has_value());
  CHECK_FALSE(voxel_adjacency({1, 1}, {1, 1}, shape).has_value());
  CHECK_FALSE(voxel_adjacency({1, 1}, {3, 1}, GridShape{2, 4}).has_value());
  CHECK_THROWS_AS(voxel_adjacency({1}, {2, 1}, shape), InvalidInput);
}

TEST_CASE("xi selects the shared coordinate by parity") {
  CHECK(xi(1, 1) == 1);
  CHECK(xi(2, 2) == 4);
  CHECK(xi(3, 5) == 5);
  for (int t = 1; t <= 4; ++t)
    for (int i_t = 1; i_t <= 9; ++i_t) {
      const int c = xi(t, i_t);
      CHECK((c == 2 * t - 1 || c == 2 * t));
      CHECK((c == 2 * t - 1) == (i_t % 2 == 1));
    }
}

TEST_CASE("parity_sign") {
  CHECK(parity_sign({1}) == -1);
  CHECK(parity_sign({1, 1}) == +1);
  CHECK(parity_sign({2, 3, 4}) == -1);
}

TEST_CASE("adjacent voxels have opposite parity") {
  const GridShape shape{2, 4};
  for (std::uint64_t a = 0; a < shape.voxel_count(); ++a)
    for (std::uint64_t b = 0; b < shape.voxel_count(); ++b) {
      const Voxel i = lex_unrank(a, shape);
      const Voxel j = lex_unrank(b, shape);
      if (voxel_adjacency(i, j, shape))
        CHECK(parity_sign(i) * parity_sign(j) == -1);
    }
}

TEST_CASE("lex rank basics") {
  const GridShape shape{2, 4};
  CHECK(lex_rank({1, 1}, shape) == 0);
  CHECK(lex_rank({1, 2}, shape) == 1);  // last axis fastest
  CHECK(lex_unrank(5, shape) == Voxel{2, 2});
  CHECK_THROWS_AS(lex_unrank(16, shape), InvalidInput);
}

TEST_CASE("lex_unrank inverts lex_rank exhaustively for m,n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 5; ++m) {
      const GridShape shape{n, m};
      for (std::uint64_t r = 0; r < shape.voxel_count(); ++r)
        CHECK(lex_rank(lex_unrank(r, shape), shape) == r);
    }
}

TEST_CASE("project returns sorted distinct coordinates") {
  PointSet X{2, {{0, 0}, {0, 1}, {1, 1}}};
  CHECK(project(X, 1) == std::vector<double>{0, 1});
  CHECK(project(X, 2) == std::vector<double>{0, 1});
  PointSet empty{1, {}};
  CHECK(project(empty, 1).empty());
}

TEST_CASE("project merges within tolerance") {
  PointSet X{1, {{0.0}, {1e-7}, {1.0}}, 1e-6};
  CHECK(project(X, 1).size() == 2);
}

TEST_CASE("min_pairwise_distance") {
  CHECK(min_pairwise_distance({2, {{0, 0}, {3, 4}}}) == doctest::Approx(5.0));
  CHECK(min_pairwise_distance({2, {{0, 0}, {0, 1}, {1, 1}}}) ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS(min_pairwise_distance({2, {{0, 0}}}), InvalidInput);
  CHECK_THROWS_AS(min_pairwise_distance({2, {{0, 0}, {0, 0}}}),
                  DegenerateInput);
}

TEST_CASE("min_pairwise_distance on the 4-cube vertices (brute force)") {
  PointSet X{4, {}};
  for (int bits = 0; bits < 16; ++bits)
    X.points.push_back({double(bits & 1), double((bits >> 1) & 1),
                        double((bits >> 2) & 1), double((bits >> 3) & 1)});
  double brute = 1e18;
  int pairs = 0;
  for (std::size_t a = 0; a < X.points.size(); ++a)
    for (std::size_t b = a + 1; b < X.points.size(); ++b) {
      brute = std::min(brute, euclidean_distance(X.points[a], X.points[b]));
      ++pairs;
    }
  CHECK(pairs == 120);
  CHECK(brute == doctest::Approx(1.0));
  CHECK(min_pairwise_distance(X) == doctest::Approx(brute));
}
