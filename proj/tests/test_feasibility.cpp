#include "oracles.hpp"

#include "quadrics/feasibility.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace quadrics;

TEST(Feasibility, SimpleSystems) {
  MatrixQ a(1, 2);
  a << Rational(1), Rational(1);
  LinearSystem sys(a, VectorQ::Constant(1, Rational(1)));
  EXPECT_TRUE(feasible(sys));
  sys.rhs(0) = -1;
  EXPECT_FALSE(feasible(sys));
  sys.bounds = {Bound::Free, Bound::Zero};
  EXPECT_TRUE(feasible(sys));
  const auto x = find_feasible_point(sys);
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)(0), Rational(-1));
  EXPECT_EQ((*x)(1), Rational(0));
}

TEST(Feasibility, PointsSatisfyTheSystem) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-4, 4), bound(0, 5);
  int feasible_count = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = 1 + trial % 3, cols = 1 + trial % 5;
    LinearSystem sys(MatrixQ(rows, cols), VectorQ(rows));
    sys.bounds.clear();
    for (int i = 0; i < rows; ++i) {
      sys.rhs(i) = entry(rng);
      for (int j = 0; j < cols; ++j) sys.equations(i, j) = Rational(entry(rng), 1 + bound(rng) % 2);
    }
    for (int j = 0; j < cols; ++j) {
      const int b = bound(rng);
      sys.bounds.push_back(b == 0 ? Bound::Free : b == 1 ? Bound::Zero : Bound::NonNegative);
    }
    const auto x = find_feasible_point(sys);
    ASSERT_EQ(x.has_value(), oracle::feasible(sys)) << "trial " << trial;
    if (!x) continue;
    ++feasible_count;
    EXPECT_EQ(sys.equations * *x, sys.rhs);
    for (int j = 0; j < cols; ++j) {
      if (sys.bounds[static_cast<std::size_t>(j)] == Bound::Zero) {
        EXPECT_EQ((*x)(j), 0);
      }
      if (sys.bounds[static_cast<std::size_t>(j)] == Bound::NonNegative) {
        EXPECT_GE((*x)(j), 0);
      }
    }
  }
  EXPECT_GT(feasible_count, 30);
}

TEST(Feasibility, OriginInHullAgreesWithCaratheodory) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + trial % 3, m = 1 + trial % 5;
    std::vector<VectorQ> vs;
    for (int i = 0; i < m; ++i) {
      VectorQ v(k);
      for (int r = 0; r < k; ++r) v(r) = entry(rng);
      vs.push_back(v);
    }
    EXPECT_EQ(origin_in_convex_hull(vs), oracle::hull_contains_origin(vs)) << trial;
  }
}

TEST(Feasibility, FacesAgreeWithBruteForce) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 2 + trial % 2;
    const Configuration cfg = oracle::random_configuration(rng, k, k + 3, 4);
    for (Subset face = 0; face < (Subset{1} << cfg.n()); ++face) {
      const auto point = point_in_face(cfg, face);
      ASSERT_EQ(point.has_value(), oracle::face_nonempty(cfg, face));
      if (!point) continue;
      EXPECT_TRUE((cfg.lambdas() * *point).isZero());
      EXPECT_EQ(point->sum(), Rational(1));
      for (int i : members(face)) EXPECT_EQ((*point)(i), 0);
    }
  }
}
