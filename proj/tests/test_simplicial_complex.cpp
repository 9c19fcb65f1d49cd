#include "oracles.hpp"

#include "quadrics/cyclic.hpp"
#include "quadrics/simplicial_complex.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace quadrics;

namespace {

SimplicialComplex hollow_triangle() { return SimplicialComplex(3, {from_members({0, 1}), from_members({1, 2}), from_members({0, 2})}); }

SimplicialComplex octahedron() {
  // Antipodal pairs {0,1}, {2,3}, {4,5}; facets pick one vertex from each pair.
  std::vector<Subset> facets;
  for (int a : {0, 1}) {
    for (int b : {2, 3}) {
      for (int c : {4, 5}) facets.push_back(from_members({a, b, c}));
    }
  }
  return SimplicialComplex(6, facets);
}

// Six-vertex real projective plane.
SimplicialComplex projective_plane() {
  const int t[10][3] = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                        {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  std::vector<Subset> facets;
  for (const auto& f : t) facets.push_back(from_members({f[0], f[1], f[2]}));
  return SimplicialComplex(6, facets);
}

std::int64_t euler_from_faces(const SimplicialComplex& k) {
  // Reduced Euler characteristic sum_s (-1)^{s-1} f_s over faces with s vertices.
  const auto f = k.face_counts();
  std::int64_t chi = 0;
  for (std::size_t s = 0; s < f.size(); ++s) chi += (s % 2 == 1 ? 1 : -1) * f[s];
  return chi;
}

// Vertices 0..n-1 inside an ambient set with one spare index for cone apexes.
SimplicialComplex random_complex(std::mt19937& rng, int n) {
  std::uniform_int_distribution<Subset> pick(1, (Subset{1} << n) - 1);
  std::vector<Subset> gens;
  for (int i = 0; i < 2 + n; ++i) {
    Subset s = pick(rng);
    while (cardinality(s) > 4) s &= s - 1;
    gens.push_back(s);
  }
  return SimplicialComplex(n + 1, full_set(n), gens);
}

}  // namespace

TEST(SimplicialComplex, HollowTriangleIsACircle) {
  const auto h = reduced_homology(hollow_triangle());
  EXPECT_EQ(h, GradedGroup::free({0, 0, 1}, -1));
}

TEST(SimplicialComplex, OctahedronIsASphere) {
  const auto k = octahedron();
  EXPECT_EQ(k.face_counts(), (std::vector<std::int64_t>{1, 6, 12, 8}));
  EXPECT_EQ(reduced_homology(k), GradedGroup::free({0, 0, 0, 1}, -1));
}

TEST(SimplicialComplex, ProjectivePlaneHasTwoTorsion) {
  const auto h = reduced_homology(projective_plane());
  EXPECT_EQ(h.rank(1), 0);
  EXPECT_EQ(h.torsion(1), (std::vector<std::int64_t>{2}));
  EXPECT_TRUE(h.at(2).is_zero());
}

TEST(SimplicialComplex, VoidAndEmptyFace) {
  EXPECT_EQ(reduced_homology(SimplicialComplex::void_complex(3, full_set(3))), GradedGroup::free({1}, -1));
  EXPECT_EQ(reduced_homology(SimplicialComplex::empty_face_only(3, full_set(3))), GradedGroup::free({1}, -1));
  EXPECT_EQ(SimplicialComplex::void_complex(3, full_set(3)).dimension(), -2);
  EXPECT_EQ(SimplicialComplex::empty_face_only(3, full_set(3)).dimension(), -1);
}

TEST(SimplicialComplex, ConesAreAcyclic) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const auto k = random_complex(rng, 5);
    const auto c = cone(k, 5);
    EXPECT_TRUE(c.cone_apex().has_value());
    EXPECT_TRUE(reduced_homology(c).is_zero());
  }
}

TEST(SimplicialComplex, EulerCharacteristicMatchesFaceCounts) {
  std::mt19937 rng(10);
  for (int trial = 0; trial < 60; ++trial) {
    const auto k = random_complex(rng, 4 + trial % 4);
    EXPECT_EQ(reduced_homology(k).euler_characteristic(), euler_from_faces(k));
  }
}

TEST(SimplicialComplex, HomologyIsInvariantUnderRelabeling) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 6;
    const auto k = random_complex(rng, n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Subset> relabeled;
    for (Subset f : k.facets()) {
      Subset g = 0;
      for (int v : members(f)) g |= singleton(perm[static_cast<std::size_t>(v)]);
      relabeled.push_back(g);
    }
    EXPECT_EQ(reduced_homology(SimplicialComplex(n + 1, full_set(n), relabeled)), reduced_homology(k));
  }
}

TEST(SimplicialComplex, FullSubcomplexKeepsFacesInside) {
  const auto k = octahedron();
  const auto sub = k.full_subcomplex(from_members({0, 1, 2}));
  EXPECT_EQ(sub.facets(), (std::vector<Subset>{from_members({0, 2}), from_members({1, 2})}));
  EXPECT_EQ(sub, full_subcomplex(k, from_members({0, 1, 2})));
  const auto pair = k.full_subcomplex(from_members({0, 1}));
  EXPECT_EQ(reduced_homology(pair), GradedGroup::free({0, 1}, -1));
}

TEST(DualComplex, PentagonIsAFiveCycle) {
  const auto k = dual_complex(realize(CyclicPartition({1, 1, 1, 1, 1})));
  EXPECT_EQ(k.face_counts(), (std::vector<std::int64_t>{1, 5, 5}));
  EXPECT_EQ(reduced_homology(k), GradedGroup::free({0, 0, 1}, -1));
}

TEST(DualComplex, FacesAgreeWithBruteForce) {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 25; ++trial) {
    const int k = 2 + trial % 2;
    const Configuration cfg = oracle::random_valid_configuration(rng, k, k + 2 + trial % 4, 4);
    const auto dual = dual_complex(cfg);
    for (Subset face = 0; face < (Subset{1} << cfg.n()); ++face) {
      EXPECT_EQ(dual.contains(face), oracle::face_nonempty(cfg, face));
    }
  }
}

TEST(DualComplex, EmptyPolytopeGivesVoidComplex) {
  const Configuration cfg = Configuration::from_vectors({{1, 0}, {2, 1}, {1, 1}});
  EXPECT_TRUE(validate(cfg).ok);
  EXPECT_TRUE(dual_complex(cfg).is_void());
}
