#include "oracles.hpp"

#include "quadrics/open_book.hpp"

#include <gtest/gtest.h>

using namespace quadrics;

namespace {

const CyclicPartition kPentagon({1, 1, 1, 1, 1});

}  // namespace

TEST(Exterior, Homology) {
  EXPECT_EQ(exterior_homology(1, 1, 6), GradedGroup::free({1, 0, 0, 1, 2, 0, 0}));
  EXPECT_EQ(exterior_homology(0, 0, 4), GradedGroup::free({1, 0, 0, 3}));
  EXPECT_THROW(exterior_homology(2, 3, 5), std::invalid_argument);
  EXPECT_THROW(exterior_homology(-1, 0, 3), std::invalid_argument);
  for (int m = 1; m < 10; ++m) {
    for (int p = 0; p + 1 < m; ++p) {
      for (int q = 0; p + q < m; ++q) {
        const GradedGroup e = exterior_homology(p, q, m);
        EXPECT_TRUE(e.torsion_free());
        // A compact m-manifold with boundary: chi(boundary) = (1 - (-1)^m) chi.
        const int t = m - p - q - 1;
        const std::int64_t chi_boundary =
            (p % 2 == 0 ? 2 : 0) * (q % 2 == 0 ? 2 : 0) * (t % 2 == 0 ? 2 : 0);
        EXPECT_EQ(chi_boundary, (m % 2 == 0 ? 0 : 2) * e.euler_characteristic()) << p << q << m;
      }
    }
  }
}

TEST(PageTopology, Examples) {
  const PageDescription pentagon = page_topology(kPentagon, 0, Field::Real);
  EXPECT_EQ(pentagon.page_case, PageCase::D);
  EXPECT_EQ(pentagon.symbolic(), "PP(1,1;2) #b E(0,0;2)");
  EXPECT_EQ(page_homology(pentagon), GradedGroup::free({1, 5}));
  EXPECT_TRUE(pentagon.hypotheses.conditional());

  const PageDescription d = page_topology(CyclicPartition({1, 2, 2, 2, 2}), 0, Field::Real);
  EXPECT_EQ(d.page_case, PageCase::D);
  EXPECT_EQ(d.symbolic(), "PP(3,3;6) #b E(1,1;6)");
  EXPECT_EQ(page_homology(d), GradedGroup::free({1, 0, 0, 3, 2, 0, 0}));

  const PageDescription a = page_topology(CyclicPartition({2, 2, 2}), 0, Field::Complex);
  EXPECT_EQ(a.page_case, PageCase::A);
  EXPECT_EQ(a.symbolic(), "S(3) x S(3) x D(2)");
  EXPECT_EQ(a.dimension, 8);
  EXPECT_FALSE(a.hypotheses.conditional());

  const PageDescription triangle = page_topology(CyclicPartition({1, 1, 1}), 0, Field::Complex);
  EXPECT_EQ(triangle.symbolic(), "S(1) x S(1) x D(0)");
  EXPECT_EQ(page_homology(triangle), GradedGroup::free({1, 2, 1}));

  const PageDescription complex_pentagon = page_topology(kPentagon, 0, Field::Complex);
  EXPECT_EQ(complex_pentagon.symbolic(), "PP(3,3;6) #b E(1,1;6)");
}

TEST(PageTopology, CaseWitnesses) {
  EXPECT_EQ(page_topology(CyclicPartition({2, 2, 2}), 0, Field::Complex).page_case, PageCase::A);
  EXPECT_EQ(page_topology(CyclicPartition({2, 1, 1, 1, 1}), 0, Field::Complex).page_case, PageCase::B);
  EXPECT_EQ(page_topology(CyclicPartition({1, 1, 1, 1, 1, 1, 1}), 0, Field::Complex).page_case, PageCase::C);
  EXPECT_EQ(page_topology(CyclicPartition({1, 2, 2, 2, 2}), 0, Field::Complex).page_case, PageCase::D);
}

TEST(PageTopology, CasesAreExclusiveAndPieceCountsMatch) {
  for (const auto& p : compositions(9)) {
    const PageDescription page = page_topology(p, 0, Field::Real);
    const int ell = p.ell();
    const PageCase expected = ell == 1             ? PageCase::A
                              : p.part(0) > 1       ? PageCase::B
                              : ell > 2             ? PageCase::C
                                                    : PageCase::D;
    EXPECT_EQ(page.page_case, expected) << p.to_string();
    if (page.page_case == PageCase::B) {
      EXPECT_EQ(page.pieces.size(), static_cast<std::size_t>(2 * ell + 1));
    }
    if (page.page_case == PageCase::C) {
      EXPECT_EQ(page.pieces.size(), static_cast<std::size_t>(2 * ell));
    }
    for (const auto& piece : page.pieces) EXPECT_EQ(piece.dimension(), page.dimension) << piece.symbolic();
  }
}

TEST(PageTopology, RotationMovesTheDistinguishedClass) {
  const CyclicPartition p({1, 2, 1, 1, 3});
  for (int c = 0; c < p.classes(); ++c) {
    const PageDescription rotated = page_topology(p, c, Field::Real);
    const PageDescription direct = page_topology(p.rotated(c), 0, Field::Real);
    EXPECT_EQ(rotated.pieces, direct.pieces);
    EXPECT_EQ(rotated.class_index, c);
  }
}

TEST(PageTopology, MatchesHalfManifoldHomology) {
  for (const auto& p : canonical_partitions(7)) {
    for (int c = 0; c < p.classes(); ++c) {
      EXPECT_EQ(page_homology(page_topology(p, c, Field::Real)), homology_Zplus(realize(p.rotated(c))))
          << p.to_string() << " class " << c;
      EXPECT_EQ(page_homology(page_topology(p, c, Field::Complex)),
                homology_Zplus(realize(complex_page_partition(p, c))))
          << p.to_string() << " class " << c;
    }
  }
}

TEST(OpenBook, RealPentagon) {
  const OpenBookStructure book = open_book_real(realize(kPentagon), 0, false);
  EXPECT_EQ(book.total.n(), 6);
  EXPECT_EQ(book.dimension(), 3);
  ASSERT_TRUE(book.binding);
  EXPECT_EQ(book.binding->dimension(), 1);
  EXPECT_EQ(homology_Z(*book.binding), GradedGroup::free({4, 4}));
  ASSERT_TRUE(book.page);
  EXPECT_EQ(book.page->page_case, PageCase::D);
  EXPECT_EQ(homology_Zplus(book.page_source), GradedGroup::free({1, 5}));
  EXPECT_EQ(book.monodromy, "trivial");
  EXPECT_TRUE(boundary_consistency(book).ok());
}

TEST(OpenBook, StrictModeNeedsAPartner) {
  EXPECT_THROW(open_book_real(realize(kPentagon), 0, true), std::invalid_argument);
  const Configuration doubled = duplicate_coordinate(realize(kPentagon), 2);
  const OpenBookStructure book = open_book_real(doubled, 3, true);
  EXPECT_EQ(book.total, doubled);
  EXPECT_TRUE(same_up_to_permutation(book.page_source, realize(kPentagon)));
}

TEST(OpenBook, RealTriangleHasEmptyBinding) {
  const OpenBookStructure book = open_book_real(realize(CyclicPartition({1, 1, 1})), 0, false);
  EXPECT_FALSE(book.binding);
  EXPECT_EQ(homology_Zplus(book.page_source), GradedGroup::free({4}));
  EXPECT_TRUE(boundary_consistency(book).ok());
}

TEST(OpenBook, ComplexTriangle) {
  const OpenBookStructure book = open_book_complex(realize(CyclicPartition({1, 1, 1})), 0);
  EXPECT_EQ(homology_Z(book.total), GradedGroup::free({1, 3, 3, 1}));
  EXPECT_FALSE(book.binding);
  ASSERT_TRUE(book.page);
  EXPECT_EQ(book.page->symbolic(), "S(1) x S(1) x D(0)");
  EXPECT_TRUE(boundary_consistency(book).ok());
}

TEST(OpenBook, ComplexPentagon) {
  const OpenBookStructure book = open_book_complex(realize(kPentagon), 0);
  ASSERT_TRUE(book.page);
  EXPECT_EQ(book.page->page_case, PageCase::D);
  ASSERT_TRUE(book.binding);
  EXPECT_EQ(book.binding->dimension(), book.dimension() - 2);
  const CheckReport report = boundary_consistency(book);
  EXPECT_TRUE(report.ok());
  for (const auto& c : report.checks) EXPECT_TRUE(c.applicable) << c.name;
}

TEST(OpenBook, InvalidInputs) {
  const Configuration antipodal = Configuration::from_vectors({{1, 0}, {-1, 0}, {0, 1}});
  EXPECT_THROW(open_book_complex(antipodal, 2), ConfigurationError);
  EXPECT_THROW(open_book_real(antipodal, 2, false), ConfigurationError);
  EXPECT_THROW(open_book_complex(realize(kPentagon), 7), std::out_of_range);
}

TEST(OpenBook, HigherCodimension) {
  std::mt19937 rng(41);
  const Configuration cfg = oracle::random_valid_configuration(rng, 3, 6, 4);
  for (int i = 0; i < cfg.n(); ++i) {
    const OpenBookStructure real = open_book_real(cfg, i, false);
    EXPECT_FALSE(real.page);
    EXPECT_TRUE(boundary_consistency(real).ok()) << i;
  }
  EXPECT_TRUE(boundary_consistency(open_book_complex(cfg, 0)).ok());
}

TEST(OpenBook, AllSmallPartitionsAreConsistent) {
  for (const auto& p : canonical_partitions(6)) {
    for (int i = 0; i < p.n(); ++i) {
      EXPECT_TRUE(boundary_consistency(open_book_real(realize(p), i, false)).ok()) << p.to_string() << " " << i;
      EXPECT_TRUE(boundary_consistency(open_book_complex(realize(p), i)).ok()) << p.to_string() << " " << i;
    }
  }
}
