#ifndef QUADRICS_OPEN_BOOK_HPP
#define QUADRICS_OPEN_BOOK_HPP

#include "quadrics/configuration.hpp"
#include "quadrics/cyclic.hpp"
#include "quadrics/graded_group.hpp"
#include "quadrics/manifold_homology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quadrics {

enum class Field { Real, Complex };

std::string to_string(Field field);

/// a: product; b: boundary connected sum of sphere-disk products; c: as b with
/// a punctured product; d: punctured product and an exterior.
enum class PageCase { A, B, C, D };

char to_char(PageCase page_case);

/// One symbolic piece of a page. Grammar:
///   SphereSphereDisk  S(p) x S(q) x D(m)
///   SphereTimesDisk   S(p) x D(q)
///   DiskTimesSphere   D(p) x S(q)
///   PuncturedProduct  PP(p,q;m)   S^p x S^q minus an open m-disk, m = p + q
///   Exterior          E(p,q;m)    complement of a tubular S^p x S^q in S^m
struct PagePiece {
  enum class Kind { SphereSphereDisk, SphereTimesDisk, DiskTimesSphere, PuncturedProduct, Exterior };
  Kind kind = Kind::SphereTimesDisk;
  int p = 0;
  int q = 0;
  int m = 0;

  int dimension() const;
  std::string symbolic() const;
  friend bool operator==(const PagePiece&, const PagePiece&) = default;
};

/// Compact model of a page (the half variety Z_+). Pieces of cases b-d are
/// joined by boundary connected sum.
struct PageDescription {
  PageCase page_case = PageCase::A;
  std::vector<PagePiece> pieces;
  int dimension = 0;
  Field field = Field::Real;
  Hypotheses hypotheses;
  /// Input partition and the class carrying the distinguished coordinate.
  CyclicPartition partition{{1, 1, 1}};
  int class_index = 0;

  /// Pieces joined by " #b ".
  std::string symbolic() const;
};

/// Real page: Z_+ of the partition with the distinguished coordinate in class
/// `class_index` (0-based; rotated to the front). Complex page: the real page of
/// (2n_1 - 1, 2n_2, ..., 2n_{2l+1}) after the same rotation. For l > 1 real
/// pages carry the flags dim Z >= 6 and pi1-unverified.
PageDescription page_topology(const CyclicPartition& partition, int class_index, Field field);

/// (2n_c - 1, 2n_{c+1}, ..., 2n_{c-1}) for c = class_index: the real partition
/// whose Z_+ at class 0 is the page of the complex open book.
CyclicPartition complex_page_partition(const CyclicPartition& partition, int class_index);

/// Homology of the compact page. Throws std::invalid_argument on malformed pieces.
GradedGroup page_homology(const PageDescription& page);

/// Free: Z in degrees 0, m-p-q-1, m-q-1 and m-p-1. Throws std::invalid_argument
/// unless p, q >= 0 and m > p + q.
GradedGroup exterior_homology(int p, int q, int m);

/// Open book with trivial monodromy. The page is Z_+ of `page_source` at its
/// distinguished coordinate; the binding is Z of `binding` (empty manifold when
/// absent).
struct OpenBookStructure {
  Field field = Field::Real;
  Configuration total;
  Configuration page_source;
  std::optional<Configuration> binding;
  /// Symbolic page for k = 2 with a nonempty page.
  std::optional<PageDescription> page;
  std::string monodromy = "trivial";

  /// Dimension of the total space (doubled coordinates count once per real copy).
  int dimension() const { return total.dimension(); }
};

/// Open book on Z of `cfg` turning around coordinate i and an equal partner
/// coordinate. Without a partner, strict mode throws std::invalid_argument and
/// otherwise coordinate i is duplicated first. Throws ConfigurationError when
/// the total space is not weakly hyperbolic.
OpenBookStructure open_book_real(const Configuration& cfg, int i, bool strict = true);

/// Open book on Z^C of `cfg` turning around coordinate i; binding Z^C of cfg
/// without coordinate i. Throws ConfigurationError when cfg is not weakly
/// hyperbolic and std::domain_error when the binding is not smooth.
OpenBookStructure open_book_complex(const Configuration& cfg, int i);

struct Check {
  std::string name;
  bool applicable = false;
  bool passed = false;
  std::string detail;
};

struct CheckReport {
  std::vector<Check> checks;
  /// No applicable check failed.
  bool ok() const;
};

/// Checks of an open book against the homology engine:
///   dimensions       dim page = dim total - 1, dim binding = dim total - 2
///   page-homology    page_homology(page) = H(Z_+(page_source))
///   boundary-euler   chi(binding) = (1 - (-1)^dim page) chi(page)
///   open-book-euler  chi(total) = chi(binding)
///   binding-formula  Betti numbers of the binding match its closed form (k = 2)
///   doubling         chi(Z) = 2 chi(Z_+) - chi(Z_0) for page_source
CheckReport boundary_consistency(const OpenBookStructure& book, const HomologyOptions& options = {});

}  // namespace quadrics

#endif  // QUADRICS_OPEN_BOOK_HPP
