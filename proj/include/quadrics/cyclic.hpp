#ifndef QUADRICS_CYCLIC_HPP
#define QUADRICS_CYCLIC_HPP

#include "quadrics/configuration.hpp"
#include "quadrics/graded_group.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace quadrics {

/// An internal cross-check disagreed with a primary computation. Always a bug.
class OracleMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// n = n_1 + ... + n_{2l+1}: the vertices of a regular (2l+1)-gon taken with
/// multiplicities n_i, in cyclic order. Positions are 0-based in the API.
class CyclicPartition {
 public:
  /// Throws std::invalid_argument unless there is an odd number >= 3 of positive parts.
  explicit CyclicPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int classes() const { return static_cast<int>(parts_.size()); }
  int ell() const { return (classes() - 1) / 2; }
  int n() const;
  /// Cyclic access: part(i) for any integer i.
  int part(int i) const;

  /// Starts the cyclic order at position `start`.
  CyclicPartition rotated(int start) const;
  CyclicPartition reflected() const;
  /// Lexicographically least rotation or reflection.
  CyclicPartition canonical() const;
  bool is_canonical() const { return *this == canonical(); }

  /// "(1,1,1,1,1)"
  std::string to_string() const;

  friend bool operator==(const CyclicPartition&, const CyclicPartition&) = default;

 private:
  std::vector<int> parts_;
};

/// Normal form of a k = 2 configuration: the canonical partition and, for every
/// coordinate, the position of its class in that partition.
struct NormalForm {
  CyclicPartition partition;
  std::vector<int> class_of;
  /// Classes in counterclockwise order starting with the class of the
  /// distinguished coordinate (the numbering in which it lies in n_1).
  CyclicPartition anchored;
};

/// Classes are maximal runs of directions lambda_i, in angular order, not
/// separated by any antipodal direction -lambda_m. The result is checked by
/// comparing dual complexes with the regular-polygon realization and
/// OracleMismatch is thrown on disagreement.
///
/// Throws ConfigurationError when k != 2, when weak hyperbolicity fails or when
/// the polytope (and so Z) is empty.
NormalForm normal_form(const Configuration& cfg);

/// Regular-polygon configuration of a partition. Vertex j sits at the point of
/// the square boundary max(|x|,|y|) = 1 with perimeter parameter 8j/(2l+1),
/// scaled to integers; the perimeter parameter commutes with the antipodal
/// map, so the interleaving of vertices and antipodes is that of the regular
/// polygon. Coordinates are grouped by class in order; the distinguished
/// coordinate is the first one of class 0.
Configuration realize(const CyclicPartition& partition);

/// Every odd cyclic partition (as a sequence, so all rotations and reflections)
/// with 3 <= n <= max_n, ordered by n, then class count, then lexicographically.
std::vector<CyclicPartition> compositions(int max_n);
/// The canonical representatives among compositions(max_n).
std::vector<CyclicPartition> canonical_partitions(int max_n);

/// d_i = n_i + ... + n_{i+l-1}, cyclically, for i = 0..2l.
std::vector<int> d_values(const CyclicPartition& partition);

/// Hypotheses attached to a closed-form diffeomorphism statement.
struct Hypotheses {
  bool complex_case = false;
  /// H_1 of the described manifold vanishes.
  bool h1_zero = false;
  /// Dimension lower bound required by the statement (0: none).
  int required_dimension = 0;
  bool dimension_ok = true;
  /// Simple connectivity is assumed by the statement, not derived.
  bool pi1_unverified = false;

  bool conditional() const { return pi1_unverified || !dimension_ok; }
  /// e.g. {"h1-zero", "dim>=5:fails", "pi1-unverified"}
  std::vector<std::string> flags() const;
};

struct Factor {
  enum class Type { Sphere, Disk };
  Type type = Type::Sphere;
  int dim = 0;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// A product of spheres and disks.
using Summand = std::vector<Factor>;

enum class ManifoldKind { SphereProductTriple, ConnectedSum };

struct ManifoldDescription {
  ManifoldKind kind = ManifoldKind::SphereProductTriple;
  /// One product for SphereProductTriple; the connected summands otherwise.
  std::vector<Summand> summands;
  int dimension = 0;
  Hypotheses hypotheses;

  /// "S^1 x S^1 x S^1", "#_5(S^3 x S^4)", "(S^5 x S^4) # (S^3 x S^6) # ...";
  /// surfaces get a "[genus g surface]" suffix.
  std::string symbolic() const;
  /// "diffeomorphic" or "diffeomorphic provided Z, Z_0 simply connected".
  std::string statement() const;
};

/// Real variety Z: a triple product of spheres for l = 1, otherwise the
/// connected sum over j of S^{d_j-1} x S^{n-d_j-2}, conditional on simple
/// connectivity and dim Z >= 5.
ManifoldDescription classify_real(const CyclicPartition& partition);

/// Moment-angle manifold Z^C: S^{2n_1-1} x S^{2n_2-1} x S^{2n_3-1} for l = 1,
/// otherwise the connected sum over j of S^{2d_j-1} x S^{2n-2d_j-2}. Unconditional.
ManifoldDescription classify_complex(const CyclicPartition& partition);

/// Integral homology of a closed description (Kunneth for products, reduced
/// sums for connected sums). Throws std::invalid_argument on disk factors.
GradedGroup expected_homology(const ManifoldDescription& manifold);

/// Kunneth homology of a product of spheres and disks (disks contribute nothing).
GradedGroup product_homology(const Summand& product);

std::string symbolic(const Summand& product);

}  // namespace quadrics

#endif  // QUADRICS_CYCLIC_HPP
