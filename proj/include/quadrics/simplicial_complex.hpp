#ifndef QUADRICS_SIMPLICIAL_COMPLEX_HPP
#define QUADRICS_SIMPLICIAL_COMPLEX_HPP

#include "quadrics/configuration.hpp"
#include "quadrics/graded_group.hpp"
#include "quadrics/subset.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace quadrics {

/// Abstract simplicial complex on a ground set of vertex indices, stored by its
/// maximal faces plus a shared membership bitmap over all 2^n subsets of the
/// ambient index set {0..n-1}.
///
/// Two degenerate complexes are distinguished: the void complex (no faces at
/// all) and {{}} (only the empty face).
class SimplicialComplex {
 public:
  /// Complex generated by the given faces (closed under subsets). An empty list
  /// yields the void complex. All faces must lie inside ground.
  SimplicialComplex(int n, Subset ground, const std::vector<Subset>& generators);
  SimplicialComplex(int n, const std::vector<Subset>& generators)
      : SimplicialComplex(n, full_set(n), generators) {}

  static SimplicialComplex void_complex(int n, Subset ground);
  static SimplicialComplex empty_face_only(int n, Subset ground);

  int ambient_size() const { return n_; }
  Subset ground() const { return ground_; }
  const std::vector<Subset>& facets() const { return facets_; }

  bool contains(Subset face) const {
    return is_subset(face, ground_) && (*indicator_)[face] != 0;
  }
  bool is_void() const { return facets_.empty(); }
  Subset vertices() const;
  /// Largest face size minus one; -1 for {{}}, -2 for the void complex.
  int dimension() const;

  /// All faces, ordered by size and then by bitmask.
  std::vector<Subset> faces() const;
  /// f[i] = number of faces with i vertices (f[0] = 1 unless void).
  std::vector<std::int64_t> face_counts() const;

  /// Some vertex lying in every facet, if any (the complex is then a cone).
  std::optional<int> cone_apex() const;

  /// The full subcomplex K|_J = {L in K : L subset of J}, with ground set J.
  SimplicialComplex full_subcomplex(Subset subset) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);
  friend SimplicialComplex dual_complex(const Configuration& cfg);

 private:
  SimplicialComplex(int n, Subset ground, std::vector<Subset> facets,
                    std::shared_ptr<const std::vector<std::uint8_t>> indicator);

  int n_;
  Subset ground_;
  std::vector<Subset> facets_;
  std::shared_ptr<const std::vector<std::uint8_t>> indicator_;
};

/// Maximal elements of a family of sets (sorted by bitmask, duplicates removed).
std::vector<Subset> maximal_elements(std::vector<Subset> family);

/// Reduced integral homology from degree -1, via boundary matrices with
/// increasing-vertex orientation and Smith normal form. Both the void complex
/// and {{}} have H_{-1} = Z.
GradedGroup reduced_homology(const SimplicialComplex& complex);

/// K = {L : F_L nonempty}: the dual complex of the polytope P of a configuration.
/// Void when P itself is empty.
SimplicialComplex dual_complex(const Configuration& cfg);

SimplicialComplex full_subcomplex(const SimplicialComplex& complex, Subset subset);

/// The cone over K with apex at ambient index `apex` (which must not be in K's ground set).
SimplicialComplex cone(const SimplicialComplex& complex, int apex);

}  // namespace quadrics

#endif  // QUADRICS_SIMPLICIAL_COMPLEX_HPP
