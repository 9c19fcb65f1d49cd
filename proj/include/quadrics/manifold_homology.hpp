#ifndef QUADRICS_MANIFOLD_HOMOLOGY_HPP
#define QUADRICS_MANIFOLD_HOMOLOGY_HPP

#include "quadrics/configuration.hpp"
#include "quadrics/graded_group.hpp"
#include "quadrics/simplicial_complex.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace quadrics {

/// The three spaces built from one configuration: the real variety Z, the
/// moment-angle manifold Z^C and the half Z_+ = Z n {x_d >= 0} at the
/// distinguished coordinate d.
enum class Space { Z, ZC, Zplus };

std::string to_string(Space space);

struct HomologyOptions {
  int max_n = 20;
  /// Worker threads for the per-subset computations; the result does not depend on it.
  int jobs = 1;
};

/// H_*(P, P_J) through the nerve model H_d(P, P_J) = H~_{d-1}(K|_J). Zero when P is empty.
GradedGroup pair_homology(const SimplicialComplex& dual, Subset subset);
GradedGroup pair_homology(const Configuration& cfg, Subset subset);

struct Contribution {
  Subset subset = 0;
  /// Contribution of this J to the homology of the space (degree-shifted by |J| for Z^C).
  GradedGroup group;
};

/// Per-subset bookkeeping of a splitting. Contributions are listed for nonzero
/// J only, in increasing bitmask order.
struct SplittingLedger {
  Space space = Space::Z;
  GradedGroup total;
  std::vector<Contribution> contributions;
};

/// Full splitting with the contributing subsets.
SplittingLedger splitting(const Configuration& cfg, Space space, const HomologyOptions& options = {});

/// H_*(Z) = sum over all J of H_*(P, P_J).
GradedGroup homology_Z(const Configuration& cfg, const HomologyOptions& options = {});
/// H_*(Z_+) = sum over J not containing the distinguished coordinate.
GradedGroup homology_Zplus(const Configuration& cfg, const HomologyOptions& options = {});
/// H_i(Z^C) = sum over J of H_{i-|J|}(P, P_J).
GradedGroup homology_ZC(const Configuration& cfg, const HomologyOptions& options = {});
GradedGroup homology(const Configuration& cfg, Space space, const HomologyOptions& options = {});

/// Euler characteristic of Z from its cell decomposition: every nonempty face
/// F_L of P has 2^{n-|L|} reflected copies of dimension n-k-1-|L|.
std::int64_t euler_cellcount(const Configuration& cfg);

}  // namespace quadrics

#endif  // QUADRICS_MANIFOLD_HOMOLOGY_HPP
