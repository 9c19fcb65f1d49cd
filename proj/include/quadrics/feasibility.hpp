#ifndef QUADRICS_FEASIBILITY_HPP
#define QUADRICS_FEASIBILITY_HPP

#include "quadrics/configuration.hpp"
#include "quadrics/rational.hpp"
#include "quadrics/subset.hpp"

#include <optional>
#include <vector>

namespace quadrics {

enum class Bound { Free, NonNegative, Zero };

/// Equality rows A r = b with per-variable bounds. Zero overrides NonNegative.
struct LinearSystem {
  MatrixQ equations;
  VectorQ rhs;
  std::vector<Bound> bounds;

  /// All variables nonnegative.
  LinearSystem(MatrixQ a, VectorQ b);
  LinearSystem(MatrixQ a, VectorQ b, std::vector<Bound> bounds);

  int variables() const { return static_cast<int>(equations.cols()); }
};

namespace detail {

// Phase-one simplex with Bland's rule (smallest entering index, smallest
// leaving basic index). Exact over any ordered field Scalar.
template <typename Scalar>
std::optional<Vector<Scalar>> phase_one(const Matrix<Scalar>& a, const Vector<Scalar>& b,
                                        const std::vector<Bound>& bounds) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index vars = a.cols();

  // Column j of the standard form corresponds to variable source[j] with sign sign[j].
  std::vector<Eigen::Index> source;
  std::vector<int> sign;
  for (Eigen::Index j = 0; j < vars; ++j) {
    switch (bounds[static_cast<std::size_t>(j)]) {
      case Bound::Zero:
        break;
      case Bound::NonNegative:
        source.push_back(j);
        sign.push_back(1);
        break;
      case Bound::Free:
        source.push_back(j);
        sign.push_back(1);
        source.push_back(j);
        sign.push_back(-1);
        break;
    }
  }
  const Eigen::Index cols = static_cast<Eigen::Index>(source.size());
  const Eigen::Index width = cols + rows + 1;
  const Eigen::Index rhs = width - 1;

  Matrix<Scalar> t = Matrix<Scalar>::Zero(rows + 1, width);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Scalar flip = b(i) < 0 ? Scalar(-1) : Scalar(1);
    for (Eigen::Index j = 0; j < cols; ++j) {
      t(i, j) = flip * a(i, source[static_cast<std::size_t>(j)]) * Scalar(sign[static_cast<std::size_t>(j)]);
    }
    t(i, cols + i) = Scalar(1);
    t(i, rhs) = flip * b(i);
  }
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) t(rows, j) -= t(i, j);
    t(rows, rhs) -= t(i, rhs);
  }
  std::vector<Eigen::Index> basis(static_cast<std::size_t>(rows));
  for (Eigen::Index i = 0; i < rows; ++i) basis[static_cast<std::size_t>(i)] = cols + i;

  for (;;) {
    Eigen::Index entering = -1;
    for (Eigen::Index j = 0; j < cols + rows; ++j) {
      if (t(rows, j) < 0) {
        entering = j;
        break;
      }
    }
    if (entering < 0) break;

    Eigen::Index leaving = -1;
    Scalar best;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (!(t(i, entering) > 0)) continue;
      Scalar ratio = t(i, rhs) / t(i, entering);
      if (leaving < 0 || ratio < best ||
          (ratio == best && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leaving)])) {
        leaving = i;
        best = ratio;
      }
    }
    if (leaving < 0) break;  // cannot happen: phase one is bounded below by 0

    const Scalar pivot = t(leaving, entering);
    t.row(leaving) /= pivot;
    for (Eigen::Index i = 0; i <= rows; ++i) {
      if (i == leaving || t(i, entering) == 0) continue;
      const Scalar factor = t(i, entering);
      t.row(i) -= factor * t.row(leaving);
    }
    basis[static_cast<std::size_t>(leaving)] = entering;
  }

  if (t(rows, rhs) != 0) return std::nullopt;

  Vector<Scalar> x = Vector<Scalar>::Zero(vars);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Eigen::Index col = basis[static_cast<std::size_t>(i)];
    if (col >= cols) continue;
    x(source[static_cast<std::size_t>(col)]) += Scalar(sign[static_cast<std::size_t>(col)]) * t(i, rhs);
  }
  return x;
}

}  // namespace detail

/// A rational point satisfying the system, or nothing when it is infeasible.
/// The point returned is a basic solution, so its support has at most
/// rows-many nonzero entries.
std::optional<VectorQ> find_feasible_point(const LinearSystem& sys);

bool feasible(const LinearSystem& sys);

/// True iff some convex combination of the vectors is zero.
bool origin_in_convex_hull(const std::vector<VectorQ>& vectors);

/// The polytope P = {r >= 0 : sum lambda_i r_i = 0, sum r_i = 1} with r_i = 0 for
/// i in face; returns a point of that face of P when it is nonempty.
std::optional<VectorQ> point_in_face(const Configuration& cfg, Subset face);

/// F_L = intersection of the facets F_i, i in L, is nonempty. L = {} asks whether P is nonempty.
bool face_nonempty(const Configuration& cfg, Subset face);

}  // namespace quadrics

#endif  // QUADRICS_FEASIBILITY_HPP
