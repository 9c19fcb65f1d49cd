#include "quadrics/feasibility.hpp"

namespace quadrics {

LinearSystem::LinearSystem(MatrixQ a, VectorQ b)
    : LinearSystem(std::move(a), std::move(b), {}) {}

LinearSystem::LinearSystem(MatrixQ a, VectorQ b, std::vector<Bound> bounds_in)
    : equations(std::move(a)), rhs(std::move(b)), bounds(std::move(bounds_in)) {
  if (bounds.empty()) bounds.assign(static_cast<std::size_t>(equations.cols()), Bound::NonNegative);
  if (rhs.size() != equations.rows() || static_cast<Eigen::Index>(bounds.size()) != equations.cols()) {
    throw std::invalid_argument("linear system dimensions do not agree");
  }
}

std::optional<VectorQ> find_feasible_point(const LinearSystem& sys) {
  return detail::phase_one<Rational>(sys.equations, sys.rhs, sys.bounds);
}

bool feasible(const LinearSystem& sys) { return find_feasible_point(sys).has_value(); }

namespace {

// Rows: the k coordinates of sum v_i r_i = 0, then sum r_i = 1.
LinearSystem convex_combination_system(const MatrixQ& columns, Subset zero) {
  const Eigen::Index k = columns.rows();
  const Eigen::Index n = columns.cols();
  MatrixQ a(k + 1, n);
  a.topRows(k) = columns;
  a.row(k).setOnes();
  VectorQ b = VectorQ::Zero(k + 1);
  b(k) = 1;
  std::vector<Bound> bounds(static_cast<std::size_t>(n), Bound::NonNegative);
  for (int i : members(zero)) bounds[static_cast<std::size_t>(i)] = Bound::Zero;
  return LinearSystem(std::move(a), std::move(b), std::move(bounds));
}

}  // namespace

bool origin_in_convex_hull(const std::vector<VectorQ>& vectors) {
  if (vectors.empty()) return false;
  MatrixQ cols(vectors.front().size(), static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) cols.col(static_cast<Eigen::Index>(i)) = vectors[i];
  return feasible(convex_combination_system(cols, 0));
}

std::optional<VectorQ> point_in_face(const Configuration& cfg, Subset face) {
  return find_feasible_point(convex_combination_system(cfg.lambdas(), face));
}

bool face_nonempty(const Configuration& cfg, Subset face) { return point_in_face(cfg, face).has_value(); }

}  // namespace quadrics
