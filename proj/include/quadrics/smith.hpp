#ifndef QUADRICS_SMITH_HPP
#define QUADRICS_SMITH_HPP

#include "quadrics/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace quadrics {

/// Thrown by the fixed-width integer path when an intermediate entry no longer
/// fits; callers rerun with Integer.
class IntegerOverflow : public std::overflow_error {
 public:
  IntegerOverflow() : std::overflow_error("integer overflow during elimination") {}
};

namespace arith {

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw IntegerOverflow();
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw IntegerOverflow();
  return r;
}
inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw IntegerOverflow();
  return r;
}
inline std::int64_t abs(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw IntegerOverflow();
  return a < 0 ? -a : a;
}

inline Integer mul(const Integer& a, const Integer& b) { return a * b; }
inline Integer sub(const Integer& a, const Integer& b) { return a - b; }
inline Integer add(const Integer& a, const Integer& b) { return a + b; }
inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

}  // namespace arith

template <typename Scalar>
struct SmithForm {
  /// Nonzero diagonal entries d_1 | d_2 | ... | d_rank, all positive.
  std::vector<Scalar> diagonal;
  Eigen::Index rank = 0;
};

/// Smith normal form of a dense integer matrix by unimodular row and column
/// operations. Scalar is std::int64_t (overflow-checked) or Integer.
template <typename Scalar>
SmithForm<Scalar> smith_normal_form(Matrix<Scalar> a) {
  using arith::abs;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  SmithForm<Scalar> out;

  auto row_axpy = [&](Eigen::Index target, Eigen::Index src, const Scalar& q, Eigen::Index from) {
    for (Eigen::Index j = from; j < cols; ++j) a(target, j) = arith::sub(a(target, j), arith::mul(q, a(src, j)));
  };
  auto col_axpy = [&](Eigen::Index target, Eigen::Index src, const Scalar& q, Eigen::Index from) {
    for (Eigen::Index i = from; i < rows; ++i) a(i, target) = arith::sub(a(i, target), arith::mul(q, a(i, src)));
  };

  // Moves the smallest nonzero entry of the trailing block to (t, t).
  auto place_pivot = [&](Eigen::Index t) {
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index j = t; j < cols; ++j) {
      for (Eigen::Index i = t; i < rows; ++i) {
        if (a(i, j) != 0 && (pi < 0 || abs(a(i, j)) < abs(a(pi, pj)))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) return false;
    a.row(t).swap(a.row(pi));
    a.col(t).swap(a.col(pj));
    return true;
  };

  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    if (!place_pivot(t)) break;
    for (;;) {
      // One division pass over the pivot column and row. Remainders are
      // strictly smaller than the pivot, so re-pivoting on the global minimum
      // terminates and keeps the multipliers (and entry growth) small.
      bool dirty = false;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const Scalar q = a(i, t) / a(t, t);
        row_axpy(i, t, q, t);
        dirty = dirty || a(i, t) != 0;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const Scalar q = a(t, j) / a(t, t);
        col_axpy(j, t, q, t);
        dirty = dirty || a(t, j) != 0;
      }
      if (dirty) {
        place_pivot(t);
        continue;
      }

      // Row and column are clear; enforce divisibility of the trailing block.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i) {
        for (Eigen::Index j = t + 1; j < cols; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      for (Eigen::Index j = t; j < cols; ++j) a(t, j) = arith::add(a(t, j), a(bad, j));
    }
    out.diagonal.push_back(abs(a(t, t)));
  }
  out.rank = static_cast<Eigen::Index>(out.diagonal.size());
  return out;
}

/// Sparse integer column: (row, value) pairs sorted by row, no zero values.
template <typename Scalar>
using SparseColumn = std::vector<std::pair<std::int32_t, Scalar>>;

/// Nonzero invariant factors of a sparse integer matrix (in ascending order).
///
/// Entries equal to +-1 are eliminated first; each such pivot splits off a
/// unit invariant factor. Whatever survives is handed to the dense Smith form.
template <typename Scalar>
std::vector<Scalar> invariant_factors(std::vector<SparseColumn<Scalar>> columns, std::int32_t rows) {
  const auto ncols = static_cast<std::int32_t>(columns.size());
  std::vector<std::vector<std::int32_t>> row_columns(static_cast<std::size_t>(rows));
  for (std::int32_t c = 0; c < ncols; ++c) {
    for (const auto& [r, v] : columns[static_cast<std::size_t>(c)]) row_columns[static_cast<std::size_t>(r)].push_back(c);
  }
  std::vector<char> active(static_cast<std::size_t>(ncols), 1);
  std::size_t units = 0;

  auto entry_at = [&](std::int32_t c, std::int32_t r) -> const Scalar* {
    const auto& col = columns[static_cast<std::size_t>(c)];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::int32_t row) { return e.first < row; });
    return (it != col.end() && it->first == r) ? &it->second : nullptr;
  };

  SparseColumn<Scalar> merged;
  auto eliminate = [&](std::int32_t c, std::int32_t r, const Scalar& unit) {
    const auto& pivot_col = columns[static_cast<std::size_t>(c)];
    auto& users = row_columns[static_cast<std::size_t>(r)];
    for (std::int32_t other : users) {
      if (other == c || !active[static_cast<std::size_t>(other)]) continue;
      const Scalar* hit = entry_at(other, r);
      if (hit == nullptr) continue;
      const Scalar factor = arith::mul(*hit, unit);
      auto& col = columns[static_cast<std::size_t>(other)];
      merged.clear();
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < pivot_col.size()) {
        if (j == pivot_col.size() || (i < col.size() && col[i].first < pivot_col[j].first)) {
          merged.push_back(col[i++]);
        } else if (i == col.size() || pivot_col[j].first < col[i].first) {
          merged.emplace_back(pivot_col[j].first, arith::sub(Scalar(0), arith::mul(factor, pivot_col[j].second)));
          row_columns[static_cast<std::size_t>(pivot_col[j].first)].push_back(other);
          ++j;
        } else {
          Scalar v = arith::sub(col[i].second, arith::mul(factor, pivot_col[j].second));
          if (v != 0) merged.emplace_back(col[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      col.swap(merged);
    }
    active[static_cast<std::size_t>(c)] = 0;
    users.clear();
    users.shrink_to_fit();
  };

  for (bool progress = true; progress;) {
    progress = false;
    for (std::int32_t c = 0; c < ncols; ++c) {
      if (!active[static_cast<std::size_t>(c)]) continue;
      const auto& col = columns[static_cast<std::size_t>(c)];
      if (col.empty()) {
        active[static_cast<std::size_t>(c)] = 0;
        continue;
      }
      std::int32_t best_row = -1;
      Scalar best_value;
      std::size_t best_load = 0;
      for (const auto& [r, v] : col) {
        if (v != 1 && v != -1) continue;
        const std::size_t load = row_columns[static_cast<std::size_t>(r)].size();
        if (best_row < 0 || load < best_load) {
          best_row = r;
          best_value = v;
          best_load = load;
        }
      }
      if (best_row < 0) continue;
      eliminate(c, best_row, best_value);
      ++units;
      progress = true;
    }
  }

  // Dense remainder: surviving columns restricted to the rows they touch.
  std::vector<std::int32_t> rest_cols;
  std::vector<std::int32_t> rest_rows;
  for (std::int32_t c = 0; c < ncols; ++c) {
    if (!active[static_cast<std::size_t>(c)] || columns[static_cast<std::size_t>(c)].empty()) continue;
    rest_cols.push_back(c);
    for (const auto& e : columns[static_cast<std::size_t>(c)]) rest_rows.push_back(e.first);
  }
  std::sort(rest_rows.begin(), rest_rows.end());
  rest_rows.erase(std::unique(rest_rows.begin(), rest_rows.end()), rest_rows.end());

  std::vector<Scalar> factors(units, Scalar(1));
  if (!rest_cols.empty()) {
    Matrix<Scalar> dense = Matrix<Scalar>::Zero(static_cast<Eigen::Index>(rest_rows.size()),
                                                static_cast<Eigen::Index>(rest_cols.size()));
    for (std::size_t j = 0; j < rest_cols.size(); ++j) {
      for (const auto& [r, v] : columns[static_cast<std::size_t>(rest_cols[j])]) {
        const auto i = std::lower_bound(rest_rows.begin(), rest_rows.end(), r) - rest_rows.begin();
        dense(i, static_cast<Eigen::Index>(j)) = v;
      }
    }
    auto snf = smith_normal_form<Scalar>(std::move(dense));
    factors.insert(factors.end(), snf.diagonal.begin(), snf.diagonal.end());
  }
  return factors;
}

}  // namespace quadrics

#endif  // QUADRICS_SMITH_HPP
