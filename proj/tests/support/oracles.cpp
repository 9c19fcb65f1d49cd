#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

namespace oracle {

std::optional<VectorQ> solve_unique(const MatrixQ& a, const VectorQ& b) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  MatrixQ m(rows, cols + 1);
  m.leftCols(cols) = a;
  m.col(cols) = b;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols; ++c) {
    Eigen::Index pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) return std::nullopt;  // dependent column
    m.row(r).swap(m.row(pivot));
    const Rational p = m(r, c);
    m.row(r) /= p;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i != r && m(i, c) != 0) {
        const Rational f = m(i, c);
        m.row(i) -= f * m.row(r);
      }
    }
    ++r;
  }
  for (Eigen::Index i = r; i < rows; ++i) {
    if (m(i, cols) != 0) return std::nullopt;
  }
  return VectorQ(m.col(cols).head(cols));
}

namespace {

void for_each_subset_up_to(int n, int max_size, const std::function<bool(std::vector<int>&)>& visit) {
  std::vector<int> chosen;
  std::function<bool(int)> rec = [&](int start) {
    if (!chosen.empty() && visit(chosen)) return true;
    if (static_cast<int>(chosen.size()) == max_size) return false;
    for (int i = start; i < n; ++i) {
      chosen.push_back(i);
      if (rec(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  rec(0);
}

}  // namespace

bool hull_contains_origin(const std::vector<VectorQ>& vectors) {
  if (vectors.empty()) return false;
  const auto k = vectors.front().size();
  bool found = false;
  for_each_subset_up_to(static_cast<int>(vectors.size()), static_cast<int>(k) + 1, [&](std::vector<int>& t) {
    MatrixQ a(k + 1, static_cast<Eigen::Index>(t.size()));
    for (std::size_t j = 0; j < t.size(); ++j) {
      a.col(static_cast<Eigen::Index>(j)).head(k) = vectors[static_cast<std::size_t>(t[j])];
      a(k, static_cast<Eigen::Index>(j)) = 1;
    }
    VectorQ b = VectorQ::Zero(k + 1);
    b(k) = 1;
    const auto x = solve_unique(a, b);
    found = x && (x->array() >= Rational(0)).all();
    return found;
  });
  return found;
}

bool weakly_hyperbolic(const Configuration& cfg) {
  bool bad = false;
  for_each_subset_up_to(cfg.n(), cfg.k(), [&](std::vector<int>& t) {
    std::vector<VectorQ> vs;
    for (int i : t) vs.push_back(cfg.lambda(i));
    bad = hull_contains_origin(vs);
    return bad;
  });
  return !bad;
}

bool face_nonempty(const Configuration& cfg, Subset face) {
  std::vector<VectorQ> vs;
  for (int i = 0; i < cfg.n(); ++i) {
    if (!quadrics::contains(face, i)) vs.push_back(cfg.lambda(i));
  }
  return hull_contains_origin(vs);
}

bool feasible(const quadrics::LinearSystem& sys) {
  // Rewrite as A' y = b, y >= 0: free columns split, zero columns dropped.
  std::vector<VectorQ> columns;
  for (Eigen::Index j = 0; j < sys.equations.cols(); ++j) {
    const auto bound = sys.bounds.empty() ? quadrics::Bound::NonNegative : sys.bounds[static_cast<std::size_t>(j)];
    if (bound == quadrics::Bound::Zero) continue;
    columns.emplace_back(sys.equations.col(j));
    if (bound == quadrics::Bound::Free) columns.emplace_back(-sys.equations.col(j));
  }
  if (sys.rhs.isZero()) return true;
  bool found = false;
  for_each_subset_up_to(static_cast<int>(columns.size()), static_cast<int>(sys.equations.rows()),
                        [&](std::vector<int>& basis) {
                          MatrixQ a(sys.equations.rows(), static_cast<Eigen::Index>(basis.size()));
                          for (std::size_t j = 0; j < basis.size(); ++j) {
                            a.col(static_cast<Eigen::Index>(j)) = columns[static_cast<std::size_t>(basis[j])];
                          }
                          const auto x = solve_unique(a, sys.rhs);
                          found = x && (x->array() >= Rational(0)).all();
                          return found;
                        });
  return found;
}

namespace {

Integer determinant(quadrics::Matrix<Integer> m) {
  // Bareiss fraction-free elimination.
  const Eigen::Index n = m.rows();
  Integer sign = 1, previous = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<std::vector<int>> combinations(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(static_cast<std::size_t>(r));
  std::iota(c.begin(), c.end(), 0);
  if (r > n) return out;
  while (true) {
    out.push_back(c);
    int i = r - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace

std::vector<Integer> determinantal_invariant_factors(const quadrics::Matrix<Integer>& a) {
  std::vector<Integer> factors;
  Integer previous = 1;
  const int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
  for (int size = 1; size <= std::min(rows, cols); ++size) {
    Integer g = 0;
    for (const auto& rs : combinations(rows, size)) {
      for (const auto& cs : combinations(cols, size)) {
        quadrics::Matrix<Integer> minor(size, size);
        for (int i = 0; i < size; ++i) {
          for (int j = 0; j < size; ++j) minor(i, j) = a(rs[static_cast<std::size_t>(i)], cs[static_cast<std::size_t>(j)]);
        }
        g = boost::multiprecision::gcd(g, determinant(minor));
      }
    }
    if (g == 0) break;
    factors.push_back(g / previous);
    previous = g;
  }
  return factors;
}

namespace {

constexpr std::int64_t kPrimes[] = {1000003, 998244353};

std::int64_t power_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b %= p;
  for (; e > 0; e >>= 1, b = b * b % p) {
    if (e & 1) r = r * b % p;
  }
  return r;
}

std::int64_t rank_mod(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  std::int64_t rank = 0;
  const std::size_t rows = m.size(), cols = rows == 0 ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows && m[pivot][c] % p == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[static_cast<std::size_t>(rank)]);
    auto& top = m[static_cast<std::size_t>(rank)];
    const std::int64_t inv = power_mod((top[c] % p + p) % p, p - 2, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(rank) || m[i][c] % p == 0) continue;
      const std::int64_t f = (m[i][c] % p + p) % p * inv % p;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = ((m[i][j] - f * top[j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Cellular chains of a polyhedral product; each coordinate has three cell
// states 0, 1, 2 of dimensions dims[s]; state 2 is allowed only on faces of K.
std::vector<std::int64_t> polyhedral_betti(const quadrics::SimplicialComplex& k, int n, const int dims[3],
                                           bool real) {
  if (k.is_void()) return {};
  std::vector<std::vector<int>> cells;
  std::vector<int> state(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      Subset interior = 0;
      for (int j = 0; j < n; ++j) {
        if (state[static_cast<std::size_t>(j)] == 2) interior |= quadrics::singleton(j);
      }
      if (k.contains(interior)) cells.push_back(state);
      return;
    }
    for (int s = 0; s < 3; ++s) {
      state[static_cast<std::size_t>(i)] = s;
      rec(i + 1);
    }
  };
  rec(0);
  const auto dim_of = [&](const std::vector<int>& c) {
    int d = 0;
    for (int s : c) d += dims[s];
    return d;
  };
  int top = 0;
  for (const auto& c : cells) top = std::max(top, dim_of(c));
  std::vector<std::vector<std::vector<int>>> by_dim(static_cast<std::size_t>(top) + 1);
  for (const auto& c : cells) by_dim[static_cast<std::size_t>(dim_of(c))].push_back(c);
  for (auto& list : by_dim) std::sort(list.begin(), list.end());

  // rank of the boundary from dimension d to d - 1.
  const auto boundary_rank = [&](int d, std::int64_t p) -> std::int64_t {
    if (d <= 0 || d > top) return 0;
    const auto& source = by_dim[static_cast<std::size_t>(d)];
    const auto& target = by_dim[static_cast<std::size_t>(d - 1)];
    if (source.empty() || target.empty()) return 0;
    std::vector<std::vector<std::int64_t>> m(target.size(), std::vector<std::int64_t>(source.size(), 0));
    const auto add = [&](const std::vector<int>& face, std::size_t column, std::int64_t coefficient) {
      const auto it = std::lower_bound(target.begin(), target.end(), face);
      m[static_cast<std::size_t>(it - target.begin())][column] += coefficient;
    };
    for (std::size_t col = 0; col < source.size(); ++col) {
      const auto& c = source[col];
      int before = 0;
      for (int i = 0; i < n; ++i) {
        const int s = c[static_cast<std::size_t>(i)];
        const std::int64_t sign = before % 2 == 0 ? 1 : -1;
        std::vector<int> face = c;
        if (real && s == 2) {
          face[static_cast<std::size_t>(i)] = 1;
          add(face, col, sign);
          face[static_cast<std::size_t>(i)] = 0;
          add(face, col, -sign);
        } else if (!real && s == 2) {
          face[static_cast<std::size_t>(i)] = 1;
          add(face, col, sign);
        }
        before += dims[s];
      }
    }
    return rank_mod(std::move(m), p);
  };

  std::vector<std::int64_t> betti(static_cast<std::size_t>(top) + 1, 0);
  // Over F_p the Betti numbers exceed the rational ones only when p divides torsion.
  for (int d = 0; d <= top; ++d) {
    std::int64_t low = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t p : kPrimes) {
      low = std::min(low, static_cast<std::int64_t>(by_dim[static_cast<std::size_t>(d)].size()) -
                              boundary_rank(d, p) - boundary_rank(d + 1, p));
    }
    betti[static_cast<std::size_t>(d)] = low;
  }
  while (!betti.empty() && betti.back() == 0) betti.pop_back();
  return betti;
}

}  // namespace

std::vector<std::int64_t> real_moment_angle_betti(const quadrics::SimplicialComplex& k, int n) {
  static const int dims[3] = {0, 0, 1};
  return polyhedral_betti(k, n, dims, true);
}

std::vector<std::int64_t> complex_moment_angle_betti(const quadrics::SimplicialComplex& k, int n) {
  static const int dims[3] = {0, 1, 2};
  return polyhedral_betti(k, n, dims, false);
}

Configuration random_configuration(std::mt19937& rng, int k, int n, int range) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 3);
  MatrixQ m(k, n);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = Rational(num(rng), den(rng));
  }
  return Configuration(m);
}

Configuration random_valid_configuration(std::mt19937& rng, int k, int n, int range) {
  while (true) {
    Configuration cfg = random_configuration(rng, k, n, range);
    if (weakly_hyperbolic(cfg) && oracle::face_nonempty(cfg, 0)) return cfg;
  }
}

}  // namespace oracle
