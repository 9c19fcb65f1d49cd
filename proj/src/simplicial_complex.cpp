#include "quadrics/simplicial_complex.hpp"

#include "quadrics/feasibility.hpp"
#include "quadrics/smith.hpp"

#include <algorithm>
#include <bit>

namespace quadrics {

namespace {

std::shared_ptr<std::vector<std::uint8_t>> make_indicator(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw std::invalid_argument("simplicial complex ground size " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxGroundSize) + "]");
  }
  return std::make_shared<std::vector<std::uint8_t>>(std::size_t{1} << n, 0);
}

int highest_member(Subset s) { return s == 0 ? -1 : 31 - std::countl_zero(s); }

}  // namespace

std::vector<Subset> maximal_elements(std::vector<Subset> family) {
  std::sort(family.begin(), family.end(), [](Subset a, Subset b) {
    const int ca = cardinality(a), cb = cardinality(b);
    return ca != cb ? ca > cb : a < b;
  });
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<Subset> kept;
  for (Subset s : family) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [s](Subset m) { return is_subset(s, m); });
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

SimplicialComplex::SimplicialComplex(int n, Subset ground, std::vector<Subset> facets,
                                     std::shared_ptr<const std::vector<std::uint8_t>> indicator)
    : n_(n), ground_(ground), facets_(std::move(facets)), indicator_(std::move(indicator)) {}

SimplicialComplex::SimplicialComplex(int n, Subset ground, const std::vector<Subset>& generators)
    : n_(n), ground_(ground) {
  auto indicator = make_indicator(n);
  if (!is_subset(ground, full_set(n))) throw std::invalid_argument("ground set exceeds ambient size");
  for (Subset g : generators) {
    if (!is_subset(g, ground)) throw std::invalid_argument("face " + format_subset(g) + " outside ground set");
    // Mark every subset of g.
    for (Subset s = g;; s = (s - 1) & g) {
      (*indicator)[s] = 1;
      if (s == 0) break;
    }
  }
  facets_ = maximal_elements(generators);
  indicator_ = std::move(indicator);
}

SimplicialComplex SimplicialComplex::void_complex(int n, Subset ground) { return SimplicialComplex(n, ground, {}); }

SimplicialComplex SimplicialComplex::empty_face_only(int n, Subset ground) {
  return SimplicialComplex(n, ground, std::vector<Subset>{0});
}

Subset SimplicialComplex::vertices() const {
  Subset v = 0;
  for (Subset f : facets_) v |= f;
  return v;
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  int best = 0;
  for (Subset f : facets_) best = std::max(best, cardinality(f));
  return best - 1;
}

std::vector<Subset> SimplicialComplex::faces() const {
  std::vector<Subset> out;
  if (is_void()) return out;
  std::vector<Subset> stack{0};
  while (!stack.empty()) {
    const Subset face = stack.back();
    stack.pop_back();
    out.push_back(face);
    for (int v = highest_member(face) + 1; v < n_; ++v) {
      const Subset next = face | singleton(v);
      if (contains(next)) stack.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) {
    const int ca = cardinality(a), cb = cardinality(b);
    return ca != cb ? ca < cb : a < b;
  });
  return out;
}

std::vector<std::int64_t> SimplicialComplex::face_counts() const {
  std::vector<std::int64_t> f;
  for (Subset s : faces()) {
    const auto size = static_cast<std::size_t>(cardinality(s));
    if (f.size() <= size) f.resize(size + 1, 0);
    ++f[size];
  }
  return f;
}

std::optional<int> SimplicialComplex::cone_apex() const {
  if (facets_.empty()) return std::nullopt;
  Subset common = ground_;
  for (Subset f : facets_) common &= f;
  if (common == 0) return std::nullopt;
  return std::countr_zero(common);
}

SimplicialComplex SimplicialComplex::full_subcomplex(Subset subset) const {
  const Subset ground = ground_ & subset;
  if (is_void()) return SimplicialComplex(n_, ground, {}, indicator_);
  std::vector<Subset> restricted;
  restricted.reserve(facets_.size());
  for (Subset f : facets_) restricted.push_back(f & subset);
  return SimplicialComplex(n_, ground, maximal_elements(std::move(restricted)), indicator_);
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
  return a.n_ == b.n_ && a.ground_ == b.ground_ && a.facets_ == b.facets_;
}

SimplicialComplex full_subcomplex(const SimplicialComplex& complex, Subset subset) {
  return complex.full_subcomplex(subset);
}

SimplicialComplex cone(const SimplicialComplex& complex, int apex) {
  if (contains(complex.ground(), apex)) throw std::invalid_argument("cone apex already in the ground set");
  std::vector<Subset> generators;
  for (Subset f : complex.facets()) generators.push_back(f | singleton(apex));
  if (generators.empty()) generators.push_back(singleton(apex));
  return SimplicialComplex(complex.ambient_size(), complex.ground() | singleton(apex), generators);
}

namespace {

template <typename Scalar>
std::vector<SparseColumn<Scalar>> boundary_columns(const std::vector<Subset>& cells,
                                                   const std::vector<Subset>& faces) {
  std::vector<SparseColumn<Scalar>> cols;
  cols.reserve(cells.size());
  for (Subset cell : cells) {
    SparseColumn<Scalar> col;
    int position = 0;
    for (Subset rest = cell; rest != 0; rest &= rest - 1, ++position) {
      const Subset face = cell & ~(rest & (~rest + 1));
      const auto row = std::lower_bound(faces.begin(), faces.end(), face) - faces.begin();
      col.emplace_back(static_cast<std::int32_t>(row), Scalar(position % 2 == 0 ? 1 : -1));
    }
    std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    cols.push_back(std::move(col));
  }
  return cols;
}

// Invariant factors of the boundary map from `cells` to `faces`, as int64.
std::vector<std::int64_t> boundary_invariants(const std::vector<Subset>& cells, const std::vector<Subset>& faces) {
  const auto rows = static_cast<std::int32_t>(faces.size());
  try {
    return invariant_factors<std::int64_t>(boundary_columns<std::int64_t>(cells, faces), rows);
  } catch (const IntegerOverflow&) {
    std::vector<std::int64_t> out;
    for (const Integer& d : invariant_factors<Integer>(boundary_columns<Integer>(cells, faces), rows)) {
      if (d > Integer(std::numeric_limits<std::int64_t>::max())) {
        throw std::overflow_error("torsion coefficient exceeds 64 bits");
      }
      out.push_back(d.convert_to<std::int64_t>());
    }
    return out;
  }
}

}  // namespace

GradedGroup reduced_homology(const SimplicialComplex& complex) {
  GradedGroup out(-1);
  if (complex.is_void()) {
    out.add_free(-1, 1);
    return out;
  }
  if (complex.cone_apex()) return out;

  std::vector<std::vector<Subset>> by_size;
  for (Subset f : complex.faces()) {
    const auto size = static_cast<std::size_t>(cardinality(f));
    if (by_size.size() <= size) by_size.resize(size + 1);
    by_size[size].push_back(f);
  }
  const std::size_t top = by_size.size() - 1;

  // factors[s]: invariant factors of the boundary from size-s faces to size-(s-1) faces.
  std::vector<std::vector<std::int64_t>> factors(top + 2);
  for (std::size_t s = 1; s <= top; ++s) factors[s] = boundary_invariants(by_size[s], by_size[s - 1]);

  for (std::size_t s = 0; s <= top; ++s) {
    AbelianGroup g;
    g.rank = static_cast<std::int64_t>(by_size[s].size()) - static_cast<std::int64_t>(factors[s].size()) -
             static_cast<std::int64_t>(factors[s + 1].size());
    for (auto d : factors[s + 1]) {
      if (d > 1) g.torsion.push_back(d);
    }
    out.add(static_cast<int>(s) - 1, g);
  }
  return out;
}

SimplicialComplex dual_complex(const Configuration& cfg) {
  const int n = cfg.n();
  auto indicator = make_indicator(n);
  const Subset ground = full_set(n);

  std::vector<Subset> supports;
  auto record = [&](const VectorQ& point) {
    Subset support = 0;
    for (int i = 0; i < n; ++i) {
      if (point(i) != 0) support |= singleton(i);
    }
    supports.push_back(support);
  };

  auto origin = point_in_face(cfg, 0);
  if (!origin) return SimplicialComplex::void_complex(n, ground);
  record(*origin);
  (*indicator)[0] = 1;

  // Level-by-level search; a candidate is tested only if all its codimension-one
  // subsets are faces. A known point of P vanishing on the candidate settles it
  // without another LP.
  std::vector<Subset> level{0};
  std::vector<Subset> all_faces{0};
  while (!level.empty()) {
    std::vector<Subset> next;
    for (Subset face : level) {
      for (int v = highest_member(face) + 1; v < n; ++v) {
        const Subset candidate = face | singleton(v);
        bool boundary_ok = true;
        for (Subset rest = candidate; rest != 0 && boundary_ok; rest &= rest - 1) {
          boundary_ok = (*indicator)[candidate & ~(rest & (~rest + 1))] != 0;
        }
        if (!boundary_ok) continue;
        bool is_face = std::any_of(supports.begin(), supports.end(),
                                   [candidate](Subset s) { return (s & candidate) == 0; });
        if (!is_face) {
          if (auto point = point_in_face(cfg, candidate)) {
            record(*point);
            is_face = true;
          }
        }
        if (is_face) {
          (*indicator)[candidate] = 1;
          next.push_back(candidate);
          all_faces.push_back(candidate);
        }
      }
    }
    level = std::move(next);
  }

  std::vector<Subset> facets;
  for (Subset face : all_faces) {
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (!contains(face, v) && (*indicator)[face | singleton(v)]) maximal = false;
    }
    if (maximal) facets.push_back(face);
  }
  std::sort(facets.begin(), facets.end());
  return SimplicialComplex(n, ground, std::move(facets), std::move(indicator));
}

}  // namespace quadrics
