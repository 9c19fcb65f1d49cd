#include "quadrics/cyclic.hpp"

#include "quadrics/feasibility.hpp"
#include "quadrics/simplicial_complex.hpp"

#include <algorithm>
#include <numeric>

namespace quadrics {

CyclicPartition::CyclicPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.size() < 3 || parts_.size() % 2 == 0) {
    throw std::invalid_argument("a cyclic partition needs an odd number >= 3 of parts, got " +
                                std::to_string(parts_.size()));
  }
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
  }
}

int CyclicPartition::n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int CyclicPartition::part(int i) const {
  const int m = classes();
  return parts_[static_cast<std::size_t>(((i % m) + m) % m)];
}

CyclicPartition CyclicPartition::rotated(int start) const {
  std::vector<int> out;
  for (int i = 0; i < classes(); ++i) out.push_back(part(start + i));
  return CyclicPartition(std::move(out));
}

CyclicPartition CyclicPartition::reflected() const {
  std::vector<int> out(parts_.rbegin(), parts_.rend());
  return CyclicPartition(std::move(out));
}

CyclicPartition CyclicPartition::canonical() const {
  CyclicPartition best = *this;
  const CyclicPartition mirror = reflected();
  for (int s = 0; s < classes(); ++s) {
    for (const auto* base : {this, &mirror}) {
      CyclicPartition candidate = base->rotated(s);
      if (candidate.parts_ < best.parts_) best = std::move(candidate);
    }
  }
  return best;
}

std::string CyclicPartition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

namespace {

// 0 for directions in [0, pi), 1 for [pi, 2 pi).
int half_plane(const Rational& x, const Rational& y) { return (y > 0 || (y == 0 && x > 0)) ? 0 : 1; }

struct Direction {
  Rational x, y;
  int coordinate;  // -1 marks an antipode
};

bool angle_less(const Direction& a, const Direction& b) {
  const int ha = half_plane(a.x, a.y), hb = half_plane(b.x, b.y);
  if (ha != hb) return ha < hb;
  return a.x * b.y - a.y * b.x > 0;
}

// Square-boundary point with perimeter parameter s in [0, 8).
std::pair<Rational, Rational> square_point(const Rational& s) {
  if (s < 1) return {Rational(1), s};
  if (s < 3) return {Rational(2) - s, Rational(1)};
  if (s < 5) return {Rational(-1), Rational(4) - s};
  if (s < 7) return {s - Rational(6), Rational(-1)};
  return {Rational(1), s - Rational(8)};
}

}  // namespace

Configuration realize(const CyclicPartition& partition) {
  const int m = partition.classes();
  MatrixQ lambdas(2, partition.n());
  int column = 0;
  for (int j = 0; j < m; ++j) {
    auto [x, y] = square_point(Rational(8 * j, m));
    for (int c = 0; c < partition.part(j); ++c) {
      lambdas(0, column) = x * m;
      lambdas(1, column) = y * m;
      ++column;
    }
  }
  return Configuration(std::move(lambdas));
}

NormalForm normal_form(const Configuration& cfg) {
  if (cfg.k() != 2) throw ConfigurationError("the cyclic normal form needs k = 2, got k = " + std::to_string(cfg.k()));
  const auto report = validate(cfg);
  if (!report.ok) {
    throw ConfigurationError("configuration is not weakly hyperbolic: 0 in conv of " + format_subset(*report.witness));
  }
  if (!face_nonempty(cfg, 0)) throw ConfigurationError("the polytope is empty, so the variety is empty");

  std::vector<Direction> dirs;
  for (int i = 0; i < cfg.n(); ++i) {
    const Rational x = cfg.lambdas()(0, i), y = cfg.lambdas()(1, i);
    dirs.push_back({x, y, i});
    dirs.push_back({-x, -y, -1});
  }
  std::stable_sort(dirs.begin(), dirs.end(), angle_less);

  // Start right after an antipode followed by a direction so that no run wraps.
  const std::size_t total = dirs.size();
  std::size_t start = 0;
  for (std::size_t i = 0; i < total; ++i) {
    if (dirs[i].coordinate < 0 && dirs[(i + 1) % total].coordinate >= 0) {
      start = (i + 1) % total;
      break;
    }
  }
  std::vector<std::vector<int>> runs;
  bool in_run = false;
  for (std::size_t step = 0; step < total; ++step) {
    const Direction& d = dirs[(start + step) % total];
    if (d.coordinate < 0) {
      in_run = false;
      continue;
    }
    if (!in_run) runs.emplace_back();
    in_run = true;
    runs.back().push_back(d.coordinate);
  }
  const int m = static_cast<int>(runs.size());
  if (m < 3 || m % 2 == 0) {
    throw OracleMismatch("angular runs gave " + std::to_string(m) + " classes; expected an odd number >= 3");
  }

  std::vector<int> sizes;
  for (const auto& r : runs) sizes.push_back(static_cast<int>(r.size()));
  const CyclicPartition raw(sizes);

  // Canonical representative and the induced relabelling of class positions.
  CyclicPartition best = raw;
  int best_start = 0;
  bool best_reflected = false;
  for (int s = 0; s < m; ++s) {
    for (bool refl : {false, true}) {
      const CyclicPartition candidate = refl ? raw.reflected().rotated(s) : raw.rotated(s);
      if (candidate.parts() < best.parts()) {
        best = candidate;
        best_start = s;
        best_reflected = refl;
      }
    }
  }
  std::vector<int> class_of(static_cast<std::size_t>(cfg.n()));
  for (int c = 0; c < m; ++c) {
    // reflected().rotated(s) lists raw classes m-1-s, m-2-s, ...
    const int position = best_reflected ? ((m - 1 - best_start - c) % m + m) % m : ((c - best_start) % m + m) % m;
    for (int i : runs[static_cast<std::size_t>(c)]) class_of[static_cast<std::size_t>(i)] = position;
  }

  // Self-check against the polygon realization under the induced coordinate map.
  const Configuration model = realize(best);
  std::vector<int> offset(static_cast<std::size_t>(m), 0);
  for (int c = 1; c < m; ++c) offset[static_cast<std::size_t>(c)] = offset[static_cast<std::size_t>(c - 1)] + best.part(c - 1);
  std::vector<int> target(static_cast<std::size_t>(cfg.n()));
  for (int i = 0; i < cfg.n(); ++i) target[static_cast<std::size_t>(i)] = offset[static_cast<std::size_t>(class_of[static_cast<std::size_t>(i)])]++;

  const SimplicialComplex mine = dual_complex(cfg);
  const SimplicialComplex theirs = dual_complex(model);
  const auto faces = mine.faces();
  const bool same_count = faces.size() == theirs.faces().size();
  const bool all_mapped = std::all_of(faces.begin(), faces.end(), [&](Subset f) {
    Subset g = 0;
    for (int i : members(f)) g |= singleton(target[static_cast<std::size_t>(i)]);
    return theirs.contains(g);
  });
  if (!same_count || !all_mapped) {
    throw OracleMismatch("normal form " + best.to_string() +
                         " does not reproduce the dual complex of the configuration");
  }
  int anchor = 0;
  for (int c = 0; c < m; ++c) {
    const auto& run = runs[static_cast<std::size_t>(c)];
    if (std::find(run.begin(), run.end(), cfg.distinguished()) != run.end()) anchor = c;
  }
  return NormalForm{best, std::move(class_of), raw.rotated(anchor)};
}

std::vector<CyclicPartition> compositions(int max_n) {
  std::vector<CyclicPartition> out;
  std::vector<int> parts;
  // Compositions of n into m positive parts, in lexicographic order.
  const auto extend = [&](auto&& self, int remaining, int slots) -> void {
    if (slots == 0) {
      if (remaining == 0) out.emplace_back(parts);
      return;
    }
    for (int first = 1; first <= remaining - (slots - 1); ++first) {
      parts.push_back(first);
      self(self, remaining - first, slots - 1);
      parts.pop_back();
    }
  };
  for (int n = 3; n <= max_n; ++n) {
    for (int m = 3; m <= n; m += 2) extend(extend, n, m);
  }
  return out;
}

std::vector<CyclicPartition> canonical_partitions(int max_n) {
  std::vector<CyclicPartition> out;
  for (auto& p : compositions(max_n)) {
    if (p.is_canonical()) out.push_back(std::move(p));
  }
  return out;
}

std::vector<int> d_values(const CyclicPartition& partition) {
  std::vector<int> d;
  for (int i = 0; i < partition.classes(); ++i) {
    int sum = 0;
    for (int t = 0; t < partition.ell(); ++t) sum += partition.part(i + t);
    d.push_back(sum);
  }
  return d;
}

std::vector<std::string> Hypotheses::flags() const {
  std::vector<std::string> out;
  if (complex_case) out.emplace_back("complex-case");
  if (h1_zero) out.emplace_back("h1-zero");
  if (required_dimension > 0) {
    out.push_back("dim>=" + std::to_string(required_dimension) + (dimension_ok ? ":holds" : ":fails"));
  }
  if (pi1_unverified) out.emplace_back("pi1-unverified");
  return out;
}

namespace {

Summand spheres(std::initializer_list<int> dims) {
  Summand s;
  for (int d : dims) s.push_back({Factor::Type::Sphere, d});
  return s;
}

}  // namespace

ManifoldDescription classify_real(const CyclicPartition& p) {
  ManifoldDescription m;
  const int n = p.n();
  m.dimension = n - 3;
  if (p.ell() == 1) {
    m.kind = ManifoldKind::SphereProductTriple;
    m.summands.push_back(spheres({p.part(0) - 1, p.part(1) - 1, p.part(2) - 1}));
  } else {
    m.kind = ManifoldKind::ConnectedSum;
    for (int d : d_values(p)) m.summands.push_back(spheres({d - 1, n - d - 2}));
    m.hypotheses.required_dimension = 5;
    m.hypotheses.dimension_ok = m.dimension >= 5;
    m.hypotheses.pi1_unverified = true;
  }
  m.hypotheses.h1_zero = expected_homology(m).at(1).is_zero();
  return m;
}

ManifoldDescription classify_complex(const CyclicPartition& p) {
  ManifoldDescription m;
  const int n = p.n();
  m.dimension = 2 * n - 3;
  m.hypotheses.complex_case = true;
  if (p.ell() == 1) {
    m.kind = ManifoldKind::SphereProductTriple;
    m.summands.push_back(spheres({2 * p.part(0) - 1, 2 * p.part(1) - 1, 2 * p.part(2) - 1}));
  } else {
    m.kind = ManifoldKind::ConnectedSum;
    for (int d : d_values(p)) m.summands.push_back(spheres({2 * d - 1, 2 * n - 2 * d - 2}));
  }
  m.hypotheses.h1_zero = expected_homology(m).at(1).is_zero();
  return m;
}

GradedGroup product_homology(const Summand& product) {
  std::vector<std::int64_t> ranks{1};
  for (const auto& f : product) {
    if (f.type == Factor::Type::Disk) continue;
    std::vector<std::int64_t> next(ranks.size() + static_cast<std::size_t>(f.dim), 0);
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      next[i] += ranks[i];
      next[i + static_cast<std::size_t>(f.dim)] += ranks[i];
    }
    ranks = std::move(next);
  }
  return GradedGroup::free(ranks);
}

GradedGroup expected_homology(const ManifoldDescription& manifold) {
  for (const auto& s : manifold.summands) {
    for (const auto& f : s) {
      if (f.type == Factor::Type::Disk) {
        throw std::invalid_argument("expected_homology takes closed manifolds; " + symbolic(s) + " has boundary");
      }
    }
  }
  if (manifold.kind == ManifoldKind::SphereProductTriple) return product_homology(manifold.summands.front());

  GradedGroup out(0);
  out.add_free(0, 1);
  out.add_free(manifold.dimension, 1);
  for (const auto& s : manifold.summands) {
    const GradedGroup g = product_homology(s);
    for (int d = 1; d < manifold.dimension; ++d) out.add(d, g.at(d));
  }
  return out;
}

std::string symbolic(const Summand& product) {
  std::string out;
  for (const auto& f : product) {
    if (!out.empty()) out += " x ";
    out += (f.type == Factor::Type::Sphere ? "S^" : "D^") + std::to_string(f.dim);
  }
  return out;
}

std::string ManifoldDescription::symbolic() const {
  std::string out;
  if (kind == ManifoldKind::SphereProductTriple) {
    out = quadrics::symbolic(summands.front());
  } else {
    const bool uniform =
        std::all_of(summands.begin(), summands.end(), [&](const Summand& s) { return s == summands.front(); });
    if (uniform) {
      out = "#_" + std::to_string(summands.size()) + "(" + quadrics::symbolic(summands.front()) + ")";
    } else {
      for (const auto& s : summands) {
        if (!out.empty()) out += " # ";
        out += "(" + quadrics::symbolic(s) + ")";
      }
    }
    const bool surface = dimension == 2 && std::all_of(summands.begin(), summands.end(), [](const Summand& s) {
                           return s == spheres({1, 1});
                         });
    if (surface) out += " [genus " + std::to_string(summands.size()) + " surface]";
  }
  return out;
}

std::string ManifoldDescription::statement() const {
  if (kind == ManifoldKind::ConnectedSum && !hypotheses.complex_case) {
    return "diffeomorphic provided Z, Z_0 simply connected";
  }
  return "diffeomorphic";
}

}  // namespace quadrics
