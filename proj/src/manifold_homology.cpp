#include "quadrics/manifold_homology.hpp"

#include <atomic>
#include <thread>

namespace quadrics {

std::string to_string(Space space) {
  switch (space) {
    case Space::Z:
      return "Z";
    case Space::ZC:
      return "ZC";
    case Space::Zplus:
      return "Zplus";
  }
  return "?";
}

GradedGroup pair_homology(const SimplicialComplex& dual, Subset subset) {
  if (dual.is_void()) return GradedGroup(0);
  GradedGroup g = reduced_homology(dual.full_subcomplex(subset)).shifted(1);
  return g;
}

GradedGroup pair_homology(const Configuration& cfg, Subset subset) {
  return pair_homology(dual_complex(cfg), subset);
}

namespace {

// Coordinates with equal coefficient vectors are interchangeable, so H_*(P, P_J)
// only depends on how many members of each such class J contains. One
// representative J is computed per count vector ("type").
struct TypeTable {
  std::vector<Subset> classes;
  std::vector<std::int64_t> strides;
  std::int64_t count = 1;

  TypeTable(std::vector<Subset> cls) : classes(std::move(cls)) {
    for (Subset c : classes) {
      strides.push_back(count);
      count *= cardinality(c) + 1;
    }
  }

  std::int64_t type_of(Subset j) const {
    std::int64_t t = 0;
    for (std::size_t g = 0; g < classes.size(); ++g) t += cardinality(j & classes[g]) * strides[g];
    return t;
  }

  Subset representative(std::int64_t t) const {
    Subset j = 0;
    for (std::size_t g = 0; g < classes.size(); ++g) {
      const auto c = static_cast<int>((t / strides[g]) % (cardinality(classes[g]) + 1));
      Subset members_left = classes[g];
      for (int i = 0; i < c; ++i) {
        const Subset low = members_left & (~members_left + 1);
        j |= low;
        members_left &= ~low;
      }
    }
    return j;
  }

  std::int64_t multiplicity(std::int64_t t) const {
    std::int64_t m = 1;
    for (std::size_t g = 0; g < classes.size(); ++g) {
      const std::int64_t size = cardinality(classes[g]);
      const std::int64_t c = (t / strides[g]) % (size + 1);
      std::int64_t binom = 1;
      for (std::int64_t i = 1; i <= c; ++i) binom = binom * (size - c + i) / i;
      m *= binom;
    }
    return m;
  }
};

GradedGroup scaled(const GradedGroup& g, std::int64_t times) {
  GradedGroup out(g.lowest_degree());
  for (int d = g.lowest_degree(); d <= g.top_degree(); ++d) {
    AbelianGroup a = g.at(d);
    AbelianGroup s;
    s.rank = a.rank * times;
    for (std::int64_t i = 0; i < times; ++i) s.torsion.insert(s.torsion.end(), a.torsion.begin(), a.torsion.end());
    out.add(d, s);
  }
  return out;
}

struct Splitter {
  SimplicialComplex dual;
  Subset excluded = 0;
  TypeTable types;
  std::vector<GradedGroup> per_type;
};

Splitter compute(const Configuration& cfg, Space space, const HomologyOptions& options) {
  if (cfg.n() > options.max_n) {
    throw SizeCapError("n = " + std::to_string(cfg.n()) + " exceeds the subset cap " +
                       std::to_string(options.max_n) + " (2^n pairs (P, P_J) would be enumerated)");
  }
  SimplicialComplex dual = dual_complex(cfg);
  Subset excluded = 0;
  std::vector<Subset> classes;
  for (Subset c : coordinate_classes(cfg)) {
    if (space == Space::Zplus && contains(c, cfg.distinguished())) {
      excluded = singleton(cfg.distinguished());
      c &= ~excluded;
      if (c == 0) continue;
    }
    classes.push_back(c);
  }
  TypeTable types(std::move(classes));
  std::vector<GradedGroup> per_type(static_cast<std::size_t>(types.count));

  auto work = [&](std::int64_t t) { per_type[static_cast<std::size_t>(t)] = pair_homology(dual, types.representative(t)); };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1 || types.count < 2) {
    for (std::int64_t t = 0; t < types.count; ++t) work(t);
  } else {
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) {
      pool.emplace_back([&] {
        for (std::int64_t t = next++; t < types.count; t = next++) work(t);
      });
    }
    for (auto& th : pool) th.join();
  }
  return Splitter{std::move(dual), excluded, std::move(types), std::move(per_type)};
}

GradedGroup space_group(const GradedGroup& pair, Space space, Subset j) {
  return space == Space::ZC ? pair.shifted(cardinality(j)) : pair;
}

GradedGroup total_of(const Splitter& s, Space space) {
  GradedGroup total(0);
  for (std::int64_t t = 0; t < s.types.count; ++t) {
    const GradedGroup& g = s.per_type[static_cast<std::size_t>(t)];
    if (g.is_zero()) continue;
    total += scaled(space_group(g, space, s.types.representative(t)), s.types.multiplicity(t));
  }
  return total;
}

}  // namespace

SplittingLedger splitting(const Configuration& cfg, Space space, const HomologyOptions& options) {
  Splitter s = compute(cfg, space, options);
  SplittingLedger ledger;
  ledger.space = space;
  ledger.total = total_of(s, space);
  const Subset all = full_set(cfg.n());
  for (Subset j = 0;; ++j) {
    if ((j & s.excluded) == 0) {
      const GradedGroup& g = s.per_type[static_cast<std::size_t>(s.types.type_of(j))];
      if (!g.is_zero()) ledger.contributions.push_back({j, space_group(g, space, j)});
    }
    if (j == all) break;
  }
  return ledger;
}

GradedGroup homology(const Configuration& cfg, Space space, const HomologyOptions& options) {
  return total_of(compute(cfg, space, options), space);
}

GradedGroup homology_Z(const Configuration& cfg, const HomologyOptions& options) {
  return homology(cfg, Space::Z, options);
}
GradedGroup homology_Zplus(const Configuration& cfg, const HomologyOptions& options) {
  return homology(cfg, Space::Zplus, options);
}
GradedGroup homology_ZC(const Configuration& cfg, const HomologyOptions& options) {
  return homology(cfg, Space::ZC, options);
}

std::int64_t euler_cellcount(const Configuration& cfg) {
  const SimplicialComplex dual = dual_complex(cfg);
  const int top = cfg.dimension();
  std::int64_t chi = 0;
  for (Subset face : dual.faces()) {
    const int size = cardinality(face);
    const std::int64_t copies = std::int64_t{1} << (cfg.n() - size);
    chi += ((top - size) % 2 == 0 ? 1 : -1) * copies;
  }
  return chi;
}

}  // namespace quadrics
