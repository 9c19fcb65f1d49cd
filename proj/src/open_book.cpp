#include "quadrics/open_book.hpp"

#include "quadrics/feasibility.hpp"

#include <stdexcept>

namespace quadrics {

std::string to_string(Field field) { return field == Field::Real ? "real" : "complex"; }

char to_char(PageCase page_case) { return static_cast<char>('a' + static_cast<int>(page_case)); }

int PagePiece::dimension() const {
  switch (kind) {
    case Kind::SphereSphereDisk: return p + q + m;
    case Kind::SphereTimesDisk:
    case Kind::DiskTimesSphere: return p + q;
    case Kind::PuncturedProduct:
    case Kind::Exterior: return m;
  }
  return 0;
}

std::string PagePiece::symbolic() const {
  const auto s = [](int d) { return "S(" + std::to_string(d) + ")"; };
  const auto d = [](int e) { return "D(" + std::to_string(e) + ")"; };
  const std::string args = std::to_string(p) + "," + std::to_string(q) + ";" + std::to_string(m) + ")";
  switch (kind) {
    case Kind::SphereSphereDisk: return s(p) + " x " + s(q) + " x " + d(m);
    case Kind::SphereTimesDisk: return s(p) + " x " + d(q);
    case Kind::DiskTimesSphere: return d(p) + " x " + s(q);
    case Kind::PuncturedProduct: return "PP(" + args;
    case Kind::Exterior: return "E(" + args;
  }
  return {};
}

std::string PageDescription::symbolic() const {
  std::string out;
  for (const auto& piece : pieces) {
    if (!out.empty()) out += " #b ";
    out += piece.symbolic();
  }
  return out;
}

namespace {

using Kind = PagePiece::Kind;

// Z_+ of `r` at class 0.
PageDescription real_page(const CyclicPartition& r) {
  PageDescription page;
  const int n = r.n();
  const int ell = r.ell();
  const int m = r.classes();
  const std::vector<int> dv = d_values(r);
  // 1-based cyclic accessors.
  const auto d = [&](int i) { return dv[static_cast<std::size_t>(((i - 1) % m + m) % m)]; };
  const auto part = [&](int i) { return r.part(i - 1); };
  const auto sphere_disk = [&](int i) { return PagePiece{Kind::SphereTimesDisk, d(i) - 1, n - d(i) - 2, 0}; };
  const auto disk_sphere = [&](int i) { return PagePiece{Kind::DiskTimesSphere, d(i) - 1, n - d(i) - 2, 0}; };
  const auto disk_spheres_from = [&](int first) {
    for (int i = first; i <= m + 1; ++i) page.pieces.push_back(disk_sphere(i));
  };

  page.dimension = n - 3;
  if (ell == 1) {
    page.page_case = PageCase::A;
    page.pieces.push_back({Kind::SphereSphereDisk, part(2) - 1, part(3) - 1, part(1) - 1});
    return page;
  }
  if (part(1) > 1) {
    page.page_case = PageCase::B;
    for (int i = 2; i <= ell + 2; ++i) page.pieces.push_back(sphere_disk(i));
    disk_spheres_from(ell + 3);
  } else if (ell > 2) {
    page.page_case = PageCase::C;
    for (int i = 3; i <= ell + 1; ++i) page.pieces.push_back(sphere_disk(i));
    disk_spheres_from(ell + 3);
    page.pieces.push_back({Kind::PuncturedProduct, d(2) - 1, d(ell + 2) - 1, n - 3});
  } else {
    page.page_case = PageCase::D;
    page.pieces.push_back({Kind::PuncturedProduct, d(2) - 1, d(4) - 1, n - 3});
    page.pieces.push_back({Kind::Exterior, part(2) - 1, part(5) - 1, n - 3});
  }
  page.hypotheses.required_dimension = 6;
  page.hypotheses.dimension_ok = n - 3 >= 6;
  page.hypotheses.pi1_unverified = true;
  return page;
}

}  // namespace

CyclicPartition complex_page_partition(const CyclicPartition& partition, int class_index) {
  const CyclicPartition rotated = partition.rotated(class_index);
  std::vector<int> parts;
  for (int c = 0; c < rotated.classes(); ++c) parts.push_back(2 * rotated.part(c) - (c == 0 ? 1 : 0));
  return CyclicPartition(std::move(parts));
}

PageDescription page_topology(const CyclicPartition& partition, int class_index, Field field) {
  PageDescription page = real_page(field == Field::Complex ? complex_page_partition(partition, class_index)
                                                           : partition.rotated(class_index));
  page.field = field;
  page.partition = partition;
  page.class_index = ((class_index % partition.classes()) + partition.classes()) % partition.classes();
  if (field == Field::Complex) page.hypotheses = Hypotheses{.complex_case = true};
  page.hypotheses.h1_zero = page_homology(page).at(1).is_zero();
  return page;
}

GradedGroup exterior_homology(int p, int q, int m) {
  if (p < 0 || q < 0 || m <= p + q) {
    throw std::invalid_argument("exterior E(" + std::to_string(p) + "," + std::to_string(q) + ";" +
                                std::to_string(m) + ") needs p, q >= 0 and m > p + q");
  }
  GradedGroup out(0);
  out.add_free(0, 1);
  out.add_free(m - p - q - 1, 1);
  out.add_free(m - q - 1, 1);
  out.add_free(m - p - 1, 1);
  return out;
}

GradedGroup page_homology(const PageDescription& page) {
  if (page.pieces.empty()) throw std::invalid_argument("page description without pieces");
  if (page.page_case == PageCase::A) {
    const PagePiece& piece = page.pieces.front();
    return product_homology({{Factor::Type::Sphere, piece.p}, {Factor::Type::Sphere, piece.q}});
  }
  GradedGroup out(0);
  out.add_free(0, 1);
  for (const auto& piece : page.pieces) {
    if (piece.p < 0 || piece.q < 0) throw std::invalid_argument("negative dimension in " + piece.symbolic());
    switch (piece.kind) {
      case Kind::SphereSphereDisk:
        throw std::invalid_argument("S x S x D pieces only occur alone");
      case Kind::SphereTimesDisk: out.add_free(piece.p, 1); break;
      case Kind::DiskTimesSphere: out.add_free(piece.q, 1); break;
      case Kind::PuncturedProduct:
        if (piece.m != piece.p + piece.q) throw std::invalid_argument("punctured product " + piece.symbolic() + " needs m = p + q");
        out.add_free(piece.p, 1);
        out.add_free(piece.q, 1);
        break;
      case Kind::Exterior: {
        GradedGroup e = exterior_homology(piece.p, piece.q, piece.m);
        e.add_free(0, -1);
        out += e;
        break;
      }
    }
  }
  return out;
}

namespace {

std::optional<int> equal_partner(const Configuration& cfg, int i) {
  for (int j = 0; j < cfg.n(); ++j) {
    if (j != i && cfg.lambda(j) == cfg.lambda(i)) return j;
  }
  return std::nullopt;
}

void require_valid(const Configuration& cfg) {
  const ValidationReport report = validate(cfg);
  if (!report.ok) {
    throw ConfigurationError("configuration is not weakly hyperbolic: 0 in conv of " + format_subset(*report.witness));
  }
}

void require_index(const Configuration& cfg, int i) {
  if (i < 0 || i >= cfg.n()) {
    throw std::out_of_range("coordinate " + std::to_string(i + 1) + " out of range 1.." + std::to_string(cfg.n()));
  }
}

// Z with the given coordinate removed; nullopt when too few coordinates remain (Z empty).
std::optional<Configuration> remove_for_binding(const Configuration& cfg, int i) {
  if (cfg.n() - 1 < cfg.k() + 1) return std::nullopt;
  Configuration binding = delete_coordinate(cfg, i);
  if (!validate(binding).ok) throw std::domain_error("binding not smooth; open book invalid for this facet");
  return binding;
}

}  // namespace

OpenBookStructure open_book_real(const Configuration& cfg, int i, bool strict) {
  require_index(cfg, i);
  Configuration total = cfg;
  std::optional<int> partner = equal_partner(cfg, i);
  if (!partner) {
    if (strict) {
      throw ConfigurationError("coordinate " + std::to_string(i + 1) + " has no equal partner coordinate");
    }
    total = duplicate_coordinate(cfg, i);
    partner = i + 1;
  }
  require_valid(total);

  const int kept = *partner < i ? *partner : *partner - 1;
  Configuration page_source = delete_coordinate(total, i).with_distinguished(kept);
  std::optional<Configuration> binding = remove_for_binding(page_source, kept);

  OpenBookStructure book{Field::Real, total, page_source, binding, std::nullopt};
  if (page_source.k() == 2 && face_nonempty(page_source, 0)) {
    const NormalForm nf = normal_form(page_source);
    book.page = page_topology(nf.partition, nf.class_of[static_cast<std::size_t>(kept)], Field::Real);
  }
  return book;
}

OpenBookStructure open_book_complex(const Configuration& cfg, int i) {
  require_index(cfg, i);
  require_valid(cfg);
  const Configuration total = complexify(cfg);
  Configuration page_source = delete_coordinate(total, 2 * i + 1).with_distinguished(2 * i);
  std::optional<Configuration> binding;
  if (auto real_binding = remove_for_binding(cfg, i)) binding = complexify(*real_binding);

  OpenBookStructure book{Field::Complex, total, page_source, binding, std::nullopt};
  if (cfg.k() == 2 && face_nonempty(cfg, 0)) {
    const NormalForm nf = normal_form(cfg);
    book.page = page_topology(nf.partition, nf.class_of[static_cast<std::size_t>(i)], Field::Complex);
  }
  return book;
}

bool CheckReport::ok() const {
  for (const auto& c : checks) {
    if (c.applicable && !c.passed) return false;
  }
  return true;
}

namespace {

std::string ranks_text(const GradedGroup& g) {
  std::string out = "(";
  const auto r = g.ranks();
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(r[i]);
  }
  return out + ")";
}

Check make_check(std::string name, bool applicable, bool passed, std::string detail) {
  return Check{std::move(name), applicable, applicable && passed, std::move(detail)};
}

}  // namespace

CheckReport boundary_consistency(const OpenBookStructure& book, const HomologyOptions& options) {
  CheckReport report;
  const int dim_total = book.total.dimension();
  const int dim_page = book.page_source.dimension();
  const std::optional<int> dim_binding =
      book.binding ? std::optional<int>(book.binding->dimension()) : std::nullopt;

  {
    bool ok = dim_page == dim_total - 1 && (!dim_binding || *dim_binding == dim_total - 2);
    if (book.page) ok = ok && book.page->dimension == dim_page;
    std::string detail = "total " + std::to_string(dim_total) + ", page " + std::to_string(dim_page) + ", binding " +
                         (dim_binding ? std::to_string(*dim_binding) : std::string("empty"));
    report.checks.push_back(make_check("dimensions", true, ok, detail));
  }

  const GradedGroup page_h = homology_Zplus(book.page_source, options);
  if (book.page) {
    const GradedGroup described = page_homology(*book.page);
    report.checks.push_back(make_check("page-homology", true, described == page_h,
                                       book.page->symbolic() + " " + ranks_text(described) + " vs Z_+ " +
                                           ranks_text(page_h)));
  } else {
    report.checks.push_back(make_check("page-homology", false, false, "no symbolic page (k != 2 or empty page)"));
  }

  const std::int64_t chi_binding = book.binding ? euler_cellcount(*book.binding) : 0;
  const std::int64_t chi_page = page_h.euler_characteristic();
  {
    const std::int64_t factor = dim_page % 2 == 0 ? 0 : 2;
    report.checks.push_back(make_check("boundary-euler", true, chi_binding == factor * chi_page,
                                       "chi(binding) = " + std::to_string(chi_binding) + ", chi(page) = " +
                                           std::to_string(chi_page)));
  }
  const std::int64_t chi_total = euler_cellcount(book.total);
  report.checks.push_back(make_check("open-book-euler", true, chi_total == chi_binding,
                                     "chi(total) = " + std::to_string(chi_total) + ", chi(binding) = " +
                                         std::to_string(chi_binding)));

  if (book.binding && book.binding->k() == 2 && face_nonempty(*book.binding, 0)) {
    const GradedGroup actual = homology_Z(*book.binding, options);
    const ManifoldDescription closed = classify_real(normal_form(*book.binding).partition);
    const GradedGroup expected = expected_homology(closed);
    report.checks.push_back(make_check("binding-formula", true, actual.ranks() == expected.ranks(),
                                       closed.symbolic() + " " + ranks_text(expected) + " vs " + ranks_text(actual)));
  } else {
    report.checks.push_back(make_check("binding-formula", false, false, "needs k = 2 and a nonempty binding"));
  }

  const std::int64_t chi_z = euler_cellcount(book.page_source);
  report.checks.push_back(make_check("doubling", true, chi_z == 2 * chi_page - chi_binding,
                                     "chi(Z) = " + std::to_string(chi_z) + ", chi(Z_+) = " + std::to_string(chi_page) +
                                         ", chi(Z_0) = " + std::to_string(chi_binding)));
  return report;
}

}  // namespace quadrics
