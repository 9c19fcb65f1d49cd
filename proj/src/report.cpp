#include "quadrics/report.hpp"

#include "quadrics/feasibility.hpp"
#include "quadrics/simplicial_complex.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <limits>
#include <regex>
#include <sstream>

namespace quadrics {

namespace {

const std::vector<std::string> kConfigFields{"schema", "k", "n", "lambdas", "labels", "distinguished", "partition"};

[[noreturn]] void fail(const std::string& message) { throw ParseError(message); }

int as_int(const Json& value, const std::string& field) {
  if (!value.is_number_integer()) fail("field '" + field + "' must be an integer");
  const auto v = value.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    fail("field '" + field + "' is out of range");
  }
  return static_cast<int>(v);
}

Rational as_rational(const Json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (!value.is_string()) fail(where + " must be an integer or a \"p/q\" string");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(where + ": " + e.what());
  }
}

std::string ranks_text(const std::vector<std::int64_t>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out + ")";
}

std::string ints_text(const std::vector<int>& values) {
  return ranks_text(std::vector<std::int64_t>(values.begin(), values.end()));
}

std::vector<Subset> sorted_by_size(std::vector<Subset> family) {
  std::sort(family.begin(), family.end(), [](Subset a, Subset b) {
    if (cardinality(a) != cardinality(b)) return cardinality(a) < cardinality(b);
    return lex_less(a, b);
  });
  return family;
}

}  // namespace

Input parse_input(const Json& document) {
  if (!document.is_object()) fail("input must be a JSON object");
  for (const auto& [key, value] : document.items()) {
    if (std::find(kConfigFields.begin(), kConfigFields.end(), key) == kConfigFields.end()) {
      fail("unknown field '" + key + "'");
    }
  }
  if (!document.contains("schema")) fail("missing field 'schema'");
  if (as_int(document["schema"], "schema") != 1) fail("unsupported schema version; expected 1");

  std::optional<int> distinguished;
  if (document.contains("distinguished")) distinguished = as_int(document["distinguished"], "distinguished");

  std::optional<Configuration> config;
  std::optional<CyclicPartition> partition;
  if (document.contains("partition")) {
    for (const char* other : {"k", "n", "lambdas", "labels"}) {
      if (document.contains(other)) fail(std::string("'partition' excludes '") + other + "'");
    }
    const Json& parts = document["partition"];
    if (!parts.is_array()) fail("field 'partition' must be an array of positive integers");
    std::vector<int> values;
    for (const auto& p : parts) values.push_back(as_int(p, "partition"));
    try {
      partition = CyclicPartition(values);
    } catch (const std::invalid_argument& e) {
      fail(std::string("field 'partition': ") + e.what());
    }
    config = realize(*partition);
  } else {
    for (const char* required : {"k", "n", "lambdas"}) {
      if (!document.contains(required)) fail(std::string("missing field '") + required + "'");
    }
    const int k = as_int(document["k"], "k");
    const int n = as_int(document["n"], "n");
    const Json& lambdas = document["lambdas"];
    if (k < 1) fail("field 'k' must be positive");
    if (!lambdas.is_array() || static_cast<int>(lambdas.size()) != n) {
      fail("field 'lambdas' must be an array of n = " + std::to_string(n) + " vectors");
    }
    MatrixQ matrix(k, n);
    for (int i = 0; i < n; ++i) {
      const Json& column = lambdas[static_cast<std::size_t>(i)];
      if (!column.is_array() || static_cast<int>(column.size()) != k) {
        fail("lambda " + std::to_string(i + 1) + " must have k = " + std::to_string(k) + " entries");
      }
      for (int r = 0; r < k; ++r) {
        matrix(r, i) = as_rational(column[static_cast<std::size_t>(r)],
                                   "lambda " + std::to_string(i + 1) + " entry " + std::to_string(r + 1));
      }
    }
    std::vector<std::string> labels;
    if (document.contains("labels")) {
      const Json& l = document["labels"];
      if (!l.is_array()) fail("field 'labels' must be an array of strings");
      for (const auto& s : l) {
        if (!s.is_string()) fail("field 'labels' must be an array of strings");
        labels.push_back(s.get<std::string>());
      }
    }
    config = Configuration(std::move(matrix), std::move(labels));
  }
  if (distinguished) config = config->with_distinguished(*distinguished - 1);
  return Input{std::move(*config), std::move(partition)};
}

Input parse_input_text(std::string_view text) {
  Json document;
  try {
    document = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  return parse_input(document);
}

CyclicPartition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view token = text.substr(start, comma - start);
    int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
      fail("bad partition '" + std::string(text) + "'; expected comma-separated positive integers");
    }
    parts.push_back(value);
    start = comma + 1;
  }
  try {
    return CyclicPartition(parts);
  } catch (const std::invalid_argument& e) {
    fail(std::string("bad partition: ") + e.what());
  }
}

Json configuration_to_json(const Configuration& cfg) {
  Json lambdas = Json::array();
  for (int i = 0; i < cfg.n(); ++i) {
    Json column = Json::array();
    for (int r = 0; r < cfg.k(); ++r) column.push_back(to_string(cfg.lambdas()(r, i)));
    lambdas.push_back(std::move(column));
  }
  return Json{{"schema", 1},
              {"k", cfg.k()},
              {"n", cfg.n()},
              {"lambdas", std::move(lambdas)},
              {"labels", cfg.labels()},
              {"distinguished", cfg.distinguished() + 1}};
}

Json graded_group_to_json(const GradedGroup& group) {
  Json out = Json::array();
  for (int d = group.lowest_degree(); d <= group.top_degree(); ++d) {
    const AbelianGroup g = group.at(d);
    out.push_back(Json{{"degree", d}, {"rank", g.rank}, {"torsion", g.torsion}});
  }
  return out;
}

Json subset_to_json(Subset subset) {
  Json out = Json::array();
  for (int i : members(subset)) out.push_back(i + 1);
  return out;
}

namespace {

Json hypotheses_to_json(const Hypotheses& h) {
  return Json{{"complex_case", h.complex_case},
              {"h1_zero", h.h1_zero},
              {"required_dimension", h.required_dimension},
              {"dimension_ok", h.dimension_ok},
              {"pi1_unverified", h.pi1_unverified},
              {"conditional", h.conditional()},
              {"flags", h.flags()}};
}

std::string flags_text(const Hypotheses& h) {
  const auto flags = h.flags();
  std::string out;
  for (const auto& f : flags) out += (out.empty() ? "" : ", ") + f;
  return out.empty() ? "none" : out;
}

Json manifold_to_json(const ManifoldDescription& m) {
  Json summands = Json::array();
  for (const auto& s : m.summands) {
    Json factors = Json::array();
    for (const auto& f : s) factors.push_back(Json{{"type", f.type == Factor::Type::Sphere ? "S" : "D"}, {"dim", f.dim}});
    summands.push_back(std::move(factors));
  }
  return Json{{"kind", m.kind == ManifoldKind::SphereProductTriple ? "sphere_product_triple" : "connected_sum"},
              {"summands", std::move(summands)},
              {"dimension", m.dimension},
              {"symbolic", m.symbolic()},
              {"statement", m.statement()},
              {"hypotheses", hypotheses_to_json(m.hypotheses)},
              {"expected_homology", graded_group_to_json(expected_homology(m))}};
}

Json page_to_json(const PageDescription& page) {
  Json pieces = Json::array();
  static const char* kinds[] = {"SphereSphereDisk", "SphereTimesDisk", "DiskTimesSphere", "PuncturedProduct",
                                "Exterior"};
  for (const auto& p : page.pieces) {
    pieces.push_back(Json{{"kind", kinds[static_cast<int>(p.kind)]},
                          {"p", p.p},
                          {"q", p.q},
                          {"m", p.m},
                          {"symbolic", p.symbolic()}});
  }
  return Json{{"case", std::string(1, to_char(page.page_case))},
              {"field", to_string(page.field)},
              {"partition", page.partition.parts()},
              {"class", page.class_index + 1},
              {"dimension", page.dimension},
              {"pieces", std::move(pieces)},
              {"symbolic", page.symbolic()},
              {"hypotheses", hypotheses_to_json(page.hypotheses)},
              {"homology", graded_group_to_json(page_homology(page))}};
}

std::string configuration_summary(const Configuration& cfg) {
  return "k = " + std::to_string(cfg.k()) + ", n = " + std::to_string(cfg.n()) + ", dim Z = " +
         std::to_string(cfg.dimension());
}

}  // namespace

Report check_report(const Configuration& cfg) {
  const ValidationReport v = validate(cfg);
  const bool empty = v.ok && !face_nonempty(cfg, 0);
  Report r;
  r.ok = v.ok;
  r.structured = Json{{"command", "check"},
                      {"configuration", configuration_to_json(cfg)},
                      {"weakly_hyperbolic", v.ok},
                      {"witness", v.witness ? subset_to_json(*v.witness) : Json(nullptr)},
                      {"polytope_empty", empty},
                      {"dimension", cfg.dimension()}};
  std::ostringstream text;
  text << "configuration: " << configuration_summary(cfg) << "\n";
  if (v.ok) {
    text << "weakly hyperbolic: yes\n";
    text << "polytope: " << (empty ? "empty (Z is empty)" : "nonempty") << "\n";
  } else {
    text << "weakly hyperbolic: no\n";
    text << "witness: 0 in conv of lambda_i for i in " << format_subset(*v.witness) << "\n";
  }
  r.text = text.str();
  return r;
}

Report dual_complex_report(const Configuration& cfg) {
  const SimplicialComplex k = dual_complex(cfg);
  Json faces = Json::array();
  for (Subset f : k.faces()) faces.push_back(subset_to_json(f));
  Json facets = Json::array();
  const auto sorted_facets = sorted_by_size(k.facets());
  for (Subset f : sorted_facets) facets.push_back(subset_to_json(f));
  Report r;
  r.structured = Json{{"command", "dual-complex"},
                      {"n", cfg.n()},
                      {"void", k.is_void()},
                      {"dimension", k.dimension()},
                      {"f_vector", k.face_counts()},
                      {"facets", std::move(facets)},
                      {"faces", std::move(faces)}};
  std::ostringstream text;
  text << "dual complex K on " << cfg.n() << " vertices\n";
  if (k.is_void()) {
    text << "K is void: the polytope is empty\n";
  } else {
    text << "dimension: " << k.dimension() << "\n";
    text << "f-vector (by number of vertices from 0): " << ranks_text(k.face_counts()) << "\n";
    text << "facets:";
    for (Subset f : sorted_facets) text << " " << format_subset(f);
    text << "\nfaces:\n";
    int size = -1;
    for (Subset f : k.faces()) {
      if (cardinality(f) != size) {
        if (size >= 0) text << "\n";
        size = cardinality(f);
        text << "  " << size << " vertices:";
      }
      text << " " << format_subset(f);
    }
    text << "\n";
  }
  r.text = text.str();
  return r;
}

Report homology_report(const Configuration& cfg, const std::vector<Space>& spaces, const HomologyOptions& options) {
  Report r;
  Json results = Json::array();
  std::ostringstream text;
  for (Space space : spaces) {
    const SplittingLedger ledger = splitting(cfg, space, options);
    Json contributions = Json::array();
    for (const auto& c : ledger.contributions) {
      contributions.push_back(Json{{"subset", subset_to_json(c.subset)}, {"homology", graded_group_to_json(c.group)}});
    }
    const std::int64_t chi = ledger.total.euler_characteristic();
    Json entry{{"space", to_string(space)},
               {"homology", graded_group_to_json(ledger.total)},
               {"betti", ledger.total.ranks()},
               {"torsion_free", ledger.total.torsion_free()},
               {"euler_characteristic", chi}};
    text << "H_*(" << to_string(space) << "): " << ledger.total.to_string() << "\n";
    text << "  " << std::left << std::setw(8) << "degree" << std::setw(8) << "rank" << "torsion\n";
    for (int d = 0; d <= ledger.total.top_degree(); ++d) {
      const AbelianGroup g = ledger.total.at(d);
      std::string torsion;
      for (auto t : g.torsion) torsion += (torsion.empty() ? "" : ",") + std::to_string(t);
      text << "  " << std::setw(8) << d << std::setw(8) << g.rank << (torsion.empty() ? "-" : torsion) << "\n";
    }
    text << std::right;
    text << "  euler characteristic: " << chi;
    if (space == Space::Z) {
      const std::int64_t cells = euler_cellcount(cfg);
      entry["euler_cellcount"] = cells;
      text << " (cell count " << cells << ")";
      if (cells != chi) r.ok = false;
    }
    text << "\n  contributing subsets (" << ledger.contributions.size() << "):\n";
    for (const auto& c : ledger.contributions) {
      text << "    J = " << format_subset(c.subset) << ": " << c.group.to_string() << "\n";
    }
    entry["contributions"] = std::move(contributions);
    results.push_back(std::move(entry));
  }
  r.structured = Json{{"command", "homology"}, {"configuration", configuration_to_json(cfg)}, {"spaces", std::move(results)}};
  r.text = text.str();
  return r;
}

Report classify_report(const Configuration& cfg) {
  const NormalForm nf = normal_form(cfg);
  const ManifoldDescription real = classify_real(nf.partition);
  const ManifoldDescription complex = classify_complex(nf.partition);
  std::vector<int> class_of;
  for (int c : nf.class_of) class_of.push_back(c + 1);
  Report r;
  r.structured = Json{{"command", "classify"},
                      {"normal_form", Json{{"partition", nf.partition.parts()},
                                           {"anchored", nf.anchored.parts()},
                                           {"class_of", class_of}}},
                      {"ell", nf.partition.ell()},
                      {"n", nf.partition.n()},
                      {"d", d_values(nf.partition)},
                      {"real", manifold_to_json(real)},
                      {"complex", manifold_to_json(complex)}};
  std::ostringstream text;
  text << "Z = " << real.symbolic() << "; Z^C = " << complex.symbolic() << "\n";
  text << "normal form: " << nf.partition.to_string() << " (from the distinguished coordinate: "
       << nf.anchored.to_string() << ")\n";
  text << "l = " << nf.partition.ell() << ", d = " << ints_text(d_values(nf.partition)) << "\n";
  for (const auto* m : {&real, &complex}) {
    const bool is_real = m == &real;
    text << (is_real ? "Z" : "Z^C") << ": dimension " << m->dimension << ", " << m->statement() << "\n";
    text << "  flags: " << flags_text(m->hypotheses) << "\n";
    text << "  homology: " << expected_homology(*m).to_string() << "\n";
  }
  r.text = text.str();
  return r;
}

Report open_book_report(const Configuration& cfg, int i, Field field, const HomologyOptions& options,
                        bool strict) {
  const OpenBookStructure book = field == Field::Real ? open_book_real(cfg, i, strict) : open_book_complex(cfg, i);
  const CheckReport checks = boundary_consistency(book, options);
  Json check_list = Json::array();
  for (const auto& c : checks.checks) {
    check_list.push_back(Json{{"name", c.name}, {"applicable", c.applicable}, {"passed", c.passed}, {"detail", c.detail}});
  }
  Report r;
  r.ok = checks.ok();
  r.structured = Json{{"command", "open-book"},
                      {"field", to_string(field)},
                      {"coordinate", i + 1},
                      {"total", configuration_to_json(book.total)},
                      {"binding", book.binding ? configuration_to_json(*book.binding) : Json(nullptr)},
                      {"page_source", configuration_to_json(book.page_source)},
                      {"page", book.page ? page_to_json(*book.page) : Json(nullptr)},
                      {"monodromy", book.monodromy},
                      {"checks", std::move(check_list)},
                      {"ok", checks.ok()}};
  std::ostringstream text;
  text << "open book on " << (field == Field::Real ? "Z'" : "Z^C") << " around coordinate " << i + 1 << "\n";
  text << "total: " << configuration_summary(book.total) << "\n";
  if (book.binding) {
    text << "binding: Z of " << configuration_summary(*book.binding) << "\n";
  } else {
    text << "binding: empty\n";
  }
  text << "page: Z_+ of " << configuration_summary(book.page_source) << " at coordinate "
       << book.page_source.distinguished() + 1 << "\n";
  if (book.page) {
    const PageDescription& page = *book.page;
    text << "  interior of " << page.symbolic() << "  [case " << to_char(page.page_case) << "]\n";
    text << "  flags: " << flags_text(page.hypotheses) << "\n";
    text << "  homology: " << page_homology(page).to_string() << "\n";
  }
  text << "monodromy: " << book.monodromy << "\n";
  text << "checks:\n";
  for (const auto& c : checks.checks) {
    text << "  " << (!c.applicable ? "SKIP" : c.passed ? "PASS" : "FAIL") << " " << c.name << ": " << c.detail << "\n";
  }
  r.text = text.str();
  return r;
}

int parse_family(std::string_view text) {
  static const std::regex pattern(R"(\s*partitions\s+n\s*<=\s*(\d+)\s*)");
  std::match_results<std::string_view::const_iterator> match;
  if (!std::regex_match(text.begin(), text.end(), match, pattern)) {
    fail("bad family '" + std::string(text) + "'; expected \"partitions n<=N\"");
  }
  const int n = std::stoi(match[1].str());
  if (n < 3) fail("family bound must be at least 3");
  return n;
}

Report cross_validate_report(const CrossValidateOptions& options) {
  Json results = Json::array();
  std::ostringstream text;
  int failures = 0;
  const auto record = [&](const std::string& check, const CyclicPartition& p, const std::string& subject, bool passed,
                          const std::string& detail) {
    if (!passed) ++failures;
    results.push_back(Json{{"check", check}, {"partition", p.parts()}, {"subject", subject}, {"passed", passed}, {"detail", detail}});
    text << (passed ? "PASS " : "FAIL ") << check << " " << p.to_string() << (subject.empty() ? "" : " " + subject)
         << ": " << detail << "\n";
  };
  const auto guarded = [&](const std::string& check, const CyclicPartition& p, const std::string& subject, auto&& body) {
    try {
      body();
    } catch (const OracleMismatch& e) {
      record(check, p, subject, false, e.what());
    }
  };

  const auto family = canonical_partitions(options.family_max_n);
  for (const auto& p : family) {
    const Configuration cfg = realize(p);
    guarded("normal-form", p, "", [&] {
      const NormalForm nf = normal_form(cfg);
      record("normal-form", p, "", nf.partition == p, "round trip gives " + nf.partition.to_string());
    });
    const GradedGroup hz = homology_Z(cfg, options.homology);
    const std::int64_t cells = euler_cellcount(cfg);
    record("euler", p, "", hz.euler_characteristic() == cells,
           "chi = " + std::to_string(hz.euler_characteristic()) + ", cell count " + std::to_string(cells));
    const GradedGroup real_expected = expected_homology(classify_real(p));
    record("real-formula", p, "", real_expected.ranks() == hz.ranks(),
           ranks_text(real_expected.ranks()) + " vs " + ranks_text(hz.ranks()));
    const GradedGroup hzc = homology_ZC(cfg, options.homology);
    const GradedGroup complex_expected = expected_homology(classify_complex(p));
    record("complex-formula", p, "", complex_expected == hzc, complex_expected.to_string() + " vs " + hzc.to_string());
    if (p.n() <= options.doubling_max_n) {
      const GradedGroup doubled = homology_Z(complexify(cfg), options.homology);
      record("doubling", p, "", doubled == hzc, doubled.to_string() + " vs " + hzc.to_string());
    }
    if (p.n() <= options.page_max_n) {
      for (int c = 0; c < p.classes(); ++c) {
        const std::string subject = "class " + std::to_string(c + 1);
        for (Field field : {Field::Real, Field::Complex}) {
          const PageDescription page = page_topology(p, c, field);
          const CyclicPartition source = field == Field::Real ? p.rotated(c) : complex_page_partition(p, c);
          const GradedGroup actual = homology_Zplus(realize(source), options.homology);
          const GradedGroup described = page_homology(page);
          record(field == Field::Real ? "page-real" : "page-complex", p, subject, described == actual,
                 std::string("case ") + to_char(page.page_case) + " " + page.symbolic() + " " +
                     ranks_text(described.ranks()) + " vs " + ranks_text(actual.ranks()));
        }
      }
    }
  }
  text << "cross-validate: " << results.size() << " checks over " << family.size() << " partitions, " << failures
       << " failed\n";
  Report r;
  r.ok = failures == 0;
  r.structured = Json{{"command", "cross-validate"},
                      {"family_max_n", options.family_max_n},
                      {"doubling_max_n", options.doubling_max_n},
                      {"page_max_n", options.page_max_n},
                      {"partitions", family.size()},
                      {"failures", failures},
                      {"checks", std::move(results)}};
  r.text = text.str();
  return r;
}

}  // namespace quadrics
