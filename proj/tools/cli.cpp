#include "cli.hpp"

#include "quadrics/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace quadrics::cli {

namespace {

struct Options {
  std::string partition;
  std::string config_path;
  std::vector<std::string> spaces;
  int distinguished = 0;  // 1-based; 0 keeps the input's choice
  std::string format = "text";
  int max_n = HomologyOptions{}.max_n;
  int jobs = 1;
  bool strict = false;
  std::string family = "partitions n<=9";
};

Input load_input(const Options& o) {
  if (o.partition.empty() == o.config_path.empty()) throw ParseError("give exactly one of --partition and --config");
  Input input = [&] {
    if (!o.partition.empty()) {
      const CyclicPartition p = parse_partition(o.partition);
      return Input{realize(p), p};
    }
    std::ifstream file(o.config_path);
    if (!file) throw ParseError("cannot read " + o.config_path);
    std::stringstream buffer;
    buffer << file.rdbuf();
    return parse_input_text(buffer.str());
  }();
  if (o.distinguished != 0) input.config = input.config.with_distinguished(o.distinguished - 1);
  return input;
}

void require_within_cap(int ground, const Options& o) {
  if (ground > o.max_n) {
    throw SizeCapError("refusing to enumerate 2^" + std::to_string(ground) + " subsets; --max-n is " +
                       std::to_string(o.max_n));
  }
}

Space parse_space(const std::string& s) {
  if (s == "Z") return Space::Z;
  if (s == "ZC") return Space::ZC;
  if (s == "Zplus") return Space::Zplus;
  throw ParseError("unknown space '" + s + "'");
}

void emit(const Report& report, const Options& o, std::ostream& out) {
  if (o.format == "structured") {
    out << report.structured.dump(2) << "\n";
  } else {
    out << report.text;
  }
}

// Emits the validation report and returns false when cfg is not weakly hyperbolic.
bool emit_if_invalid(const Configuration& cfg, const Options& o, std::ostream& out) {
  const Report check = check_report(cfg);
  if (check.ok) return true;
  emit(check, o, out);
  return false;
}

int execute(const std::string& command, const Options& o, std::ostream& out) {
  HomologyOptions homology{o.max_n, o.jobs};
  if (command == "cross-validate") {
    CrossValidateOptions cv;
    cv.family_max_n = parse_family(o.family);
    cv.homology = homology;
    const int family = cv.family_max_n;
    require_within_cap(std::max({family, 2 * std::min(family, cv.doubling_max_n),
                                 2 * std::min(family, cv.page_max_n) - 1}),
                       o);
    const Report r = cross_validate_report(cv);
    emit(r, o, out);
    return r.ok ? kOk : kOracleMismatch;
  }

  const Input input = load_input(o);
  const Configuration& cfg = input.config;
  if (command == "check") {
    const Report r = check_report(cfg);
    emit(r, o, out);
    return r.ok ? kOk : kInvalidConfig;
  }
  if (!emit_if_invalid(cfg, o, out)) return kInvalidConfig;

  if (command == "dual-complex") {
    require_within_cap(cfg.n(), o);
    emit(dual_complex_report(cfg), o, out);
    return kOk;
  }
  if (command == "homology") {
    std::vector<Space> spaces;
    for (const auto& s : o.spaces) spaces.push_back(parse_space(s));
    if (spaces.empty()) spaces = {Space::Z, Space::ZC, Space::Zplus};
    require_within_cap(cfg.n(), o);
    const Report r = homology_report(cfg, spaces, homology);
    emit(r, o, out);
    return r.ok ? kOk : kOracleMismatch;
  }
  if (command == "classify") {
    require_within_cap(cfg.n(), o);
    emit(classify_report(cfg), o, out);
    return kOk;
  }
  if (command == "open-book") {
    if (o.spaces.size() > 1) throw ParseError("open-book takes one --space (Z or ZC)");
    const Space space = o.spaces.empty() ? Space::Z : parse_space(o.spaces.front());
    if (space == Space::Zplus) throw ParseError("open-book builds Z' (--space Z) or Z^C (--space ZC)");
    const Field field = space == Space::Z ? Field::Real : Field::Complex;
    require_within_cap(field == Field::Real ? cfg.n() + 1 : 2 * cfg.n(), o);
    const Report r = open_book_report(cfg, cfg.distinguished(), field, homology, o.strict);
    emit(r, o, out);
    return r.ok ? kOk : kOracleMismatch;
  }
  throw ParseError("unknown command '" + command + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact homology and topology of intersections of quadrics and moment-angle manifolds"};
  app.name("quadrics");
  app.require_subcommand(1);
  Options o;

  const auto add_input = [&](CLI::App* sub) {
    auto* partition = sub->add_option("--partition", o.partition, "cyclic partition n1,...,n_{2l+1}");
    auto* config = sub->add_option("--config", o.config_path, "configuration file (JSON, schema 1)");
    partition->excludes(config);
    sub->add_option("--distinguished", o.distinguished, "distinguished coordinate (1-based)")->check(CLI::PositiveNumber);
  };
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--max-n", o.max_n, "largest ground set to enumerate")->check(CLI::Range(1, 24));
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));
  };

  std::vector<std::pair<std::string, std::string>> commands{
      {"check", "weak hyperbolicity, with a witness when it fails"},
      {"dual-complex", "faces of the dual complex K"},
      {"homology", "homology of Z, Z^C and Z_+ with contributing subsets"},
      {"classify", "normal form and closed forms (k = 2)"},
      {"open-book", "open book: binding, page and consistency checks"},
      {"cross-validate", "oracle battery over a family of partitions"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    if (name == "cross-validate") {
      sub->add_option("--family", o.family, "family, e.g. \"partitions n<=9\"");
      continue;
    }
    add_input(sub);
    if (name == "homology" || name == "open-book") {
      sub->add_option("--space", o.spaces, "Z, ZC or Zplus (open-book: Z or ZC)")
          ->check(CLI::IsMember({"Z", "ZC", "Zplus"}));
    }
    if (name == "open-book") sub->add_flag("--strict", o.strict, "real case: refuse a coordinate without a twin");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    return execute(command, o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ConfigurationError& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const std::domain_error& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const SizeCapError& e) {
    err << "size cap: " << e.what() << "\n";
    return kSizeCap;
  } catch (const OracleMismatch& e) {
    err << "oracle mismatch: " << e.what() << "\n";
    return kOracleMismatch;
  }
}

}  // namespace quadrics::cli
