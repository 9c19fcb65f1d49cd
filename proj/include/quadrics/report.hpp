#ifndef QUADRICS_REPORT_HPP
#define QUADRICS_REPORT_HPP

#include "quadrics/configuration.hpp"
#include "quadrics/cyclic.hpp"
#include "quadrics/graded_group.hpp"
#include "quadrics/manifold_homology.hpp"
#include "quadrics/open_book.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quadrics {

using Json = nlohmann::ordered_json;

/// Malformed input document (syntax, unknown field, wrong type or version).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parsed input: a configuration, remembering the partition it came from.
struct Input {
  Configuration config;
  std::optional<CyclicPartition> partition;
};

/// Schema 1:
///   {"schema": 1, "k": 2, "n": 5, "lambdas": [["1","0"], [0, "1/2"], ...],
///    "labels": ["x1", ...], "distinguished": 1}
/// or {"schema": 1, "partition": [1,1,1,1,1], "distinguished": 1}.
/// Rationals are integers or "p/q" strings; "distinguished" is 1-based.
/// Throws ParseError on malformed documents and ConfigurationError when the
/// data do not form a configuration.
Input parse_input(const Json& document);
Input parse_input_text(std::string_view text);

/// "1,1,1,1,1" -> CyclicPartition. Throws ParseError.
CyclicPartition parse_partition(std::string_view text);

/// Inverse of parse_input for configurations.
Json configuration_to_json(const Configuration& cfg);
/// [{"degree": d, "rank": r, "torsion": [..]}] for every degree from the lowest
/// to the top one.
Json graded_group_to_json(const GradedGroup& group);
Json subset_to_json(Subset subset);

/// A computed report in both renderings. `ok` is false when a reported check failed.
struct Report {
  Json structured;
  std::string text;
  bool ok = true;
};

Report check_report(const Configuration& cfg);
Report dual_complex_report(const Configuration& cfg);
Report homology_report(const Configuration& cfg, const std::vector<Space>& spaces, const HomologyOptions& options);
/// Throws ConfigurationError unless k = 2 and Z is nonempty.
Report classify_report(const Configuration& cfg);
/// Real open books duplicate coordinate i when it has no twin, unless strict.
Report open_book_report(const Configuration& cfg, int i, Field field, const HomologyOptions& options,
                        bool strict = false);

struct CrossValidateOptions {
  /// Partitions with n <= family_max_n, canonical representatives only.
  int family_max_n = 9;
  /// H(Z^C) = H(Z(complexify)) on 2n coordinates for n <= doubling_max_n.
  int doubling_max_n = 7;
  /// Page formulas against Z_+, every class, for n <= page_max_n.
  int page_max_n = 8;
  HomologyOptions homology;
};

/// "partitions n<=9" -> 9. Throws ParseError.
int parse_family(std::string_view text);

/// Oracle battery over the family: Euler characteristic, real and complex
/// closed forms, doubling, normal-form round trip and page formulas.
Report cross_validate_report(const CrossValidateOptions& options);

}  // namespace quadrics

#endif  // QUADRICS_REPORT_HPP
