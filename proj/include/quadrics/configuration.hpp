#ifndef QUADRICS_CONFIGURATION_HPP
#define QUADRICS_CONFIGURATION_HPP

#include "quadrics/rational.hpp"
#include "quadrics/subset.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadrics {

/// Malformed input: wrong vector lengths, bad indices, too few coordinates.
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Refusal to handle more coordinates than the configured cap (or than a
/// Subset bitmask can hold).
class SizeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configuration of n coefficient vectors in Q^k describing the real variety
///   sum_i lambda_i x_i^2 = 0,  sum_i x_i^2 = 1
/// together with coordinate labels and one distinguished coordinate (the one
/// cut in half for Z_+ and deleted for Z_0).
///
/// Coordinates are 0-based in the API. The coefficient vectors are stored as
/// the columns of a k x n matrix. Instances are immutable.
class Configuration {
 public:
  /// Throws ConfigurationError when n < k + 1, when the labels do not match n,
  /// or when the distinguished index is out of range; SizeCapError when n > 24.
  explicit Configuration(MatrixQ lambdas, std::vector<std::string> labels = {},
                         int distinguished = 0);

  /// Builds from a list of vectors; every vector must have the same length k.
  static Configuration from_vectors(const std::vector<std::vector<Rational>>& vectors,
                                    std::vector<std::string> labels = {}, int distinguished = 0);

  int k() const { return static_cast<int>(lambdas_.rows()); }
  int n() const { return static_cast<int>(lambdas_.cols()); }
  const MatrixQ& lambdas() const { return lambdas_; }
  VectorQ lambda(int i) const { return lambdas_.col(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  int distinguished() const { return distinguished_; }

  /// dim Z = n - k - 1 and dim Z^C = 2n - k - 1 (when Z is nonempty).
  int dimension() const { return n() - k() - 1; }
  int complex_dimension() const { return 2 * n() - k() - 1; }

  Configuration with_distinguished(int i) const;

  friend bool operator==(const Configuration& a, const Configuration& b);

 private:
  MatrixQ lambdas_;
  std::vector<std::string> labels_;
  int distinguished_;
};

/// Default labels x1, ..., xn.
std::vector<std::string> default_labels(int n);

struct ValidationReport {
  bool ok = true;
  /// Lexicographically smallest J with |J| <= k and 0 in conv{lambda_j : j in J}.
  std::optional<Subset> witness;
};

/// Weak hyperbolicity: no subset of at most k vectors has the origin in its convex hull.
ValidationReport validate(const Configuration& cfg);

/// Removes coordinate i (setting x_i = 0). The distinguished marker follows its
/// coordinate; if it was i itself it resets to 0.
Configuration delete_coordinate(const Configuration& cfg, int i);

/// Inserts a second copy of lambda_i directly after position i. The copies are
/// labelled <label>a and <label>b and the new copy (position i + 1) becomes the
/// distinguished coordinate.
Configuration duplicate_coordinate(const Configuration& cfg, int i);

/// Every lambda_i appears twice (positions 2i, 2i + 1); Z of the result is Z^C of
/// the input. The distinguished marker moves to the first copy.
Configuration complexify(const Configuration& cfg);

/// True when the two configurations have the same multiset of coefficient vectors.
bool same_up_to_permutation(const Configuration& a, const Configuration& b);

/// Groups coordinates with identical coefficient vectors. Swapping two coordinates
/// of a group is a symmetry of the whole construction.
std::vector<Subset> coordinate_classes(const Configuration& cfg);

}  // namespace quadrics

#endif  // QUADRICS_CONFIGURATION_HPP
