#ifndef QUADRICS_GRADED_GROUP_HPP
#define QUADRICS_GRADED_GROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace quadrics {

/// A finitely generated abelian group Z^rank + Z/t_1 + ... + Z/t_m with
/// t_1 | t_2 | ... | t_m and every t_i > 1.
struct AbelianGroup {
  std::int64_t rank = 0;
  std::vector<std::int64_t> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Rewrites a list of cyclic orders as invariant factors (divisibility chain,
/// units dropped). The product of the entries is preserved.
std::vector<std::int64_t> invariant_factor_chain(std::vector<std::int64_t> orders);

/// Integral homology, one AbelianGroup per degree starting at lowest_degree()
/// (-1 for reduced homology of simplicial complexes, 0 otherwise).
class GradedGroup {
 public:
  explicit GradedGroup(int lowest_degree = 0) : lowest_(lowest_degree) {}

  /// Free group with ranks[i] in degree lowest + i.
  static GradedGroup free(const std::vector<std::int64_t>& ranks, int lowest_degree = 0);

  int lowest_degree() const { return lowest_; }
  /// Largest degree with a nonzero group, or lowest_degree() - 1 when zero.
  int top_degree() const;
  bool is_zero() const { return top_degree() < lowest_; }

  AbelianGroup at(int degree) const;
  std::int64_t rank(int degree) const { return at(degree).rank; }
  std::vector<std::int64_t> torsion(int degree) const { return at(degree).torsion; }
  bool torsion_free() const;

  /// Betti numbers for degrees lowest..top (or lowest..up_to when given).
  std::vector<std::int64_t> ranks() const;
  std::vector<std::int64_t> ranks(int up_to) const;

  std::int64_t euler_characteristic() const;

  void add_free(int degree, std::int64_t rank);
  void add(int degree, const AbelianGroup& group);

  /// Degree d of the result is degree d - by of this group.
  GradedGroup shifted(int by) const;

  GradedGroup& operator+=(const GradedGroup& other);
  friend GradedGroup operator+(GradedGroup a, const GradedGroup& b) { return a += b; }

  /// Degreewise equality, ignoring where zero groups are stored.
  friend bool operator==(const GradedGroup& a, const GradedGroup& b);

  /// "H0 = Z, H1 = Z^10 + Z/2, H2 = Z" (zero degrees omitted; "0" when trivial).
  std::string to_string(const std::string& symbol = "H") const;

 private:
  AbelianGroup& slot(int degree);

  int lowest_;
  std::vector<AbelianGroup> groups_;
};

std::string to_string(const AbelianGroup& group);

}  // namespace quadrics

#endif  // QUADRICS_GRADED_GROUP_HPP
