#ifndef QUADRICS_SUBSET_HPP
#define QUADRICS_SUBSET_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace quadrics {

/// A subset of the coordinate index set {0, ..., n-1}, bit i set iff i is a member.
/// Reports print members 1-based.
using Subset = std::uint32_t;

/// Hard ceiling on ground-set size: subset bitmaps of size 2^n are allocated.
inline constexpr int kMaxGroundSize = 24;

constexpr Subset singleton(int i) { return Subset{1} << i; }
constexpr Subset full_set(int n) { return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1; }
constexpr bool contains(Subset s, int i) { return (s >> i) & 1U; }
constexpr bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }
constexpr int cardinality(Subset s) { return std::popcount(s); }

inline std::vector<int> members(Subset s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality(s)));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

inline Subset from_members(const std::vector<int>& idx) {
  Subset s = 0;
  for (int i : idx) s |= singleton(i);
  return s;
}

/// Lexicographic order on sorted member lists ({0} < {0,1} < {0,2} < {1}).
inline bool lex_less(Subset a, Subset b) {
  const auto ma = members(a);
  const auto mb = members(b);
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

/// "{1,3,4}" with 1-based members.
inline std::string format_subset(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i : members(s)) {
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace quadrics

#endif  // QUADRICS_SUBSET_HPP
