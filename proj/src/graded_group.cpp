#include "quadrics/graded_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace quadrics {

std::vector<std::int64_t> invariant_factor_chain(std::vector<std::int64_t> orders) {
  for (auto& t : orders) {
    if (t <= 0) throw std::invalid_argument("torsion orders must be positive");
  }
  // After the sweep for index i, orders[i] divides every later entry.
  for (std::size_t i = 0; i < orders.size(); ++i) {
    for (std::size_t j = i + 1; j < orders.size(); ++j) {
      const std::int64_t g = std::gcd(orders[i], orders[j]);
      const std::int64_t l = orders[i] / g * orders[j];
      orders[i] = g;
      orders[j] = l;
    }
  }
  std::erase(orders, 1);
  return orders;
}

GradedGroup GradedGroup::free(const std::vector<std::int64_t>& ranks, int lowest_degree) {
  GradedGroup g(lowest_degree);
  for (std::size_t i = 0; i < ranks.size(); ++i) g.add_free(lowest_degree + static_cast<int>(i), ranks[i]);
  return g;
}

int GradedGroup::top_degree() const {
  for (int i = static_cast<int>(groups_.size()) - 1; i >= 0; --i) {
    if (!groups_[static_cast<std::size_t>(i)].is_zero()) return lowest_ + i;
  }
  return lowest_ - 1;
}

AbelianGroup GradedGroup::at(int degree) const {
  const int i = degree - lowest_;
  if (i < 0 || i >= static_cast<int>(groups_.size())) return {};
  return groups_[static_cast<std::size_t>(i)];
}

bool GradedGroup::torsion_free() const {
  return std::all_of(groups_.begin(), groups_.end(), [](const AbelianGroup& g) { return g.torsion.empty(); });
}

std::vector<std::int64_t> GradedGroup::ranks() const { return ranks(top_degree()); }

std::vector<std::int64_t> GradedGroup::ranks(int up_to) const {
  std::vector<std::int64_t> out;
  for (int d = lowest_; d <= up_to; ++d) out.push_back(rank(d));
  return out;
}

std::int64_t GradedGroup::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < groups_.size(); ++i) {
    const int d = lowest_ + static_cast<int>(i);
    chi += (d % 2 == 0 ? 1 : -1) * groups_[i].rank;
  }
  return chi;
}

AbelianGroup& GradedGroup::slot(int degree) {
  if (degree < lowest_) {
    groups_.insert(groups_.begin(), static_cast<std::size_t>(lowest_ - degree), AbelianGroup{});
    lowest_ = degree;
  }
  const auto i = static_cast<std::size_t>(degree - lowest_);
  if (i >= groups_.size()) groups_.resize(i + 1);
  return groups_[i];
}

void GradedGroup::add_free(int degree, std::int64_t rank) {
  if (rank == 0) return;
  slot(degree).rank += rank;
}

void GradedGroup::add(int degree, const AbelianGroup& group) {
  if (group.is_zero()) return;
  AbelianGroup& g = slot(degree);
  g.rank += group.rank;
  if (!group.torsion.empty()) {
    g.torsion.insert(g.torsion.end(), group.torsion.begin(), group.torsion.end());
    g.torsion = invariant_factor_chain(std::move(g.torsion));
  }
}

GradedGroup GradedGroup::shifted(int by) const {
  GradedGroup out(lowest_ + by);
  out.groups_ = groups_;
  return out;
}

GradedGroup& GradedGroup::operator+=(const GradedGroup& other) {
  for (std::size_t i = 0; i < other.groups_.size(); ++i) {
    add(other.lowest_ + static_cast<int>(i), other.groups_[i]);
  }
  return *this;
}

bool operator==(const GradedGroup& a, const GradedGroup& b) {
  const int lo = std::min(a.lowest_, b.lowest_);
  const int hi = std::max(a.top_degree(), b.top_degree());
  for (int d = lo; d <= hi; ++d) {
    if (!(a.at(d) == b.at(d))) return false;
  }
  return true;
}

std::string to_string(const AbelianGroup& group) {
  std::string out;
  if (group.rank > 0) out = group.rank == 1 ? "Z" : "Z^" + std::to_string(group.rank);
  for (auto t : group.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + std::to_string(t);
  }
  return out.empty() ? "0" : out;
}

std::string GradedGroup::to_string(const std::string& symbol) const {
  std::string out;
  for (int d = lowest_; d <= top_degree(); ++d) {
    const AbelianGroup g = at(d);
    if (g.is_zero()) continue;
    if (!out.empty()) out += ", ";
    out += symbol + std::to_string(d) + " = " + quadrics::to_string(g);
  }
  return out.empty() ? "0" : out;
}

}  // namespace quadrics
