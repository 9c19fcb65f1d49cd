#include "quadrics/configuration.hpp"

#include "quadrics/feasibility.hpp"

#include <algorithm>
#include <map>

namespace quadrics {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

Configuration::Configuration(MatrixQ lambdas, std::vector<std::string> labels, int distinguished)
    : lambdas_(std::move(lambdas)), labels_(std::move(labels)), distinguished_(distinguished) {
  if (k() < 1) throw ConfigurationError("configuration needs k >= 1");
  if (n() < k() + 1) {
    throw ConfigurationError("configuration has n = " + std::to_string(n()) + " < k + 1 = " +
                             std::to_string(k() + 1) + "; the variety is empty or degenerate");
  }
  if (n() > kMaxGroundSize) {
    throw SizeCapError("configuration has n = " + std::to_string(n()) + " > " +
                             std::to_string(kMaxGroundSize) + " coordinates");
  }
  if (labels_.empty()) labels_ = default_labels(n());
  if (static_cast<int>(labels_.size()) != n()) {
    throw ConfigurationError("expected " + std::to_string(n()) + " labels, got " +
                             std::to_string(labels_.size()));
  }
  if (distinguished_ < 0 || distinguished_ >= n()) {
    throw ConfigurationError("distinguished coordinate " + std::to_string(distinguished_ + 1) +
                             " out of range");
  }
}

Configuration Configuration::from_vectors(const std::vector<std::vector<Rational>>& vectors,
                                          std::vector<std::string> labels, int distinguished) {
  if (vectors.empty()) throw ConfigurationError("configuration has no vectors");
  const std::size_t k = vectors.front().size();
  MatrixQ m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != k) {
      throw ConfigurationError("vector " + std::to_string(i + 1) + " has length " +
                               std::to_string(vectors[i].size()) + ", expected " + std::to_string(k));
    }
    for (std::size_t c = 0; c < k; ++c) {
      m(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(i)) = vectors[i][c];
    }
  }
  return Configuration(std::move(m), std::move(labels), distinguished);
}

Configuration Configuration::with_distinguished(int i) const {
  return Configuration(lambdas_, labels_, i);
}

bool operator==(const Configuration& a, const Configuration& b) {
  return a.lambdas_.rows() == b.lambdas_.rows() && a.lambdas_.cols() == b.lambdas_.cols() &&
         a.lambdas_ == b.lambdas_ && a.labels_ == b.labels_ && a.distinguished_ == b.distinguished_;
}

ValidationReport validate(const Configuration& cfg) {
  // Pre-order depth-first enumeration visits subsets in lexicographic order,
  // so the first violation found is the smallest one.
  const int n = cfg.n();
  const int k = cfg.k();
  std::vector<int> stack;
  std::optional<Subset> found;
  auto visit = [&](auto&& self, int next) -> void {
    for (int i = next; i < n && !found; ++i) {
      stack.push_back(i);
      std::vector<VectorQ> vs;
      for (int j : stack) vs.push_back(cfg.lambda(j));
      if (origin_in_convex_hull(vs)) {
        found = from_members(stack);
      } else if (static_cast<int>(stack.size()) < k) {
        self(self, i + 1);
      }
      stack.pop_back();
    }
  };
  visit(visit, 0);
  return ValidationReport{!found.has_value(), found};
}

Configuration delete_coordinate(const Configuration& cfg, int i) {
  const int n = cfg.n();
  if (i < 0 || i >= n) throw ConfigurationError("coordinate " + std::to_string(i + 1) + " out of range");
  MatrixQ m(cfg.k(), n - 1);
  std::vector<std::string> labels;
  for (int j = 0, c = 0; j < n; ++j) {
    if (j == i) continue;
    m.col(c++) = cfg.lambdas().col(j);
    labels.push_back(cfg.label(j));
  }
  int d = cfg.distinguished();
  if (d == i) d = 0;
  else if (d > i) --d;
  return Configuration(std::move(m), std::move(labels), d);
}

Configuration duplicate_coordinate(const Configuration& cfg, int i) {
  const int n = cfg.n();
  if (i < 0 || i >= n) throw ConfigurationError("coordinate " + std::to_string(i + 1) + " out of range");
  MatrixQ m(cfg.k(), n + 1);
  std::vector<std::string> labels;
  for (int j = 0, c = 0; j < n; ++j) {
    m.col(c++) = cfg.lambdas().col(j);
    if (j == i) {
      labels.push_back(cfg.label(j) + "a");
      labels.push_back(cfg.label(j) + "b");
      m.col(c++) = cfg.lambdas().col(j);
    } else {
      labels.push_back(cfg.label(j));
    }
  }
  return Configuration(std::move(m), std::move(labels), i + 1);
}

Configuration complexify(const Configuration& cfg) {
  const int n = cfg.n();
  MatrixQ m(cfg.k(), 2 * n);
  std::vector<std::string> labels;
  for (int j = 0; j < n; ++j) {
    m.col(2 * j) = cfg.lambdas().col(j);
    m.col(2 * j + 1) = cfg.lambdas().col(j);
    labels.push_back(cfg.label(j) + "a");
    labels.push_back(cfg.label(j) + "b");
  }
  return Configuration(std::move(m), std::move(labels), 2 * cfg.distinguished());
}

namespace {

std::vector<std::string> column_keys(const Configuration& cfg) {
  std::vector<std::string> keys;
  for (int j = 0; j < cfg.n(); ++j) {
    std::string key;
    for (int c = 0; c < cfg.k(); ++c) key += to_string(cfg.lambdas()(c, j)) + ",";
    keys.push_back(std::move(key));
  }
  return keys;
}

}  // namespace

bool same_up_to_permutation(const Configuration& a, const Configuration& b) {
  if (a.k() != b.k() || a.n() != b.n()) return false;
  auto ka = column_keys(a);
  auto kb = column_keys(b);
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka == kb;
}

std::vector<Subset> coordinate_classes(const Configuration& cfg) {
  std::map<std::string, Subset> by_key;
  std::vector<std::string> order;
  const auto keys = column_keys(cfg);
  for (int j = 0; j < cfg.n(); ++j) {
    auto [it, inserted] = by_key.try_emplace(keys[static_cast<std::size_t>(j)], 0);
    if (inserted) order.push_back(it->first);
    it->second |= singleton(j);
  }
  std::vector<Subset> out;
  for (const auto& key : order) out.push_back(by_key[key]);
  return out;
}

}  // namespace quadrics
