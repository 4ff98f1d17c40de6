#include "hoffman/core.hpp"

#include <algorithm>
#include <cmath>

namespace hoffman {

RealMatrix::RealMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0.0) {
  if (rows < 1 || cols < 1)
    throw PreconditionError("matrix dimensions must be positive");
}

RealMatrix::RealMatrix(int rows, int cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows < 1 || cols < 1)
    throw PreconditionError("matrix dimensions must be positive");
  if (data_.size() != static_cast<size_t>(rows) * cols)
    throw PreconditionError("entry count does not match dimensions");
  for (double v : data_)
    if (!std::isfinite(v))
      throw PreconditionError("matrix entries must be finite");
}

double scale(const RealMatrix& a) {
  double s = 0.0;
  for (double v : a.data()) s = std::max(s, std::fabs(v));
  if (s == 0.0) throw ZeroMatrixError();
  return s;
}

IndexSet::IndexSet(int universe) : universe_(universe) {
  if (universe < 0) throw PreconditionError("universe size must be >= 0");
}

IndexSet::IndexSet(int universe, std::vector<int> members)
    : universe_(universe), members_(std::move(members)) {
  if (universe < 0) throw PreconditionError("universe size must be >= 0");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  for (int i : members_)
    if (i < 1 || i > universe_)
      throw PreconditionError("index outside {1,...,m}");
}

IndexSet IndexSet::full(int universe) {
  std::vector<int> all(universe);
  for (int i = 0; i < universe; ++i) all[i] = i + 1;
  return IndexSet(universe, std::move(all));
}

bool IndexSet::contains(int i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

IndexSet IndexSet::set_union(const IndexSet& other) const {
  std::vector<int> merged;
  merged.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(merged));
  return IndexSet(std::max(universe_, other.universe_), std::move(merged));
}

IndexSet IndexSet::complement() const {
  std::vector<int> rest;
  rest.reserve(universe_ - members_.size());
  size_t k = 0;
  for (int i = 1; i <= universe_; ++i) {
    if (k < members_.size() && members_[k] == i) {
      ++k;
    } else {
      rest.push_back(i);
    }
  }
  return IndexSet(universe_, std::move(rest));
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

IndexSet IndexSet::with(int i) const {
  std::vector<int> members = members_;
  members.push_back(i);
  return IndexSet(universe_, std::move(members));
}

IndexSet IndexSet::without(int i) const {
  std::vector<int> members;
  members.reserve(members_.size());
  for (int v : members_)
    if (v != i) members.push_back(v);
  return IndexSet(universe_, std::move(members));
}

RealMatrix submatrix(const RealMatrix& a, const IndexSet& j) {
  if (j.empty()) throw EmptySetError();
  if (j.universe() != a.rows())
    throw PreconditionError("index set universe does not match row count");
  RealMatrix out(j.size(), a.cols());
  int r = 0;
  for (int i : j.values()) {
    for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(i - 1, c);
    ++r;
  }
  return out;
}

NormConfig NormConfig::make(const std::string& domain,
                            const std::string& codomain) {
  if (domain != "l1" || codomain != "linf")
    throw PreconditionError(
        "unsupported norm pair (only domain=l1, codomain=linf is supported)");
  return NormConfig{};
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Cover: return "cover";
    case Method::Lpcc: return "lpcc";
    case Method::Enum: return "enum";
    case Method::BruteForce: return "bruteforce";
    case Method::FastPath: return "fastpath";
    case Method::RelativeCone: return "relative-cone";
  }
  return "unknown";
}

std::optional<Method> method_from_name(const std::string& name) {
  if (name == "cover") return Method::Cover;
  if (name == "lpcc") return Method::Lpcc;
  if (name == "enum") return Method::Enum;
  if (name == "bruteforce") return Method::BruteForce;
  if (name == "fastpath") return Method::FastPath;
  if (name == "relative-cone") return Method::RelativeCone;
  return std::nullopt;
}

}  // namespace hoffman
