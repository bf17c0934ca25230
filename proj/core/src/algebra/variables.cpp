#include "frobcheck/algebra/variables.hpp"

#include <algorithm>
#include <unordered_set>

#include "frobcheck/errors.hpp"

namespace frobcheck {

VariableSet::VariableSet(std::vector<std::string> names,
                         std::vector<std::vector<int>> weights) {
  if (names.size() != weights.size())
    throw InvalidArgument("variable names and weights differ in length");
  if (names.empty()) throw InvalidArgument("a variable set needs at least one variable");
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw InvalidArgument("empty variable name");
    if (!seen.insert(n).second) throw InvalidArgument("duplicate variable name '" + n + "'");
  }
  const std::size_t k = weights.front().size();
  if (k == 0) throw InvalidArgument("weights need at least one grading component");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const auto& w = weights[i];
    if (w.size() != k)
      throw InvalidArgument("variable '" + names[i] + "' has the wrong number of weight components");
    if (std::any_of(w.begin(), w.end(), [](int x) { return x < 0; }))
      throw InvalidArgument("negative weight on variable '" + names[i] + "'");
    if (std::none_of(w.begin(), w.end(), [](int x) { return x > 0; }))
      throw InvalidArgument("variable '" + names[i] + "' has no positive weight component");
  }
  auto d = std::make_shared<Data>();
  d->names = std::move(names);
  d->weights = std::move(weights);
  d->components = k;
  data_ = std::move(d);
}

VariableSet VariableSet::standard(std::vector<std::string> names) {
  std::vector<std::vector<int>> w(names.size(), std::vector<int>{1});
  return VariableSet(std::move(names), std::move(w));
}

VariableSet VariableSet::weighted(std::vector<std::string> names, std::vector<int> weights) {
  std::vector<std::vector<int>> w;
  w.reserve(weights.size());
  for (int x : weights) w.push_back({x});
  return VariableSet(std::move(names), std::move(w));
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const {
  const auto& n = data_->names;
  auto it = std::find(n.begin(), n.end(), name);
  if (it == n.end()) return std::nullopt;
  return static_cast<std::size_t>(it - n.begin());
}

VariableSet VariableSet::with_fresh_variable(std::string_view prefix) const {
  std::string name(prefix);
  for (int k = 0; index_of(name); ++k) name = std::string(prefix) + std::to_string(k);
  auto names = data_->names;
  auto weights = data_->weights;
  names.push_back(name);
  std::vector<int> w(components(), 0);
  w[0] = 1;
  weights.push_back(std::move(w));
  return VariableSet(std::move(names), std::move(weights));
}

bool VariableSet::is_prefix_of(const VariableSet& other) const {
  if (other.size() < size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (name(i) != other.name(i)) return false;
  return true;
}

bool operator==(const VariableSet& a, const VariableSet& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->names == b.data_->names && a.data_->weights == b.data_->weights;
}

}  // namespace frobcheck
