#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace frobcheck {

/// Weighted multidegree: one entry per grading component.
using MultiDegree = std::vector<long>;

/// Ordered, immutable list of distinct variable names with per-variable
/// multiweights. Copies share storage.
class VariableSet {
 public:
  VariableSet(std::vector<std::string> names, std::vector<std::vector<int>> weights);

  /// Single grading component, all weights 1.
  static VariableSet standard(std::vector<std::string> names);
  /// Single grading component with the given weights.
  static VariableSet weighted(std::vector<std::string> names, std::vector<int> weights);

  std::size_t size() const noexcept { return data_->names.size(); }
  std::size_t components() const noexcept { return data_->components; }
  const std::string& name(std::size_t i) const { return data_->names.at(i); }
  const std::vector<std::string>& names() const noexcept { return data_->names; }
  std::span<const int> weight(std::size_t i) const { return data_->weights.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// A new set with one extra variable appended. Its name is `prefix` (or
  /// `prefix` plus a counter if taken) and it weighs 1 in component 0.
  VariableSet with_fresh_variable(std::string_view prefix = "_t") const;

  /// True if `other` starts with exactly the variables of this set.
  bool is_prefix_of(const VariableSet& other) const;

  friend bool operator==(const VariableSet& a, const VariableSet& b);

 private:
  struct Data {
    std::vector<std::string> names;
    std::vector<std::vector<int>> weights;
    std::size_t components = 0;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace frobcheck
