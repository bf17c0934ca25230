#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frobcheck/algebra/variables.hpp"

namespace frobcheck {

/// One weighted projective factor P(w_0, ..., w_n).
struct ProjectiveFactor {
  std::vector<std::string> vars;
  std::vector<int> weights;
};

/// Product of weighted projective spaces. Its variable set has one grading
/// component per factor.
class AmbientSpace {
 public:
  explicit AmbientSpace(std::vector<ProjectiveFactor> factors);

  /// Parses "P(1,1,1,1,3)", "P2xP2", "P(1,1)xP^1". Without `names`,
  /// variables are x0.. for a single factor and x0.., y0.., z0.., ... per
  /// factor otherwise; `names` assigns all variables in factor order.
  static AmbientSpace parse(std::string_view spec,
                            const std::optional<std::vector<std::string>>& names = std::nullopt);

  const VariableSet& variables() const noexcept { return vars_; }
  std::span<const ProjectiveFactor> factors() const noexcept { return factors_; }
  std::size_t factor_count() const noexcept { return factors_.size(); }
  /// Global variable indices of factor j.
  std::vector<std::size_t> factor_variables(std::size_t j) const;
  std::size_t factor_of(std::size_t var) const { return factor_of_.at(var); }
  /// Dimension of factor j (number of variables minus one).
  std::size_t factor_dimension(std::size_t j) const { return factors_.at(j).vars.size() - 1; }

  std::string to_string() const;

 private:
  std::vector<ProjectiveFactor> factors_;
  VariableSet vars_;
  std::vector<std::size_t> factor_of_;
  std::vector<std::size_t> offsets_;
};

/// Variables of one factor sharing a weight gcd > 1: the coordinate
/// stratum where all other variables of that factor vanish is a locus of
/// cyclic quotient singularities of that order.
struct SingularStratum {
  std::size_t factor;
  std::vector<std::size_t> variables;
  int order;

  friend bool operator==(const SingularStratum&, const SingularStratum&) = default;
};

/// Maximal variable subsets per factor whose weights have gcd > 1.
std::vector<SingularStratum> ambient_singular_strata(const AmbientSpace& space);

}  // namespace frobcheck
