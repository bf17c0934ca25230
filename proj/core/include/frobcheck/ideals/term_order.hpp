#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "frobcheck/algebra/monomial.hpp"

namespace frobcheck {

/// Monomial order used by Groebner computations: plain grevlex, or a block
/// order where a set of variables is eliminated (block compared first by
/// degree then grevlex, the rest by grevlex).
class TermOrder {
 public:
  static TermOrder grevlex() { return TermOrder({}); }
  static TermOrder elimination(std::vector<std::size_t> block) { return TermOrder(std::move(block)); }

  bool is_grevlex() const noexcept { return block_.empty(); }
  const std::vector<std::size_t>& eliminated() const noexcept { return block_; }

  /// <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  std::string name() const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  explicit TermOrder(std::vector<std::size_t> block);

  std::vector<std::size_t> block_;
  std::uint64_t mask_ = 0;
};

}  // namespace frobcheck
