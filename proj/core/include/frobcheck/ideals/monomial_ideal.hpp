#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "frobcheck/algebra/polynomial.hpp"

namespace frobcheck {

/// Monomial ideal with a minimal generating set (no generator divides
/// another).
class MonomialIdeal {
 public:
  MonomialIdeal(VariableSet vars, std::vector<Monomial> generators);

  const VariableSet& vars() const noexcept { return vars_; }
  std::span<const Monomial> generators() const noexcept { return generators_; }
  bool contains(const Monomial& m) const noexcept;

 private:
  VariableSet vars_;
  std::vector<Monomial> generators_;
};

/// m^[q] = (x_i^q : all variables).
MonomialIdeal frobenius_power(const VariableSet& vars, std::uint64_t q);

/// True iff every term of f lies in I (so 0 is always contained).
bool monomial_ideal_contains(const MonomialIdeal& ideal, const Polynomial& f);

}  // namespace frobcheck
