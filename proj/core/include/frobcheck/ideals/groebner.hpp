#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "frobcheck/algebra/polynomial.hpp"
#include "frobcheck/ideals/term_order.hpp"

namespace frobcheck {

/// A reduced Groebner basis: monic elements, no term of any element
/// divisible by the leading monomial of another, sorted by increasing
/// leading monomial. The empty basis generates the zero ideal.
class GroebnerBasis {
 public:
  GroebnerBasis(Prime p, VariableSet vars, TermOrder order, std::vector<Polynomial> elements);

  Prime prime() const noexcept { return p_; }
  const VariableSet& vars() const noexcept { return vars_; }
  const TermOrder& order() const noexcept { return order_; }
  std::span<const Polynomial> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  /// True iff the basis is {1}.
  bool is_unit() const noexcept;
  const Monomial& leading_monomial(std::size_t i) const { return leads_.at(i); }

 private:
  Prime p_;
  VariableSet vars_;
  TermOrder order_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leads_;
};

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t product_criterion = 0;
  std::size_t chain_criterion = 0;
  std::size_t reductions = 0;
  std::size_t zero_reductions = 0;
  bool unit_short_circuit = false;
};

/// Leading term of a nonzero polynomial under `order`.
Term leading_term(const Polynomial& f, const TermOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order);

/// Full reduction of f by `divisors` (any order of preference: the first
/// divisor whose leading monomial divides the current term is used).
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const TermOrder& order);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

/// Buchberger's algorithm with normal pair selection and both Buchberger
/// criteria. Stops early with {1} as soon as a nonzero constant appears.
GroebnerBasis buchberger(Prime p, VariableSet vars, std::span<const Polynomial> generators,
                         const TermOrder& order = TermOrder::grevlex(),
                         BuchbergerStats* stats = nullptr);

/// True iff every S-polynomial of `elements` reduces to zero.
bool satisfies_buchberger_criterion(std::span<const Polynomial> elements, const TermOrder& order);

}  // namespace frobcheck
