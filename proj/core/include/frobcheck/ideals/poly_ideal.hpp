#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "frobcheck/algebra/polynomial.hpp"
#include "frobcheck/ideals/groebner.hpp"

namespace frobcheck {

/// Ideal given by generators. The grevlex Groebner basis is computed on
/// first use and then shared by every copy; concurrent first use is safe.
class PolyIdeal {
 public:
  PolyIdeal(Prime p, VariableSet vars, std::vector<Polynomial> generators);

  Prime prime() const noexcept { return p_; }
  const VariableSet& vars() const noexcept { return vars_; }
  std::span<const Polynomial> generators() const noexcept { return generators_; }
  /// No nonzero generator.
  bool is_zero() const noexcept;

  const GroebnerBasis& groebner_basis() const;
  bool contains(const Polynomial& f) const;
  bool is_unit() const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis> basis;
  };

  Prime p_;
  VariableSet vars_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

GroebnerBasis buchberger(const PolyIdeal& ideal);
bool ideal_membership(const PolyIdeal& ideal, const Polynomial& f);
/// The zero ideal is not the unit ideal.
bool is_unit_ideal(const PolyIdeal& ideal);

/// I : g = {h : h g in I}, by eliminating t from t I + (1 - t) g and
/// dividing the result by g.
PolyIdeal ideal_quotient(const PolyIdeal& ideal, const Polynomial& g);

/// Rabinowitsch test: true iff 1 lies in I + (t g - 1) over the ring with
/// a fresh variable t, i.e. V(I) has no point with g != 0 over the
/// algebraic closure.
bool localized_is_unit(const PolyIdeal& ideal, const Polynomial& g);

}  // namespace frobcheck
