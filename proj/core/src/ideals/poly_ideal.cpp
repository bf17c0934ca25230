#include "frobcheck/ideals/poly_ideal.hpp"

#include <algorithm>

#include "frobcheck/errors.hpp"

namespace frobcheck {

PolyIdeal::PolyIdeal(Prime p, VariableSet vars, std::vector<Polynomial> generators)
    : p_(p), vars_(std::move(vars)), generators_(std::move(generators)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_)
    if (g.prime() != p_ || !(g.vars() == vars_))
      throw InvalidArgument("ideal generator lives in a different ring");
}

bool PolyIdeal::is_zero() const noexcept {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& g) { return g.is_zero(); });
}

const GroebnerBasis& PolyIdeal::groebner_basis() const {
  std::call_once(cache_->once, [&] {
    cache_->basis.emplace(frobcheck::buchberger(p_, vars_, generators_, TermOrder::grevlex()));
  });
  return *cache_->basis;
}

bool PolyIdeal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  return normal_form(f, groebner_basis()).is_zero();
}

bool PolyIdeal::is_unit() const { return groebner_basis().is_unit(); }

GroebnerBasis buchberger(const PolyIdeal& ideal) { return ideal.groebner_basis(); }

bool ideal_membership(const PolyIdeal& ideal, const Polynomial& f) { return ideal.contains(f); }

bool is_unit_ideal(const PolyIdeal& ideal) { return ideal.is_unit(); }

PolyIdeal ideal_quotient(const PolyIdeal& ideal, const Polynomial& g) {
  if (g.is_zero()) throw ZeroPolynomial();
  if (g.prime() != ideal.prime() || !(g.vars() == ideal.vars()))
    throw InvalidArgument("divisor lives in a different ring");
  const Prime p = ideal.prime();
  if (ideal.is_zero()) return PolyIdeal(p, ideal.vars(), {});

  const VariableSet ext = ideal.vars().with_fresh_variable();
  const std::size_t t_index = ext.size() - 1;
  const Polynomial t = Polynomial::variable(p, ext, t_index);
  const Polynomial one = Polynomial::constant(p, ext, 1);

  std::vector<Polynomial> gens;
  for (const auto& h : ideal.generators())
    if (!h.is_zero()) gens.push_back(t * h.embedded(ext));
  gens.push_back((one - t) * g.embedded(ext));

  const GroebnerBasis gb = buchberger(p, ext, gens, TermOrder::elimination({t_index}));
  std::vector<Polynomial> quotients;
  for (const auto& e : gb.elements()) {
    if (std::any_of(e.terms().begin(), e.terms().end(),
                    [&](const Term& term) { return term.mono[t_index] != 0; }))
      continue;
    quotients.push_back(exact_divide(e.projected(ideal.vars()), g));
  }
  return PolyIdeal(p, ideal.vars(), std::move(quotients));
}

bool localized_is_unit(const PolyIdeal& ideal, const Polynomial& g) {
  if (g.is_zero()) throw ZeroPolynomial();
  if (g.prime() != ideal.prime() || !(g.vars() == ideal.vars()))
    throw InvalidArgument("localizing element lives in a different ring");
  const Prime p = ideal.prime();
  const VariableSet ext = ideal.vars().with_fresh_variable();
  const Polynomial t = Polynomial::variable(p, ext, ext.size() - 1);

  std::vector<Polynomial> gens;
  for (const auto& h : ideal.generators())
    if (!h.is_zero()) gens.push_back(h.embedded(ext));
  gens.push_back(t * g.embedded(ext) - Polynomial::constant(p, ext, 1));
  return buchberger(p, ext, gens, TermOrder::grevlex()).is_unit();
}

}  // namespace frobcheck
