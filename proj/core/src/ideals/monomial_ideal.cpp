#include "frobcheck/ideals/monomial_ideal.hpp"

#include <algorithm>
#include <limits>

#include "frobcheck/errors.hpp"

namespace frobcheck {

MonomialIdeal::MonomialIdeal(VariableSet vars, std::vector<Monomial> generators)
    : vars_(std::move(vars)) {
  for (const auto& g : generators)
    if (g.size() != vars_.size()) throw InvalidArgument("generator length differs from variable count");
  std::sort(generators.begin(), generators.end(),
            [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (auto& g : generators) {
    bool redundant = std::any_of(generators_.begin(), generators_.end(),
                                 [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) generators_.push_back(std::move(g));
  }
}

bool MonomialIdeal::contains(const Monomial& m) const noexcept {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal frobenius_power(const VariableSet& vars, std::uint64_t q) {
  if (q < 2) throw InvalidArgument("Frobenius power needs q >= 2");
  if (q > std::numeric_limits<Monomial::Exponent>::max()) throw ExponentOverflow();
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < vars.size(); ++i)
    gens.push_back(Monomial::variable(vars.size(), i, static_cast<unsigned>(q)));
  return MonomialIdeal(vars, std::move(gens));
}

bool monomial_ideal_contains(const MonomialIdeal& ideal, const Polynomial& f) {
  if (!(ideal.vars() == f.vars())) throw InvalidArgument("ideal and polynomial use different variables");
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const Term& t) { return ideal.contains(t.mono); });
}

}  // namespace frobcheck
