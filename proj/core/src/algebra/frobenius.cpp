#include "frobcheck/algebra/frobenius.hpp"

#include <unordered_map>

#include "frobcheck/errors.hpp"

namespace frobcheck {

namespace {

unsigned checked_box(const Polynomial& f, std::uint64_t q) {
  if (!f.prime().is_power(q))
    throw InvalidArgument("Frobenius power q=" + std::to_string(q) +
                          " is not a power of p=" + std::to_string(f.prime().value()));
  // Every surviving exponent is < q, and products of two survivors stay
  // below 2q, which must fit a 16-bit exponent.
  if (q > 32768) throw ExponentOverflow();
  return static_cast<unsigned>(q);
}

using IntTerms = std::unordered_map<Monomial, std::uint64_t, MonomialHash>;

IntTerms multiply_mod(const IntTerms& a, const IntTerms& b, std::uint64_t modulus) {
  IntTerms out;
  out.reserve(a.size() * 2);
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      auto& slot = out[ma * mb];
      slot = (slot + ca * cb) % modulus;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

Polynomial reduce_mod_frobenius(const Polynomial& f, std::uint64_t q) {
  return f.truncated_below(checked_box(f, q));
}

Polynomial multiply_mod_frobenius(const Polynomial& f, const Polynomial& g, std::uint64_t q) {
  const unsigned box = checked_box(f, q);
  if (!(f.vars() == g.vars()) || f.prime() != g.prime())
    throw InvalidArgument("polynomials over different rings");
  return Polynomial::from_terms(f.prime(), f.vars(),
                                detail::multiply_terms(f.terms(), g.terms(), f.prime(), box));
}

Polynomial pow_mod_frobenius(const Polynomial& f, std::uint64_t e, std::uint64_t q) {
  const unsigned box = checked_box(f, q);
  Polynomial result = reduce_mod_frobenius(Polynomial::constant(f.prime(), f.vars(), 1), q);
  Polynomial base = f.truncated_below(box);
  while (e) {
    if (e & 1) result = multiply_mod_frobenius(result, base, q);
    e >>= 1;
    if (e) base = multiply_mod_frobenius(base, base, q);
    if (result.is_zero()) break;
  }
  return result;
}

Polynomial delta1(const Polynomial& f) {
  const std::uint64_t p = f.prime().value();
  const std::uint64_t modulus = p * p;
  if (f.term_count() <= 1) return Polynomial(f.prime(), f.vars());

  IntTerms lifted;
  for (const auto& t : f.terms()) lifted.emplace(t.mono, t.coeff);

  IntTerms power;
  power.emplace(Monomial(f.vars().size()), 1);
  IntTerms base = lifted;
  for (std::uint64_t e = p; e;) {
    if (e & 1) power = multiply_mod(power, base, modulus);
    e >>= 1;
    if (e) base = multiply_mod(base, base, modulus);
  }

  for (const auto& t : f.terms()) {
    std::uint64_t cp = 1;
    for (std::uint64_t i = 0; i < p; ++i) cp = cp * t.coeff % modulus;
    auto& slot = power[t.mono.pow(static_cast<unsigned>(p))];
    slot = (slot + modulus - cp) % modulus;
  }

  std::vector<Term> out;
  for (const auto& [m, c] : power) {
    if (c == 0) continue;
    if (c % p != 0) throw Error("Witt carry is not divisible by p (internal error)");
    out.push_back({m, static_cast<Coeff>(c / p)});
  }
  return Polynomial::from_terms(f.prime(), f.vars(), std::move(out));
}

}  // namespace frobcheck
