#include "frobcheck/algebra/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "frobcheck/errors.hpp"

namespace frobcheck {

namespace {

bool grevlex_greater(const Term& a, const Term& b) {
  return grevlex_compare(a.mono, b.mono) > 0;
}

}  // namespace

namespace detail {

std::vector<Term> multiply_terms(std::span<const Term> a, std::span<const Term> b, Prime p,
                                 std::optional<unsigned> below) {
  std::vector<Term> out;
  if (a.empty() || b.empty()) return out;
  std::unordered_map<Monomial, std::uint64_t, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 20));
  const std::size_t n = a.front().mono.size();
  Monomial prod(n);
  for (const auto& s : a) {
    for (const auto& t : b) {
      bool keep = true;
      for (std::size_t i = 0; i < n; ++i) {
        const unsigned e = static_cast<unsigned>(s.mono[i]) + t.mono[i];
        if (below && e >= *below) {
          keep = false;
          break;
        }
        prod.set(i, e);
      }
      if (!keep) continue;
      acc[prod] += static_cast<std::uint64_t>(s.coeff) * t.coeff;
    }
  }
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    const Coeff r = static_cast<Coeff>(c % p.value());
    if (r != 0) out.push_back({m, r});
  }
  std::sort(out.begin(), out.end(), grevlex_greater);
  return out;
}

}  // namespace detail

Polynomial Polynomial::adopt(Prime p, VariableSet vars, std::vector<Term> sorted) {
  Polynomial f(p, std::move(vars));
  f.terms_ = std::move(sorted);
  return f;
}

Polynomial Polynomial::constant(Prime p, VariableSet vars, std::int64_t c) {
  const std::size_t n = vars.size();
  return monomial(p, std::move(vars), Monomial(n), p.reduce(c));
}

Polynomial Polynomial::variable(Prime p, VariableSet vars, std::size_t index) {
  if (index >= vars.size()) throw InvalidArgument("variable index out of range");
  const std::size_t n = vars.size();
  return monomial(p, std::move(vars), Monomial::variable(n, index), 1);
}

Polynomial Polynomial::variable(Prime p, VariableSet vars, std::string_view name) {
  auto idx = vars.index_of(name);
  if (!idx) throw UnknownVariable(std::string(name), 0);
  return variable(p, std::move(vars), *idx);
}

Polynomial Polynomial::monomial(Prime p, VariableSet vars, Monomial m, Coeff c) {
  if (m.size() != vars.size()) throw InvalidArgument("monomial length differs from variable count");
  Polynomial f(p, std::move(vars));
  c %= p.value();
  if (c != 0) f.terms_.push_back({std::move(m), c});
  return f;
}

Polynomial Polynomial::from_terms(Prime p, VariableSet vars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.mono.size() != vars.size())
      throw InvalidArgument("monomial length differs from variable count");
  std::sort(terms.begin(), terms.end(), grevlex_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    const Coeff c = t.coeff % p.value();
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = p.add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back({std::move(t.mono), c});
    }
  }
  return adopt(p, std::move(vars), std::move(out));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw ZeroPolynomial();
  return terms_.front();
}

Coeff Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) {
    return grevlex_compare(t.mono, x) > 0;
  });
  return (it != terms_.end() && it->mono == m) ? it->coeff : 0;
}

void Polynomial::require_compatible(const Polynomial& other) const {
  if (p_ != other.p_) throw InvalidArgument("polynomials over different fields");
  if (!(vars_ == other.vars_)) throw InvalidArgument("polynomials over different variable sets");
}

Polynomial Polynomial::add_scaled(const Polynomial& other, Coeff c) const {
  require_compatible(other);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    int cmp;
    if (a == terms_.end()) cmp = -1;
    else if (b == other.terms_.end()) cmp = 1;
    else cmp = grevlex_compare(a->mono, b->mono);
    if (cmp > 0) {
      out.push_back(*a++);
    } else if (cmp < 0) {
      const Coeff v = p_.mul(b->coeff, c);
      if (v != 0) out.push_back({b->mono, v});
      ++b;
    } else {
      const Coeff v = p_.add(a->coeff, p_.mul(b->coeff, c));
      if (v != 0) out.push_back({a->mono, v});
      ++a;
      ++b;
    }
  }
  return adopt(p_, vars_, std::move(out));
}

Polynomial Polynomial::operator-() const { return scaled(p_.neg(1)); }

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  *this = add_scaled(other, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  *this = add_scaled(other, p_.neg(1));
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_compatible(b);
  return Polynomial::adopt(a.p_, a.vars_, detail::multiply_terms(a.terms_, b.terms_, a.p_));
}

Polynomial Polynomial::scaled(Coeff c) const {
  c %= p_.value();
  if (c == 0) return Polynomial(p_, vars_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = p_.mul(t.coeff, c);
  return adopt(p_, vars_, std::move(out));
}

Polynomial Polynomial::times_monomial(const Monomial& m, Coeff c) const {
  c %= p_.value();
  if (c == 0) return Polynomial(p_, vars_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplying by a monomial preserves any monomial order.
  for (const auto& t : terms_) out.push_back({t.mono * m, p_.mul(t.coeff, c)});
  return adopt(p_, vars_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(p_.inv(terms_.front().coeff));
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= vars_.size()) throw InvalidArgument("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const unsigned e = t.mono[var];
    const Coeff c = p_.mul(t.coeff, e % p_.value());
    if (c == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({std::move(m), c});
  }
  return from_terms(p_, vars_, std::move(out));
}

Polynomial Polynomial::restricted_to(std::span<const std::size_t> keep) const {
  std::vector<bool> allowed(vars_.size(), false);
  for (auto i : keep) allowed.at(i) = true;
  std::vector<Term> out;
  for (const auto& t : terms_) {
    bool ok = true;
    for (std::size_t i = 0; i < vars_.size() && ok; ++i)
      if (t.mono[i] != 0 && !allowed[i]) ok = false;
    if (ok) out.push_back(t);
  }
  return adopt(p_, vars_, std::move(out));
}

Polynomial Polynomial::truncated_below(unsigned q) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.mono.max_exponent() < q) out.push_back(t);
  return adopt(p_, vars_, std::move(out));
}

Polynomial Polynomial::embedded(const VariableSet& larger) const {
  if (!vars_.is_prefix_of(larger)) throw InvalidArgument("target variable set does not extend this one");
  const std::size_t extra = larger.size() - vars_.size();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono.extended(extra), t.coeff});
  return from_terms(p_, larger, std::move(out));
}

Polynomial Polynomial::projected(const VariableSet& smaller) const {
  if (!smaller.is_prefix_of(vars_)) throw InvalidArgument("target variable set is not a prefix");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    for (std::size_t i = smaller.size(); i < vars_.size(); ++i)
      if (t.mono[i] != 0) throw InvalidArgument("projection would drop an occurring variable");
    out.push_back({t.mono.truncated(smaller.size()), t.coeff});
  }
  return from_terms(p_, smaller, std::move(out));
}

std::string format_monomial(const VariableSet& vars, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += vars.name(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    if (t.mono.is_one()) {
      s += std::to_string(t.coeff);
    } else {
      if (t.coeff != 1) s += std::to_string(t.coeff) + '*';
      s += format_monomial(vars_, t.mono);
    }
  }
  return s;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.p_ == b.p_ && a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

Polynomial poly_pow(const Polynomial& f, unsigned long e) {
  Polynomial result = Polynomial::constant(f.prime(), f.vars(), 1);
  Polynomial base = f;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MultiDegree monomial_degree(const VariableSet& vars, const Monomial& m) {
  MultiDegree d(vars.components(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    auto w = vars.weight(i);
    for (std::size_t c = 0; c < d.size(); ++c) d[c] += static_cast<long>(w[c]) * m[i];
  }
  return d;
}

std::optional<MultiDegree> try_weighted_degree(const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  auto terms = f.terms();
  MultiDegree d = monomial_degree(f.vars(), terms.front().mono);
  for (const auto& t : terms.subspan(1))
    if (monomial_degree(f.vars(), t.mono) != d) return std::nullopt;
  return d;
}

MultiDegree weighted_degree(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  auto terms = f.terms();
  MultiDegree d = monomial_degree(f.vars(), terms.front().mono);
  for (const auto& t : terms.subspan(1)) {
    if (monomial_degree(f.vars(), t.mono) != d)
      throw NonHomogeneous(format_monomial(f.vars(), terms.front().mono),
                           format_monomial(f.vars(), t.mono));
  }
  return d;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw ZeroPolynomial();
  const Prime p = f.prime();
  const Term& lg = g.leading_term();
  const Coeff inv = p.inv(lg.coeff);
  Polynomial rest = f;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!lg.mono.divides(lt.mono)) throw InvalidArgument("polynomial division is not exact");
    const Monomial m = lt.mono.quotient(lg.mono);
    const Coeff c = p.mul(lt.coeff, inv);
    quotient.push_back({m, c});
    rest -= g.times_monomial(m, c);
  }
  return Polynomial::from_terms(p, f.vars(), std::move(quotient));
}

}  // namespace frobcheck
