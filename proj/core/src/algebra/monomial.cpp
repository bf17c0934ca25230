#include "frobcheck/algebra/monomial.hpp"

#include <algorithm>
#include <limits>

#include "frobcheck/errors.hpp"

namespace frobcheck {

namespace {

constexpr unsigned kMaxExponent = std::numeric_limits<Monomial::Exponent>::max();

Monomial::Exponent checked(unsigned long e) {
  if (e > kMaxExponent) throw ExponentOverflow();
  return static_cast<Monomial::Exponent>(e);
}

}  // namespace

Monomial::Monomial(std::initializer_list<unsigned> exps) {
  exps_.reserve(exps.size());
  for (unsigned e : exps) exps_.push_back(checked(e));
}

Monomial::Monomial(std::span<const unsigned> exps) {
  exps_.reserve(exps.size());
  for (unsigned e : exps) exps_.push_back(checked(e));
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) { exps_.at(i) = checked(e); }

unsigned Monomial::total_degree() const noexcept {
  unsigned s = 0;
  for (auto e : exps_) s += e;
  return s;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r(size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (divisor.exps_[i] > exps_[i]) throw InvalidArgument("monomial quotient is not exact");
    r.exps_[i] = static_cast<Exponent>(exps_[i] - divisor.exps_[i]);
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

unsigned Monomial::max_exponent() const noexcept {
  unsigned m = 0;
  for (auto e : exps_) m = std::max<unsigned>(m, e);
  return m;
}

Monomial Monomial::pow(unsigned e) const {
  Monomial r(size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = checked(static_cast<unsigned long>(exps_[i]) * e);
  return r;
}

Monomial Monomial::extended(std::size_t extra) const {
  Monomial r = *this;
  r.exps_.resize(size() + extra, 0);
  return r;
}

Monomial Monomial::truncated(std::size_t n) const {
  Monomial r = *this;
  r.exps_.resize(n);
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i)
    r.exps_[i] = checked(static_cast<unsigned long>(a.exps_[i]) + b.exps_[i]);
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

int grevlex_compare(const Monomial& a, const Monomial& b) noexcept {
  const unsigned da = a.total_degree();
  const unsigned db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace frobcheck
