#include "frobcheck/algebra/prime.hpp"

#include <string>

#include "frobcheck/errors.hpp"

namespace frobcheck {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Prime::Prime(std::uint32_t p) : p_(p) {
  if (p < 2 || p > kMax || !is_prime(p))
    throw InvalidArgument("characteristic must be a prime in [2, 97], got " +
                          std::to_string(p));
}

Coeff Prime::pow(Coeff a, std::uint64_t e) const noexcept {
  Coeff r = 1 % p_;
  Coeff b = a % p_;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Coeff Prime::inv(Coeff a) const {
  if (a % p_ == 0) throw InvalidArgument("zero has no inverse in F_p");
  return pow(a, p_ - 2);
}

bool Prime::is_power(std::uint64_t q) const noexcept {
  if (q < p_) return false;
  while (q % p_ == 0) q /= p_;
  return q == 1;
}

}  // namespace frobcheck
