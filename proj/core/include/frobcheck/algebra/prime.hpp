#pragma once

#include <compare>
#include <cstdint>

namespace frobcheck {

using Coeff = std::uint32_t;

/// A prime characteristic 2 <= p <= 97 together with F_p arithmetic on
/// canonical representatives {0, ..., p-1}.
class Prime {
 public:
  static constexpr std::uint32_t kMax = 97;

  explicit Prime(std::uint32_t p);

  std::uint32_t value() const noexcept { return p_; }

  Coeff reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept { return (a * b) % p_; }
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;
  /// Inverse of a nonzero element.
  Coeff inv(Coeff a) const;

  /// True iff q = p^s for some s >= 1.
  bool is_power(std::uint64_t q) const noexcept;

  auto operator<=>(const Prime&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace frobcheck
