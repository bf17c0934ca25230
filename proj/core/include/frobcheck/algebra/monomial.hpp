#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

#include <boost/container/small_vector.hpp>

namespace frobcheck {

/// Exponent vector. Exponents are 16-bit; products that would overflow
/// throw ExponentOverflow.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<unsigned> exps);
  explicit Monomial(std::span<const unsigned> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, unsigned e);

  unsigned total_degree() const noexcept;
  bool is_one() const noexcept;

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const noexcept;
  /// Exact quotient `this / divisor`; requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const noexcept;
  /// Largest exponent, 0 for the unit monomial.
  unsigned max_exponent() const noexcept;

  Monomial pow(unsigned e) const;
  /// The monomial with `extra` zero exponents appended.
  Monomial extended(std::size_t extra) const;
  /// The monomial restricted to the first `n` variables.
  Monomial truncated(std::size_t n) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  std::size_t hash() const noexcept;

 private:
  boost::container::small_vector<Exponent, 8> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Graded reverse lexicographic comparison (variables ordered by index,
/// x_0 > x_1 > ...). Returns <0, 0, >0.
int grevlex_compare(const Monomial& a, const Monomial& b) noexcept;

}  // namespace frobcheck
