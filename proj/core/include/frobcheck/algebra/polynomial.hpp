#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frobcheck/algebra/monomial.hpp"
#include "frobcheck/algebra/prime.hpp"
#include "frobcheck/algebra/variables.hpp"

namespace frobcheck {

struct Term {
  Monomial mono;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over F_p. Terms are kept in strictly descending
/// grevlex order with nonzero coefficients, so equal polynomials have
/// equal term vectors.
class Polynomial {
 public:
  Polynomial(Prime p, VariableSet vars) : p_(p), vars_(std::move(vars)) {}

  static Polynomial constant(Prime p, VariableSet vars, std::int64_t c);
  static Polynomial variable(Prime p, VariableSet vars, std::size_t index);
  static Polynomial variable(Prime p, VariableSet vars, std::string_view name);
  static Polynomial monomial(Prime p, VariableSet vars, Monomial m, Coeff c = 1);
  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(Prime p, VariableSet vars, std::vector<Term> terms);

  Prime prime() const noexcept { return p_; }
  const VariableSet& vars() const noexcept { return vars_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  /// Zero or a nonzero multiple of 1.
  bool is_constant() const noexcept;
  std::size_t term_count() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  /// Grevlex-leading term. Throws ZeroPolynomial on 0.
  const Term& leading_term() const;
  Coeff coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial scaled(Coeff c) const;
  Polynomial times_monomial(const Monomial& m, Coeff c) const;
  /// Scales so the leading coefficient is 1. Zero stays zero.
  Polynomial monic() const;

  Polynomial derivative(std::size_t var) const;
  /// Keeps only the terms whose variables all lie in `vars` (sets every
  /// other variable to zero).
  Polynomial restricted_to(std::span<const std::size_t> vars) const;
  /// Drops every term with some exponent >= q.
  Polynomial truncated_below(unsigned q) const;

  /// Same polynomial in a variable set that extends this one.
  Polynomial embedded(const VariableSet& larger) const;
  /// Same polynomial in a prefix variable set; the dropped variables must
  /// not occur.
  Polynomial projected(const VariableSet& smaller) const;

  std::string to_string() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  static Polynomial adopt(Prime p, VariableSet vars, std::vector<Term> sorted);
  void require_compatible(const Polynomial& other) const;
  Polynomial add_scaled(const Polynomial& other, Coeff c) const;

  Prime p_;
  VariableSet vars_;
  std::vector<Term> terms_;
};

std::string format_monomial(const VariableSet& vars, const Monomial& m);

/// Exact power by repeated squaring; f^0 = 1.
Polynomial poly_pow(const Polynomial& f, unsigned long e);

MultiDegree monomial_degree(const VariableSet& vars, const Monomial& m);

/// Common weighted multidegree of all terms. Throws ZeroPolynomial or
/// NonHomogeneous.
MultiDegree weighted_degree(const Polynomial& f);
std::optional<MultiDegree> try_weighted_degree(const Polynomial& f);

/// f / g when g divides f exactly (grevlex division); throws
/// InvalidArgument otherwise.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

namespace detail {
/// Product of term lists. When `below` is set, products with an exponent
/// >= *below are discarded on the fly.
std::vector<Term> multiply_terms(std::span<const Term> a, std::span<const Term> b, Prime p,
                                 std::optional<unsigned> below = std::nullopt);
}  // namespace detail

}  // namespace frobcheck
