#pragma once

#include <cstdint>

#include "frobcheck/algebra/polynomial.hpp"

namespace frobcheck {

/// Canonical representative of f in S / (x_i^q : all i): every term with
/// an exponent >= q is dropped.
Polynomial reduce_mod_frobenius(const Polynomial& f, std::uint64_t q);

/// f * g in S / (x_i^q).
Polynomial multiply_mod_frobenius(const Polynomial& f, const Polynomial& g, std::uint64_t q);

/// f^e in S / (x_i^q) where q is a power of the field characteristic.
/// Reduction happens after every multiplication, so intermediate terms
/// never leave the box of exponents < q.
Polynomial pow_mod_frobenius(const Polynomial& f, std::uint64_t e, std::uint64_t q);

/// Witt carry: with every coefficient lifted to {0..p-1},
///   delta1(f) = ((sum c_i m_i)^p - sum c_i^p m_i^p) / p  mod p.
/// The lifted expansion is carried out in Z/p^2, which determines the
/// quotient mod p exactly.
Polynomial delta1(const Polynomial& f);

}  // namespace frobcheck
