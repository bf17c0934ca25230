#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "frobcheck/algebra/polynomial.hpp"

namespace oracle {

using Exps = std::vector<unsigned>;
using BigInt = boost::multiprecision::cpp_int;

// Integer polynomial as exponent map; no sharing with the library.
using IntPoly = std::map<Exps, BigInt>;

IntPoly lift(const frobcheck::Polynomial& f);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly pow(const IntPoly& a, unsigned e);
IntPoly add(const IntPoly& a, const IntPoly& b, int sign = 1);
frobcheck::Polynomial reduce(const IntPoly& f, frobcheck::Prime p, const frobcheck::VariableSet& vars);

// f^e expanded in full over the integers, reduced mod p, then terms with
// any exponent >= q dropped.
frobcheck::Polynomial pow_then_filter(const frobcheck::Polynomial& f, unsigned e, unsigned q);

// ((sum c m)^p - sum c^p m^p) / p over Z with c in {0..p-1}, mod p.
frobcheck::Polynomial witt_carry(const frobcheck::Polynomial& f);
// (f^p + g^p - (f+g)^p) / p for lifted f, g, mod p.
frobcheck::Polynomial witt_sum_defect(const frobcheck::Polynomial& f, const frobcheck::Polynomial& g);

// Random polynomials.
frobcheck::Polynomial random_poly(std::mt19937_64& rng, frobcheck::Prime p, const frobcheck::VariableSet& vars,
                                  unsigned max_terms, unsigned max_degree);
frobcheck::Polynomial random_homogeneous(std::mt19937_64& rng, frobcheck::Prime p,
                                         const frobcheck::VariableSet& vars, unsigned max_terms, unsigned degree);

// GF(p^k) for (p, k) in {2,3,5,7} x {1,2,3}, elements as digit vectors packed
// into an int; multiplication modulo a hard-coded irreducible.
class SmallField {
 public:
  SmallField(unsigned p, unsigned k);
  unsigned size() const { return q_; }
  unsigned add(unsigned a, unsigned b) const;
  unsigned mul(unsigned a, unsigned b) const;
  // Image of an F_p element.
  unsigned from_prime(unsigned c) const { return c % p_; }

 private:
  unsigned p_, k_, q_;
  std::vector<unsigned> modulus_;  // low coefficients of the monic modulus
};

unsigned evaluate(const frobcheck::Polynomial& f, const SmallField& F, const std::vector<unsigned>& point);

// True if some point of F^n (n = number of variables) is a common zero
// of `gens` with g nonzero.
bool has_point_off(const std::vector<frobcheck::Polynomial>& gens, const frobcheck::Polynomial& g,
                   const SmallField& F);

// Chow ring by naive expansion: products of linear forms expanded in
// Z[h_1..h_k, xi], then h_i^{n_i+1} -> 0 and xi^r rewritten with the
// bundle relation until no xi^r remains.
std::int64_t naive_intersect(const std::vector<int>& dims, const std::vector<std::vector<std::int64_t>>& twists,
                             const std::vector<std::vector<std::int64_t>>& classes);

}  // namespace oracle
