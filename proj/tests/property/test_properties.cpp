#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "frobcheck/algebra/frobenius.hpp"
#include "frobcheck/algebra/parse.hpp"
#include "frobcheck/chow/intersection_ring.hpp"
#include "frobcheck/dplattice/lattice.hpp"
#include "frobcheck/dplattice/projective_plane.hpp"
#include "frobcheck/ideals/groebner.hpp"
#include "frobcheck/ideals/monomial_ideal.hpp"
#include "frobcheck/ideals/poly_ideal.hpp"
#include "frobcheck/splitting/fedder.hpp"
#include "oracles.hpp"

using namespace frobcheck;

namespace {

constexpr int kCases = 100;
constexpr unsigned kPrimes[] = {2, 3, 5, 7};

std::mt19937_64 seeded(std::uint64_t salt) { return std::mt19937_64(0x5eed'f00dULL ^ salt); }

unsigned pick_prime(std::mt19937_64& rng, unsigned hi = 4) {
  return kPrimes[std::uniform_int_distribution<unsigned>(0, hi - 1)(rng)];
}

VariableSet vars_n(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return VariableSet::standard(std::move(names));
}

std::vector<Polynomial> random_gens(std::mt19937_64& rng, Prime p, const VariableSet& v, unsigned count,
                                    unsigned terms, unsigned deg) {
  std::vector<Polynomial> g;
  while (g.size() < count) {
    auto f = oracle::random_poly(rng, p, v, terms, deg);
    if (!f.is_zero()) g.push_back(std::move(f));
  }
  return g;
}

}  // namespace

TEST(Frobenius, PowerIsAdditive) {
  auto rng = seeded(1);
  for (int i = 0; i < kCases; ++i) {
    const Prime p(pick_prime(rng, 3));
    const auto v = vars_n(3);
    const auto f = oracle::random_poly(rng, p, v, 4, 3), g = oracle::random_poly(rng, p, v, 4, 3);
    EXPECT_EQ(poly_pow(f + g, p.value()), poly_pow(f, p.value()) + poly_pow(g, p.value())) << f.to_string();
  }
}

TEST(Frobenius, PowModMatchesFullExpansion) {
  auto rng = seeded(2);
  for (int i = 0; i < kCases; ++i) {
    const unsigned p = pick_prime(rng);
    const auto v = vars_n(3);
    const auto f = oracle::random_poly(rng, Prime(p), v, 4, 3);
    const unsigned e = std::uniform_int_distribution<unsigned>(1, p)(rng);
    const unsigned q = i % 3 == 0 ? p * p : p;
    EXPECT_EQ(pow_mod_frobenius(f, e, q), oracle::pow_then_filter(f, e, q)) << f.to_string() << " ^" << e;
  }
}

TEST(Delta1, MatchesIntegerCarry) {
  auto rng = seeded(3);
  for (int i = 0; i < kCases; ++i) {
    const Prime p(pick_prime(rng));
    const auto f = oracle::random_poly(rng, p, vars_n(3), 4, 3);
    EXPECT_EQ(delta1(f), oracle::witt_carry(f)) << f.to_string();
  }
}

TEST(Delta1, MonomialScaling) {
  auto rng = seeded(4);
  for (int i = 0; i < kCases; ++i) {
    const Prime p(pick_prime(rng));
    const auto v = vars_n(3);
    const auto f = oracle::random_poly(rng, p, v, 4, 3);
    std::vector<unsigned> e(3);
    for (auto& x : e) x = std::uniform_int_distribution<unsigned>(0, 2)(rng);
    const Monomial m{std::span<const unsigned>(e)};
    const auto mp = Polynomial::monomial(p, v, m.pow(p.value()));
    EXPECT_EQ(delta1(f.times_monomial(m, 1)), delta1(f) * mp) << f.to_string();
  }
}

TEST(Delta1, HomogeneousOfDegreePd) {
  auto rng = seeded(5);
  for (int i = 0; i < kCases; ++i) {
    const Prime p(pick_prime(rng));
    const unsigned d = std::uniform_int_distribution<unsigned>(1, 3)(rng);
    const auto f = oracle::random_homogeneous(rng, p, vars_n(3), 4, d);
    const auto r = delta1(f);
    if (r.is_zero()) continue;
    EXPECT_EQ(weighted_degree(r), (MultiDegree{static_cast<std::int64_t>(p.value() * d)})) << f.to_string();
  }
}

TEST(Delta1, WittSumLawOnDisjointSupports) {
  auto rng = seeded(6);
  for (int i = 0; i < kCases; ++i) {
    const Prime p(pick_prime(rng));
    const auto v = vars_n(3);
    const auto f = oracle::random_poly(rng, p, v, 3, 3);
    auto g = oracle::random_poly(rng, p, v, 3, 3);
    // drop shared monomials so the lifts add without carries
    std::vector<Term> keep;
    for (const auto& t : g.terms())
      if (f.coefficient(t.mono) == 0) keep.push_back(t);
    g = Polynomial::from_terms(p, v, std::move(keep));
    EXPECT_EQ(delta1(f + g), delta1(f) + delta1(g) - oracle::witt_sum_defect(f, g)) << f.to_string() << " | "
                                                                                   << g.to_string();
  }
}

TEST(Parse, RoundTrip) {
  auto rng = seeded(7);
  for (int i = 0; i < kCases; ++i) {
    const Prime p(pick_prime(rng));
    const auto v = vars_n(4);
    const auto f = oracle::random_poly(rng, p, v, 6, 5);
    EXPECT_EQ(parse_poly(f.to_string(), v, p), f) << f.to_string();
  }
}

TEST(Groebner, SatisfiesBuchbergerCriterion) {
  auto rng = seeded(8);
  for (int i = 0; i < kCases; ++i) {
    const Prime p(pick_prime(rng));
    const auto v = vars_n(3);
    const auto gens = random_gens(rng, p, v, 2 + i % 2, 3, 3);
    const PolyIdeal I(p, v, gens);
    const auto& gb = I.groebner_basis();
    EXPECT_TRUE(satisfies_buchberger_criterion(gb.elements(), gb.order()));
    for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb).is_zero()) << g.to_string();
  }
}

TEST(Groebner, NormalFormIdempotentAndLinear) {
  auto rng = seeded(9);
  for (int i = 0; i < kCases; ++i) {
    const Prime p(pick_prime(rng));
    const auto v = vars_n(3);
    const PolyIdeal I(p, v, random_gens(rng, p, v, 2, 3, 3));
    const auto& gb = I.groebner_basis();
    const auto f = oracle::random_poly(rng, p, v, 4, 4), g = oracle::random_poly(rng, p, v, 4, 4);
    const auto nf = normal_form(f, gb);
    EXPECT_EQ(normal_form(nf, gb), nf);
    EXPECT_EQ(normal_form(f + g, gb), nf + normal_form(g, gb));
    EXPECT_TRUE(I.contains(f - nf));
    for (const auto& t : nf.terms())
      for (std::size_t k = 0; k < gb.size(); ++k) EXPECT_FALSE(gb.leading_monomial(k).divides(t.mono));
  }
}

TEST(Membership, MonomialIdealAgreesWithBuchberger) {
  auto rng = seeded(10);
  const auto v = vars_n(3);
  const Prime p(5);
  int members = 0;
  for (int i = 0; i < 2 * kCases; ++i) {
    std::vector<Monomial> mons;
    std::vector<Polynomial> polys;
    for (int k = 0; k < 3; ++k) {
      std::vector<unsigned> e(3);
      for (auto& x : e) x = std::uniform_int_distribution<unsigned>(0, 3)(rng);
      mons.emplace_back(std::span<const unsigned>(e));
      polys.push_back(Polynomial::monomial(p, v, mons.back()));
    }
    const MonomialIdeal m(v, mons);
    const PolyIdeal I(p, v, polys);
    auto f = oracle::random_poly(rng, p, v, 3, 5);
    if (i % 2) f = f * polys[0];  // bias towards members
    const bool a = monomial_ideal_contains(m, f);
    EXPECT_EQ(a, I.contains(f)) << f.to_string();
    members += a;
  }
  EXPECT_GT(members, 20);
}

TEST(LocalizedUnit, AgreesWithPointSearch) {
  auto rng = seeded(11);
  int units = 0, nonunits = 0;
  for (int i = 0; i < kCases; ++i) {
    const unsigned p = i % 2 ? 2 : 3;
    const std::size_t n = 2 + i % 2;
    const auto v = vars_n(n);
    const auto gens = random_gens(rng, Prime(p), v, 1 + i % 3, 3, 3);
    const auto g = random_gens(rng, Prime(p), v, 1, 2, 2)[0];
    const bool unit = localized_is_unit(PolyIdeal(Prime(p), v, gens), g);
    bool found = false;
    for (unsigned k = 1; k <= 3 && !found; ++k) found = oracle::has_point_off(gens, g, oracle::SmallField(p, k));
    // a point of V(I) off V(g) in any extension rules out a unit
    if (found) EXPECT_FALSE(unit) << g.to_string();
    units += unit;
    nonunits += !unit;
  }
  EXPECT_GT(units, 5);
  EXPECT_GT(nonunits, 5);
}

TEST(IdealQuotient, IsSound) {
  auto rng = seeded(12);
  for (int i = 0; i < kCases; ++i) {
    const Prime p(pick_prime(rng, 3));
    const auto v = vars_n(3);
    const PolyIdeal I(p, v, random_gens(rng, p, v, 2, 3, 2));
    const auto g = random_gens(rng, p, v, 1, 2, 2)[0];
    const PolyIdeal Q = ideal_quotient(I, g);
    for (const auto& h : Q.groebner_basis().elements()) EXPECT_TRUE(I.contains(h * g)) << h.to_string();
    for (const auto& h : I.groebner_basis().elements()) EXPECT_TRUE(Q.contains(h));
  }
}

TEST(Fedder, AgreesWithBruteForce) {
  auto rng = seeded(13);
  int split = 0;
  for (int i = 0; i < kCases; ++i) {
    const unsigned p = i % 2 ? 2 : 3;
    const auto v = vars_n(3 + i % 2);
    const unsigned d = std::uniform_int_distribution<unsigned>(1, 4)(rng);
    const auto f = oracle::random_homogeneous(rng, Prime(p), v, 5, d);
    const auto verdict = fedder_fsplit(HypersurfaceRing(f));
    const auto brute = oracle::pow_then_filter(f, p - 1, p);
    EXPECT_EQ(verdict.status == SplitStatus::FSplit, !brute.is_zero()) << f.to_string();
    if (verdict.witness) EXPECT_NE(brute.coefficient(*verdict.witness), 0u);
    split += verdict.status == SplitStatus::FSplit;
  }
  EXPECT_GT(split, 10);
  EXPECT_LT(split, kCases);
}

namespace {

struct RandomRing {
  std::vector<int> dims;
  std::vector<std::vector<std::int64_t>> twists;
  IntersectionRing ring;
};

RandomRing random_ring(std::mt19937_64& rng, bool bundle) {
  std::vector<int> dims;
  int left = std::uniform_int_distribution<int>(1, bundle ? 3 : 4)(rng);
  while (left > 0) {
    const int d = std::uniform_int_distribution<int>(1, left)(rng);
    dims.push_back(d);
    left -= d;
  }
  std::vector<std::vector<std::int64_t>> tw;
  if (bundle) {
    const int r = std::uniform_int_distribution<int>(2, 3)(rng);
    for (int j = 0; j < r; ++j) {
      std::vector<std::int64_t> a(dims.size());
      for (auto& x : a) x = std::uniform_int_distribution<int>(-2, 2)(rng);
      tw.push_back(a);
    }
  }
  IntersectionRing ring = bundle ? IntersectionRing(ProductBase(dims), SplitBundleSpec{tw})
                                 : IntersectionRing(ProductBase(dims));
  return {dims, tw, std::move(ring)};
}

std::vector<std::int64_t> random_coeffs(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::int64_t> c(n);
  for (auto& x : c) x = std::uniform_int_distribution<int>(-3, 3)(rng);
  return c;
}

}  // namespace

TEST(Chow, IntersectMatchesNaiveExpansion) {
  auto rng = seeded(14);
  for (int i = 0; i < kCases; ++i) {
    const auto rr = random_ring(rng, i % 2 == 1);
    std::vector<DivClass> cs;
    std::vector<std::vector<std::int64_t>> raw;
    for (int k = 0; k < rr.ring.dimension(); ++k) {
      raw.push_back(random_coeffs(rng, rr.ring.generator_count()));
      cs.emplace_back(raw.back());
    }
    EXPECT_EQ(intersect(rr.ring, cs), oracle::naive_intersect(rr.dims, rr.twists, raw)) << i;
  }
}

TEST(Chow, MultilinearAndSymmetric) {
  auto rng = seeded(15);
  for (int i = 0; i < kCases; ++i) {
    const auto rr = random_ring(rng, i % 2 == 1);
    const auto& R = rr.ring;
    std::vector<DivClass> cs;
    for (int k = 0; k < R.dimension(); ++k) cs.emplace_back(random_coeffs(rng, R.generator_count()));
    const DivClass extra(random_coeffs(rng, R.generator_count()));
    const std::int64_t s = std::uniform_int_distribution<int>(-3, 3)(rng);
    auto sum = cs;
    sum[0] = s * cs[0] + extra;
    auto alt = cs;
    alt[0] = extra;
    EXPECT_EQ(intersect(R, sum), s * intersect(R, cs) + intersect(R, alt));
    auto perm = cs;
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(intersect(R, perm), intersect(R, cs));
  }
}

TEST(Chow, BundleRelationAnnihilates) {
  auto rng = seeded(16);
  for (int i = 0; i < kCases; ++i) {
    const auto rr = random_ring(rng, true);
    const auto& R = rr.ring;
    ChowElement rel = R.constant(1);
    for (const auto& a : R.twists()) rel = R.multiply(rel, R.element(R.xi() - R.pullback(a)));
    // fill up to the top degree with random divisors
    ChowElement e = rel;
    for (int k = static_cast<int>(R.rank()); k < R.dimension(); ++k)
      e = R.multiply(e, R.element(DivClass(random_coeffs(rng, R.generator_count()))));
    EXPECT_EQ(R.degree(e), 0);
  }
}

TEST(Lattice, EnumerationClosedUnderPermutingPoints) {
  auto rng = seeded(17);
  for (int i = 0; i < kCases; ++i) {
    const int r = std::uniform_int_distribution<int>(2, 8)(rng);
    const PicLattice L(r);
    const auto cs = enumerate_classes(L, -1, -1, 3);
    const std::set<LatticeClass> all(cs.begin(), cs.end());
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (const auto& c : cs) {
      LatticeClass img{c.d, std::vector<std::int64_t>(r)};
      for (int k = 0; k < r; ++k) img.m[perm[k]] = c.m[k];
      EXPECT_TRUE(all.count(img)) << to_string(c);
    }
  }
}

TEST(PGL3, OrbitStabilizerOnRandomConfigs) {
  auto rng = seeded(18);
  for (int i = 0; i < kCases; ++i) {
    const unsigned q = i % 4 == 0 ? 3 : 2;
    const FiniteField F(q);
    auto pts = all_points(F);
    std::shuffle(pts.begin(), pts.end(), rng);
    pts.resize(std::uniform_int_distribution<std::size_t>(1, 5)(rng));
    const PointConfig c(F, pts);
    const auto r = pgl_orbit_canonical(F, c);
    EXPECT_EQ(r.orbit_size * r.stabilizer_size, pgl3_order(q));
    // canonical form is an orbit invariant
    const Matrix3 g = pgl3_elements(F)[std::uniform_int_distribution<std::size_t>(0, pgl3_order(q) - 1)(rng)];
    std::vector<PlanePoint> moved;
    for (const auto& x : c.points()) moved.push_back(apply(F, g, x));
    EXPECT_EQ(pgl_orbit_canonical(F, PointConfig(F, moved)).canonical, r.canonical);
  }
}
