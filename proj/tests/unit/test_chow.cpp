#include <gtest/gtest.h>

#include "frobcheck/chow/intersection_ring.hpp"
#include "frobcheck/errors.hpp"
#include "oracles.hpp"

using namespace frobcheck;

namespace {

DivClass D(std::vector<std::int64_t> c) { return DivClass(std::move(c)); }

}  // namespace

TEST(Intersect, ProjectiveSpace) {
  const IntersectionRing r(ProductBase({3}));
  const std::vector<DivClass> hhh{r.h(0), r.h(0), r.h(0)};
  EXPECT_EQ(intersect(r, hhh), 1);
}

TEST(Intersect, FourLinesOnP1Fourth) {
  const IntersectionRing r(ProductBase({1, 1, 1, 1}));
  const std::vector<DivClass> c{r.h(0), r.h(1), r.h(2), r.h(3)};
  EXPECT_EQ(intersect(r, c), 1);
}

TEST(Intersect, AnticanonicalCubeOfP1xP2) {
  const IntersectionRing r(ProductBase({1, 2}));
  const std::vector<DivClass> c(3, D({2, 3}));
  EXPECT_EQ(intersect(r, c), 54);
  EXPECT_EQ(intersect(r, c), oracle::naive_intersect({1, 2}, {}, {{2, 3}, {2, 3}, {2, 3}}));
}

TEST(Intersect, TwistedOmegaOnP1Cubed) {
  const IntersectionRing r(ProductBase({1, 1, 1}));
  const std::vector<DivClass> m{D({0, 2, 2}), D({2, 0, 2}), D({2, 2, 0})};
  EXPECT_EQ(intersect(r, m), 16);
  EXPECT_EQ(oracle::naive_intersect({1, 1, 1}, {}, {{0, 2, 2}, {2, 0, 2}, {2, 2, 0}}), 16);
}

TEST(Intersect, CountMustMatchDimension) {
  const IntersectionRing r(ProductBase({1, 1}));
  const std::vector<DivClass> one{r.h(0)};
  EXPECT_THROW(intersect(r, one), DimensionMismatch);
  const std::vector<DivClass> bad{D({1}), D({1})};
  EXPECT_THROW(intersect(r, bad), DimensionMismatch);
}

TEST(HypersurfaceDegree, Quadric) {
  const IntersectionRing r(ProductBase({4}));
  const DivClass Q = D({2});
  const std::vector<DivClass> hhh(3, D({1}));
  EXPECT_EQ(hypersurface_degree(r, Q, hhh), 2);
  for (int e : {1, 2}) {
    const std::vector<DivClass> c{D({e - 3}), D({e - 3}), D({e})};
    EXPECT_EQ(hypersurface_degree(r, Q, c), 2 * e * (3 - e) * (3 - e));
  }
  const std::vector<DivClass> c1{D({-2}), D({-2}), D({1})};
  EXPECT_EQ(hypersurface_degree(r, Q, c1), 8);
  const std::vector<DivClass> c2{D({-1}), D({-1}), D({2})};
  EXPECT_EQ(hypersurface_degree(r, Q, c2), 4);
  EXPECT_THROW(hypersurface_degree(r, Q, std::span(hhh).subspan(0, 2)), DimensionMismatch);
}

TEST(CanonicalClass, Examples) {
  EXPECT_EQ(canonical_class(IntersectionRing(ProductBase({3}))), D({-4}));
  const IntersectionRing p28(ProductBase({2}), SplitBundleSpec{{{0}, {1}, {2}}});
  EXPECT_EQ(p28.format(canonical_class(p28)), "-3*xi");
  const IntersectionRing p310(ProductBase({1, 1}), SplitBundleSpec{{{0, 0}, {1, 0}, {0, 1}}});
  EXPECT_EQ(p310.format(canonical_class(p310)), "-3*xi - h1 - h2");
  // P(O + O(-L)), L = (1, 2) on P1 x P1: K = -2 xi + K_base - L
  const IntersectionRing cover(ProductBase({1, 1}), SplitBundleSpec{{{0, 0}, {-1, -2}}});
  EXPECT_EQ(canonical_class(cover), D({-3, -4, -2}));
}

TEST(ChernTop, Examples) {
  const IntersectionRing p1(ProductBase({1}));
  const std::vector<DivClass> o2{D({2})};
  EXPECT_EQ(chern_top_degree(p1, o2), 2);
  const IntersectionRing q(ProductBase({1, 1}));
  const std::vector<DivClass> m{D({2, 0}), D({0, 2})};
  EXPECT_EQ(chern_top_degree(q, m), 4);
  const IntersectionRing c(ProductBase({1, 1, 1}));
  EXPECT_EQ(chern_top_degree(c, omega_twist_factors(c.base(), D({2, 2, 2}))), 16);
}

TEST(OmegaTwist, Examples) {
  EXPECT_EQ(omega_twist_factors(ProductBase({1, 1, 1}), D({2, 2, 2})),
            (std::vector<DivClass>{D({0, 2, 2}), D({2, 0, 2}), D({2, 2, 0})}));
  EXPECT_EQ(omega_twist_factors(ProductBase({1}), D({0})), (std::vector<DivClass>{D({-2})}));
  EXPECT_EQ(omega_twist_factors(ProductBase({1, 1}), D({1, 1})), (std::vector<DivClass>{D({-1, 1}), D({1, -1})}));
  EXPECT_THROW(omega_twist_factors(ProductBase({1, 2}), D({1, 1})), NonP1Factor);
}

TEST(LinearIdentity, SplitDoubleCover) {
  // L = (1, 2): X = 2 xi + 2 g^*L, K_P + X = g^*(K_Y + L)
  const IntersectionRing r(ProductBase({1, 1}), SplitBundleSpec{{{0, 0}, {-1, -2}}});
  const DivClass L = r.pullback(std::vector<std::int64_t>{1, 2});
  const DivClass X = 2 * r.xi() + 2 * L;
  const DivClass KY = r.pullback(std::vector<std::int64_t>{-2, -2});
  EXPECT_TRUE(verify_linear_identity(r, canonical_class(r) + X, KY + L));
  // S = xi and T = xi + g^*L are disjoint; T - S = g^*L
  const DivClass S = r.xi(), T = r.xi() + L;
  EXPECT_TRUE(verify_linear_identity(r, T - S, L));
  for (const auto& base : {r.h(0), r.h(1), r.h(0) + 3 * r.h(1)}) {
    const std::vector<DivClass> st{S, T, base};
    EXPECT_EQ(intersect(r, st), 0);
  }
}

TEST(LinearIdentity, SectionsOfP1xP1Bundle) {
  const IntersectionRing r(ProductBase({1, 1}), SplitBundleSpec{{{0, 0}, {1, 1}}});
  const DivClass gamma_O = r.xi() - r.h(0) - r.h(1);
  const DivClass gamma_11 = r.xi();
  EXPECT_TRUE(verify_linear_identity(r, canonical_class(r) + gamma_O + gamma_11, D({-2, -2, 0})));
  EXPECT_FALSE(verify_linear_identity(r, r.xi(), r.xi() + r.h(0)));
}

TEST(BundleRing, DegreeNormalization) {
  const IntersectionRing r(ProductBase({2}), SplitBundleSpec{{{0}, {1}, {2}}});
  const std::vector<int> top{2, 2};
  EXPECT_EQ(r.monomial_degree(top), 1);
  // complete homogeneous h_2(0, 1, 2) = 1 + 2 + 4
  const std::vector<int> xi4{0, 4};
  EXPECT_EQ(r.monomial_degree(xi4), 7);
  EXPECT_EQ(r.monomial_degree(xi4), oracle::naive_intersect({2}, {{0}, {1}, {2}}, {{0, 1}, {0, 1}, {0, 1}, {0, 1}}));
}

TEST(BundleRing, RelationAnnihilates) {
  const IntersectionRing r(ProductBase({1, 1}), SplitBundleSpec{{{0, 0}, {1, 0}, {0, 1}}});
  ChowElement rel = r.constant(1);
  for (const auto& a : r.twists()) rel = r.multiply(rel, r.element(r.xi() - r.pullback(a)));
  for (const auto& c : {r.h(0), r.h(1), r.xi()}) EXPECT_EQ(r.degree(r.multiply(rel, r.element(c))), 0);
}

TEST(Expressions, DegreeQueries) {
  const IntersectionRing r(ProductBase({1, 1, 1}));
  EXPECT_EQ(evaluate_degree_query(r, "deg((2*h2+2*h3)*(2*h1+2*h3)*(2*h1+2*h2))"), 16);
  EXPECT_EQ(evaluate_degree_query(r, "deg(h1 h2 h3)"), 1);
  EXPECT_EQ(evaluate_degree_query(r, "deg((-K)^3)"), 48);
  const IntersectionRing p4(ProductBase({4}));
  EXPECT_EQ(evaluate_degree_query(p4, "deg(2*h1*(-2*h1)^2*h1)"), 8);
}

TEST(Expressions, Errors) {
  const IntersectionRing r(ProductBase({1, 1}));
  EXPECT_THROW(evaluate_degree_query(r, "deg(h3*h1)"), UnknownVariable);
  EXPECT_THROW(evaluate_degree_query(r, "deg(xi*h1)"), UnknownVariable);
  EXPECT_THROW(evaluate_degree_query(r, "h1*h2"), ParseError);
  EXPECT_THROW(evaluate_degree_query(r, "deg(h1*h2"), ParseError);
  EXPECT_THROW(parse_divisor(r, "h1*h2"), InvalidArgument);
  EXPECT_EQ(parse_divisor(r, "3*h1 - h2 + h1"), D({4, -1}));
}

TEST(Parsing, BaseAndBundle) {
  EXPECT_EQ(parse_product_base("1, 1,1").factors(), 3u);
  EXPECT_THROW(parse_product_base("0"), InvalidArgument);
  EXPECT_THROW(parse_product_base("1,a"), ParseError);
  EXPECT_EQ(parse_bundle("0,0;1,0;0,1", 2).twists.size(), 3u);
  EXPECT_THROW(parse_bundle("0,0;1", 2), DimensionMismatch);
}

TEST(Overflow, IsDetected) {
  const IntersectionRing r(ProductBase({3}));
  const std::vector<DivClass> big(3, D({3000000}));
  EXPECT_THROW(intersect(r, big), ArithmeticOverflow);
}
