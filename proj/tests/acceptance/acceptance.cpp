// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "frobcheck/algebra/frobenius.hpp"
#include "frobcheck/algebra/parse.hpp"
#include "frobcheck/chow/intersection_ring.hpp"
#include "frobcheck/corpus/corpus.hpp"
#include "frobcheck/dplattice/lattice.hpp"
#include "frobcheck/dplattice/projective_plane.hpp"
#include "frobcheck/geometry/smoothness.hpp"
#include "frobcheck/ideals/groebner.hpp"
#include "frobcheck/ideals/poly_ideal.hpp"
#include "frobcheck/splitting/fedder.hpp"
#include "oracles.hpp"

using namespace frobcheck;

namespace {

struct Notes {
  std::ostringstream msg;
  bool ok = true;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      msg << " [" << what << "]";
    }
  }
};

HypersurfaceVariety variety(unsigned p, const std::string& ambient, const std::vector<std::string>& names,
                            const std::string& poly) {
  const auto space = AmbientSpace::parse(ambient, names.empty() ? std::nullopt : std::optional(names));
  return HypersurfaceVariety(Prime(p), space, parse_poly(poly, space.variables(), Prime(p)));
}

SplitVerdict fedder(const HypersurfaceVariety& v) { return fedder_fsplit(HypersurfaceRing(v.equation())); }

const std::vector<std::string> kV1{"x0", "x1", "x2", "y", "z"};

void ac1(Notes& n) {
  auto is_not_split = [](const HypersurfaceVariety& v) { return fedder(v).status == SplitStatus::NotFSplit; };
  n.require(is_not_split(variety(7, "P(1,1,1,1,1)", {}, "x0^4+x1^4+x2^4+x3^4+x4^4")), "fermat quartic p=7");
  n.require(is_not_split(variety(11, "P(1,1,1,1,3)", {}, "x0^6+x1^6+x2^6+x3^6+x4^2")), "sextic p=11");
  n.require(is_not_split(variety(5, "P(1,1,1,1,3)", {}, "x0^6+x1^6+x2^6+x3^6+x4^2")), "sextic p=5");
  n.require(is_not_split(variety(3, "P(1,1,1,1,2)", {}, "x0^4+x1^4+x2^4+x3^4+x4^2")), "quartic double p=3");
  n.require(is_not_split(variety(5, "P(1,1,1,2,3)", kV1, "x0^6+x1^6+x2^6+y^3+z^2")), "sextic p=5 in P(1,1,1,2,3)");
  const auto h = fedder(variety(2, "P(1,1,1)", {}, "x0"));
  n.require(h.status == SplitStatus::FSplit && h.witness && *h.witness == (Monomial{1, 0, 0}), "hyperplane p=2");
}

void ac2(Notes& n) {
  auto verdict = [](const HypersurfaceVariety& v) { return smoothness_verdict(v).verdict; };
  n.require(verdict(variety(11, "P(1,1,1,1,3)", {}, "x0^6+x1^6+x2^6+x3^6+x4^2")) == SmoothnessVerdict::Smooth,
            "sextic p=11");
  n.require(verdict(variety(3, "P(1,1,1,1,2)", {}, "x0^4+x1^4+x2^4+x3^4+x4^2")) == SmoothnessVerdict::Smooth,
            "quartic double p=3");
  const auto wild = variety(2, "P2xP2", {}, "x0*y0^2+x1*y1^2+x2*y2^2");
  n.require(cone_smoothness(wild).status == ConeStatus::SmoothAwayFromIrrelevant, "wild conic cone");
  n.require(verdict(wild) == SmoothnessVerdict::Smooth, "wild conic");
  // independent: no point of {f = df = 0} off the irrelevant locus over F2, F4
  std::vector<Polynomial> gens{wild.equation()};
  for (std::size_t i = 0; i < 6; ++i) gens.push_back(wild.equation().derivative(i));
  const auto& vars = wild.space().variables();
  for (unsigned k = 1; k <= 2; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 3; j < 6; ++j) {
        const auto g = Polynomial::variable(Prime(2), vars, i) * Polynomial::variable(Prime(2), vars, j);
        n.require(!oracle::has_point_off(gens, g, oracle::SmallField(2, k)), "wild conic point search");
      }
  n.require(verdict(variety(3, "P(1,1,1)", {}, "x0^2")) == SmoothnessVerdict::Singular, "double line");
}

void ac3(Notes& n) {
  const auto xy = VariableSet::standard({"x", "y"});
  const auto xyz = VariableSet::standard({"x", "y", "z"});
  const Prime two(2);
  n.require(delta1(parse_poly("x+y", xy, two)) == parse_poly("x*y", xy, two), "x+y");
  n.require(delta1(parse_poly("x+y+z", xyz, two)) == parse_poly("x*y+y*z+z*x", xyz, two), "x+y+z");
  for (unsigned p : {2u, 3u, 5u, 7u}) n.require(delta1(parse_poly("3*x^2*y*z", xyz, Prime(p))).is_zero(), "monomial");
  std::mt19937_64 rng(3003);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    const unsigned p = std::array{2u, 3u, 5u, 7u}[i % 4];
    const unsigned d = 1 + i % 3;
    const auto f = oracle::random_homogeneous(rng, Prime(p), xyz, 4, d);
    const auto r = delta1(f);
    ++checked;
    if (!r.is_zero()) n.require(weighted_degree(r) == MultiDegree{static_cast<std::int64_t>(p * d)}, f.to_string());
  }
  n.require(checked == 100, "instance count");
}

void ac4(Notes& n) {
  const IntersectionRing c(ProductBase({1, 1, 1}));
  const auto factors = omega_twist_factors(c.base(), DivClass({2, 2, 2}));
  const auto chern = chern_top_degree(c, factors);
  n.require(chern == 16 && chern == oracle::naive_intersect({1, 1, 1}, {}, {{0, 2, 2}, {2, 0, 2}, {2, 2, 0}}),
            "c3 on (P1)^3");
  const IntersectionRing q(ProductBase({1, 1, 1, 1}));
  const std::vector<DivClass> hs{q.h(0), q.h(1), q.h(2), q.h(3)};
  n.require(intersect(q, hs) == 1, "h1h2h3h4");
  const IntersectionRing p4(ProductBase({4}));
  for (std::int64_t e : {1, 2}) {
    const std::vector<DivClass> k{DivClass({e - 3}), DivClass({e - 3}), DivClass({e})};
    n.require(hypersurface_degree(p4, DivClass({2}), k) == 2 * e * (3 - e) * (3 - e), "quadric e=" + std::to_string(e));
  }
  const IntersectionRing b28(ProductBase({2}), SplitBundleSpec{{{0}, {1}, {2}}});
  n.require(b28.format(canonical_class(b28)) == "-3*xi", "2-8 canonical");
  const IntersectionRing b310(ProductBase({1, 1}), SplitBundleSpec{{{0, 0}, {1, 0}, {0, 1}}});
  n.require(b310.format(canonical_class(b310)) == "-3*xi - h1 - h2", "3-10 canonical");
  const IntersectionRing cover(ProductBase({1, 1}), SplitBundleSpec{{{0, 0}, {-1, -2}}});
  const DivClass L = cover.pullback(std::vector<std::int64_t>{1, 2});
  const DivClass KY = cover.pullback(std::vector<std::int64_t>{-2, -2});
  n.require(verify_linear_identity(cover, canonical_class(cover) + 2 * cover.xi() + 2 * L, KY + L), "double cover");
  const IntersectionRing s42(ProductBase({1, 1}), SplitBundleSpec{{{0, 0}, {1, 1}}});
  const DivClass S = s42.xi() - s42.h(0) - s42.h(1), S2 = s42.xi();
  n.require(verify_linear_identity(s42, canonical_class(s42) + S + S2,
                                   s42.pullback(std::vector<std::int64_t>{-2, -2})),
            "4-2 sections");
}

void ac5(Notes& n) {
  const PicLattice L(7);
  n.require(enumerate_classes(L, -1, -1, 3).size() == 56, "56 classes");
  const auto neg2 = langer_neg2_classes();
  n.require(neg2.size() == 7, "7 (-2)-classes");
  for (std::size_t i = 0; i < neg2.size(); ++i)
    for (std::size_t j = i + 1; j < neg2.size(); ++j) n.require(L.dot(neg2[i], neg2[j]) == 0, "orthogonal");
  n.require(count_compatible_exceptionals(L, neg2) == 7, "7 compatible");
  const auto lines = fano_lines();
  std::vector<int> per_point(7, 0);
  for (const auto& l : lines)
    for (int i : l) ++per_point[i];
  n.require(lines.size() == 7 && std::all_of(per_point.begin(), per_point.end(), [](int c) { return c == 3; }),
            "fano 7/7/3/3");
  const FiniteField F(2);
  n.require(pgl3_elements(F).size() == 168, "|PGL3(F2)|");
  const auto orbit = pgl_orbit_canonical(F, PointConfig(F, langer_configuration()));
  n.require(orbit.orbit_size == 1, "full plane fixed");
}

// Lighter copies of the property suites; the gtest versions carry more detail.
bool ac6_suites(Notes& n) {
  constexpr int N = 100;
  std::mt19937_64 rng(6006);
  const auto v3 = VariableSet::standard({"x0", "x1", "x2"});
  auto prime = [&](unsigned hi) { return Prime(std::array{2u, 3u, 5u, 7u}[rng() % hi]); };
  auto nonzero = [&](Prime p, const VariableSet& v, unsigned t, unsigned d) {
    for (;;) {
      auto f = oracle::random_poly(rng, p, v, t, d);
      if (!f.is_zero()) return f;
    }
  };
  int additive = 0, powmod = 0, spair = 0, nf = 0, local = 0, chow = 0;
  for (int i = 0; i < N; ++i) {
    const Prime p = prime(3);
    const auto f = oracle::random_poly(rng, p, v3, 4, 3), g = oracle::random_poly(rng, p, v3, 4, 3);
    additive += poly_pow(f + g, p.value()) == poly_pow(f, p.value()) + poly_pow(g, p.value());
  }
  for (int i = 0; i < N; ++i) {
    const Prime p = prime(4);
    const auto f = oracle::random_poly(rng, p, v3, 4, 3);
    powmod += pow_mod_frobenius(f, p.value() - 1, p.value()) == oracle::pow_then_filter(f, p.value() - 1, p.value());
  }
  for (int i = 0; i < N; ++i) {
    const Prime p = prime(4);
    const PolyIdeal I(p, v3, {nonzero(p, v3, 3, 3), nonzero(p, v3, 3, 3)});
    const auto& gb = I.groebner_basis();
    spair += satisfies_buchberger_criterion(gb.elements(), gb.order());
    const auto h = oracle::random_poly(rng, p, v3, 4, 4);
    const auto r = normal_form(h, gb);
    nf += normal_form(r, gb) == r;
  }
  for (int i = 0; i < N; ++i) {
    const unsigned p = i % 2 ? 2 : 3;
    const auto v = i % 2 ? v3 : VariableSet::standard({"x0", "x1"});
    const std::vector<Polynomial> gens{nonzero(Prime(p), v, 3, 3)};
    const auto g = nonzero(Prime(p), v, 2, 2);
    const bool unit = localized_is_unit(PolyIdeal(Prime(p), v, gens), g);
    bool found = false;
    for (unsigned k = 1; k <= 3 && !found; ++k) found = oracle::has_point_off(gens, g, oracle::SmallField(p, k));
    local += !(found && unit);
  }
  for (int i = 0; i < N; ++i) {
    std::vector<int> dims;
    for (int left = 1 + static_cast<int>(rng() % 4); left > 0;) {
      const int d = 1 + static_cast<int>(rng() % left);
      dims.push_back(d);
      left -= d;
    }
    const IntersectionRing R{ProductBase(dims)};
    std::vector<std::vector<std::int64_t>> raw;
    std::vector<DivClass> cs;
    for (int k = 0; k < R.dimension(); ++k) {
      std::vector<std::int64_t> c(dims.size());
      for (auto& x : c) x = static_cast<std::int64_t>(rng() % 7) - 3;
      raw.push_back(c);
      cs.emplace_back(c);
    }
    chow += intersect(R, cs) == oracle::naive_intersect(dims, {}, raw);
  }
  n.require(additive == N, "frobenius additivity " + std::to_string(additive));
  n.require(powmod == N, "pow_mod " + std::to_string(powmod));
  n.require(spair == N, "s-pair " + std::to_string(spair));
  n.require(nf == N, "normal form " + std::to_string(nf));
  n.require(local == N, "localized unit " + std::to_string(local));
  n.require(chow == N, "intersect " + std::to_string(chow));
  return n.ok;
}

void ac6(Notes& n) { ac6_suites(n); }

void ac7(Notes& n) {
  const Report r = run_corpus(std::filesystem::path(FROBCHECK_CORPUS_PATH), {1, false});
  n.require(exit_code(r) == 0, std::to_string(r.summary.failed) + " corpus checks failed");
  Notes props;
  n.require(ac6_suites(props), "property suites" + props.msg.str());
  n.msg << " (scope: corpus " << r.summary.passed << "/" << r.summary.total
        << " + property suites; the full classification is out of scope)";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Notes&)>>> rows{
      {"AC1 fedder corpus", ac1}, {"AC2 smoothness", ac2},     {"AC3 delta1 identities", ac3},
      {"AC4 chow numbers", ac4},  {"AC5 lattice", ac5},        {"AC6 property suites", ac6},
      {"AC7 corpus + properties", ac7}};
  int failures = 0;
  for (const auto& [name, fn] : rows) {
    Notes n;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn(n);
    } catch (const std::exception& e) {
      n.ok = false;
      n.msg << " [exception: " << e.what() << "]";
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    failures += !n.ok;
    std::cout << name << ": " << (n.ok ? "PASS" : "FAIL") << n.msg.str() << " (" << static_cast<long>(ms) << " ms)\n";
  }
  return failures == 0 ? 0 : 1;
}
