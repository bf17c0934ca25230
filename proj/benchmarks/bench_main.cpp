#include <benchmark/benchmark.h>

#include "frobcheck/algebra/frobenius.hpp"
#include "frobcheck/algebra/parse.hpp"
#include "frobcheck/chow/intersection_ring.hpp"
#include "frobcheck/dplattice/lattice.hpp"
#include "frobcheck/dplattice/projective_plane.hpp"
#include "frobcheck/geometry/smoothness.hpp"
#include "frobcheck/splitting/fedder.hpp"

using namespace frobcheck;

namespace {

Polynomial fermat(unsigned p) {
  const auto v = VariableSet::standard({"x0", "x1", "x2", "x3", "x4"});
  return parse_poly("x0^4+x1^4+x2^4+x3^4+x4^4", v, Prime(p));
}

void BM_PowModFrobenius(benchmark::State& st) {
  const unsigned p = static_cast<unsigned>(st.range(0));
  const auto f = fermat(p);
  for (auto _ : st) benchmark::DoNotOptimize(pow_mod_frobenius(f, p - 1, p));
}
BENCHMARK(BM_PowModFrobenius)->Arg(5)->Arg(7)->Arg(11)->Arg(13);

void BM_Delta1(benchmark::State& st) {
  const auto f = fermat(static_cast<unsigned>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(delta1(f));
}
BENCHMARK(BM_Delta1)->Arg(3)->Arg(5)->Arg(7);

void BM_Delta1Probe(benchmark::State& st) {
  const auto v = VariableSet::weighted({"x0", "x1", "x2", "x3", "y"}, {1, 1, 1, 1, 3});
  const HypersurfaceRing ring(parse_poly("x0^6+x1^6+x2^6+x3^6+y^2", v, Prime(5)));
  for (auto _ : st) benchmark::DoNotOptimize(delta1_probe(ring, 4, 4, 2));
}
BENCHMARK(BM_Delta1Probe)->Unit(benchmark::kMillisecond);

void BM_ConeSmoothness(benchmark::State& st) {
  const auto space = AmbientSpace::parse("P(1,1,1,1,3)");
  const HypersurfaceVariety v(Prime(11), space, parse_poly("x0^6+x1^6+x2^6+x3^6+x4^2", space.variables(), Prime(11)));
  for (auto _ : st) benchmark::DoNotOptimize(cone_smoothness(v, static_cast<unsigned>(st.range(0))));
}
BENCHMARK(BM_ConeSmoothness)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_WildConic(benchmark::State& st) {
  const auto space = AmbientSpace::parse("P2xP2");
  const HypersurfaceVariety v(Prime(2), space, parse_poly("x0*y0^2+x1*y1^2+x2*y2^2", space.variables(), Prime(2)));
  for (auto _ : st) benchmark::DoNotOptimize(smoothness_verdict(v));
}
BENCHMARK(BM_WildConic)->Unit(benchmark::kMillisecond);

void BM_Intersect(benchmark::State& st) {
  const IntersectionRing r(ProductBase({1, 1, 1}));
  const auto factors = omega_twist_factors(r.base(), DivClass({2, 2, 2}));
  for (auto _ : st) benchmark::DoNotOptimize(chern_top_degree(r, factors));
}
BENCHMARK(BM_Intersect);

void BM_EnumerateClasses(benchmark::State& st) {
  const PicLattice L(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_classes(L, -1, -1, 6));
}
BENCHMARK(BM_EnumerateClasses)->Arg(7)->Arg(8);

void BM_PglOrbit(benchmark::State& st) {
  const FiniteField F(static_cast<unsigned>(st.range(0)));
  const PointConfig frame(F, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  for (auto _ : st) benchmark::DoNotOptimize(pgl_orbit_canonical(F, frame));
}
BENCHMARK(BM_PglOrbit)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
