#include "frobcheck/geometry/smoothness.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "frobcheck/errors.hpp"

namespace frobcheck {

HypersurfaceVariety::HypersurfaceVariety(Prime p, AmbientSpace space, Polynomial f)
    : p_(p), space_(std::move(space)), f_(std::move(f)) {
  if (f_.prime() != p_) throw InvalidArgument("equation is over a different field");
  if (!(f_.vars() == space_.variables()))
    throw InvalidArgument("equation does not use the ambient variables");
  degree_ = weighted_degree(f_);
  if (std::none_of(degree_.begin(), degree_.end(), [](long d) { return d >= 1; }))
    throw InvalidArgument("hypersurface equation must have positive degree");
}

PolyIdeal jacobian_ideal(const HypersurfaceVariety& v) {
  const Polynomial& f = v.equation();
  std::vector<Polynomial> gens{f};
  for (std::size_t i = 0; i < f.vars().size(); ++i) {
    Polynomial d = f.derivative(i);
    if (!d.is_zero()) gens.push_back(std::move(d));
  }
  return PolyIdeal(v.prime(), f.vars(), std::move(gens));
}

namespace {

std::vector<Monomial> chart_monomials(const AmbientSpace& space) {
  const std::size_t n = space.variables().size();
  std::vector<Monomial> out{Monomial(n)};
  for (std::size_t j = 0; j < space.factor_count(); ++j) {
    std::vector<Monomial> next;
    for (const auto& m : out)
      for (auto v : space.factor_variables(j)) next.push_back(m * Monomial::variable(n, v));
    out = std::move(next);
  }
  return out;
}

}  // namespace

ConeSmoothness cone_smoothness(const HypersurfaceVariety& v, unsigned jobs) {
  const PolyIdeal jac = jacobian_ideal(v);
  const auto charts = chart_monomials(v.space());
  std::vector<char> ok(charts.size(), 0);

  auto run = [&](std::size_t i) {
    const Polynomial g = Polynomial::monomial(v.prime(), v.equation().vars(), charts[i]);
    ok[i] = localized_is_unit(jac, g) ? 1 : 0;
  };

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(charts.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < charts.size(); ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < charts.size();) run(i);
      });
  }

  for (std::size_t i = 0; i < charts.size(); ++i)
    if (!ok[i]) return {ConeStatus::SingularWitnessIdeal, charts.size(), charts[i]};
  return {ConeStatus::SmoothAwayFromIrrelevant, charts.size(), std::nullopt};
}

SmoothnessReport smoothness_verdict(const HypersurfaceVariety& v, unsigned jobs) {
  const auto strata = ambient_singular_strata(v.space());
  const auto& space = v.space();
  for (const auto& s : strata) {
    bool point = s.variables.size() == 1;
    for (std::size_t j = 0; j < space.factor_count() && point; ++j)
      if (j != s.factor && space.factor_dimension(j) > 0) point = false;
    if (!point)
      throw Unsupported("ambient " + space.to_string() +
                        " has a positive-dimensional singular stratum");
  }

  SmoothnessReport report{SmoothnessVerdict::Singular, cone_smoothness(v, jobs), {}};
  if (report.cone.status != ConeStatus::SmoothAwayFromIrrelevant) return report;
  for (const auto& s : strata) {
    // The stratum point is the coordinate point of its variable; X passes
    // through it iff f has no pure power of that variable.
    if (v.equation().restricted_to(s.variables).is_zero()) report.strata_on_variety.push_back(s);
  }
  report.verdict = report.strata_on_variety.empty() ? SmoothnessVerdict::Smooth
                                                    : SmoothnessVerdict::QuasiSmoothOnly;
  return report;
}

std::string to_string(ConeStatus s) {
  return s == ConeStatus::SmoothAwayFromIrrelevant ? "SmoothAwayFromIrrelevant"
                                                   : "SingularWitnessIdeal";
}

std::string to_string(SmoothnessVerdict s) {
  switch (s) {
    case SmoothnessVerdict::Smooth: return "Smooth";
    case SmoothnessVerdict::QuasiSmoothOnly: return "QuasiSmoothOnly";
    case SmoothnessVerdict::Singular: return "Singular";
  }
  return "?";
}

std::vector<EulerCheck> euler_relations(const HypersurfaceVariety& v) {
  const Polynomial& f = v.equation();
  const VariableSet& vars = f.vars();
  const Prime p = v.prime();
  std::vector<EulerCheck> out;
  for (std::size_t c = 0; c < vars.components(); ++c) {
    Polynomial sum(p, vars);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const int w = vars.weight(i)[c];
      if (w == 0) continue;
      sum += (Polynomial::variable(p, vars, i) * f.derivative(i)).scaled(p.reduce(w));
    }
    const long d = v.multidegree()[c];
    const bool degenerate = d % static_cast<long>(p.value()) == 0;
    out.push_back({c, d, degenerate, sum == f.scaled(p.reduce(d))});
  }
  return out;
}

}  // namespace frobcheck
