#include "frobcheck/ideals/groebner.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "frobcheck/errors.hpp"

namespace frobcheck {

namespace {

using Terms = std::vector<Term>;

Terms sorted_terms(const Polynomial& f, const TermOrder& order) {
  Terms t(f.terms().begin(), f.terms().end());
  if (!order.is_grevlex())
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  return t;
}

// h - c * m * g, both inputs sorted descending under `order`.
Terms sub_scaled(std::span<const Term> h, std::span<const Term> g, const Monomial& m, Coeff c,
                 Prime p, const TermOrder& order) {
  Terms out;
  out.reserve(h.size() + g.size());
  const Coeff negc = p.neg(c);
  std::size_t i = 0, j = 0;
  Monomial gm;
  bool have_gm = false;
  while (i < h.size() || j < g.size()) {
    if (j < g.size() && !have_gm) {
      gm = g[j].mono * m;
      have_gm = true;
    }
    int cmp;
    if (i == h.size()) cmp = -1;
    else if (j == g.size()) cmp = 1;
    else cmp = order.compare(h[i].mono, gm);
    if (cmp > 0) {
      out.push_back(h[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, p.mul(g[j].coeff, negc)});
      ++j;
      have_gm = false;
    } else {
      const Coeff v = p.add(h[i].coeff, p.mul(g[j].coeff, negc));
      if (v != 0) out.push_back({gm, v});
      ++i;
      ++j;
      have_gm = false;
    }
  }
  return out;
}

struct Reducer {
  Terms terms;  // sorted under the order; terms[0] is the leading term
  Coeff inv_lc;
};

Reducer make_reducer(const Polynomial& g, const TermOrder& order) {
  Reducer r{sorted_terms(g, order), 0};
  r.inv_lc = g.prime().inv(r.terms.front().coeff);
  return r;
}

Terms reduce_terms(Terms h, std::span<const Reducer> reducers, Prime p, const TermOrder& order) {
  Terms rem;
  std::size_t start = 0;
  while (start < h.size()) {
    const Term& lt = h[start];
    const Reducer* hit = nullptr;
    for (const auto& r : reducers)
      if (r.terms.front().mono.divides(lt.mono)) {
        hit = &r;
        break;
      }
    if (!hit) {
      rem.push_back(lt);
      ++start;
      continue;
    }
    const Monomial m = lt.mono.quotient(hit->terms.front().mono);
    const Coeff c = p.mul(lt.coeff, hit->inv_lc);
    h = sub_scaled(std::span<const Term>(h).subspan(start), hit->terms, m, c, p, order);
    start = 0;
  }
  return rem;
}

Polynomial to_poly(Prime p, const VariableSet& vars, Terms t) {
  return Polynomial::from_terms(p, vars, std::move(t));
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

GroebnerBasis::GroebnerBasis(Prime p, VariableSet vars, TermOrder order,
                             std::vector<Polynomial> elements)
    : p_(p), vars_(std::move(vars)), order_(std::move(order)), elements_(std::move(elements)) {
  leads_.reserve(elements_.size());
  for (const auto& g : elements_) leads_.push_back(leading_term(g, order_).mono);
}

bool GroebnerBasis::is_unit() const noexcept {
  return elements_.size() == 1 && elements_.front().is_constant() && !elements_.front().is_zero();
}

Term leading_term(const Polynomial& f, const TermOrder& order) {
  if (f.is_zero()) throw ZeroPolynomial();
  if (order.is_grevlex()) return f.leading_term();
  const auto terms = f.terms();
  const Term* best = &terms.front();
  for (const auto& t : terms.subspan(1))
    if (order.greater(t.mono, best->mono)) best = &t;
  return *best;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
  const Term lf = leading_term(f, order);
  const Term lg = leading_term(g, order);
  const Prime p = f.prime();
  const Monomial l = lf.mono.lcm(lg.mono);
  return f.times_monomial(l.quotient(lf.mono), p.inv(lf.coeff)) -
         g.times_monomial(l.quotient(lg.mono), p.inv(lg.coeff));
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const TermOrder& order) {
  std::vector<Reducer> reducers;
  for (const auto& g : divisors)
    if (!g.is_zero()) reducers.push_back(make_reducer(g, order));
  return to_poly(f.prime(), f.vars(), reduce_terms(sorted_terms(f, order), reducers, f.prime(), order));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  if (!(f.vars() == basis.vars()) || f.prime() != basis.prime())
    throw InvalidArgument("polynomial and basis live in different rings");
  return normal_form(f, basis.elements(), basis.order());
}

GroebnerBasis buchberger(Prime p, VariableSet vars, std::span<const Polynomial> generators,
                         const TermOrder& order, BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  auto unit = [&] {
    st.unit_short_circuit = true;
    return GroebnerBasis(p, vars, order, {Polynomial::constant(p, vars, 1)});
  };

  std::vector<Reducer> basis;
  std::vector<std::vector<char>> pending;  // pending[i][j] for i < j
  std::vector<Pair> pairs;

  auto add_element = [&](const Polynomial& g) {
    const std::size_t n = basis.size();
    basis.push_back(make_reducer(g.monic(), order));
    for (auto& row : pending) row.push_back(0);
    pending.emplace_back(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      pairs.push_back({i, n, basis[i].terms.front().mono.lcm(basis[n].terms.front().mono)});
      pending[i][n] = 1;
      ++st.pairs_created;
    }
  };

  for (const auto& g : generators) {
    if (!(g.vars() == vars) || g.prime() != p)
      throw InvalidArgument("generator lives in a different ring");
    if (g.is_zero()) continue;
    if (g.is_constant()) return unit();
    add_element(g);
  }

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      const int c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    const Pair pr = *it;
    pairs.erase(it);
    pending[pr.i][pr.j] = 0;

    const Monomial& li = basis[pr.i].terms.front().mono;
    const Monomial& lj = basis[pr.j].terms.front().mono;
    if (li.coprime(lj)) {
      ++st.product_criterion;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].terms.front().mono.divides(pr.lcm)) continue;
      const bool ik = pending[std::min(pr.i, k)][std::max(pr.i, k)];
      const bool jk = pending[std::min(pr.j, k)][std::max(pr.j, k)];
      if (!ik && !jk) chain = true;
    }
    if (chain) {
      ++st.chain_criterion;
      continue;
    }

    const Term& ti = basis[pr.i].terms.front();
    const Term& tj = basis[pr.j].terms.front();
    Terms s = sub_scaled(
        Terms{}, basis[pr.i].terms, pr.lcm.quotient(ti.mono), p.neg(basis[pr.i].inv_lc), p, order);
    s = sub_scaled(s, basis[pr.j].terms, pr.lcm.quotient(tj.mono), basis[pr.j].inv_lc, p, order);
    ++st.reductions;
    Terms r = reduce_terms(std::move(s), basis, p, order);
    if (r.empty()) {
      ++st.zero_reductions;
      continue;
    }
    if (r.size() == 1 && r.front().mono.is_one()) return unit();
    add_element(to_poly(p, vars, std::move(r)));
  }

  // Minimalize: drop elements whose leading monomial is divisible by the
  // leading monomial of another kept element.
  std::vector<std::size_t> idx(basis.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return order.compare(basis[a].terms.front().mono, basis[b].terms.front().mono) < 0;
  });
  std::vector<std::size_t> kept;
  for (auto i : idx) {
    const Monomial& li = basis[i].terms.front().mono;
    bool redundant = false;
    for (auto k : kept)
      if (basis[k].terms.front().mono.divides(li)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(i);
  }

  // Interreduce: tails are reduced against the other minimal elements;
  // leading monomials are untouched because the set is minimal.
  std::vector<Polynomial> out;
  out.reserve(kept.size());
  for (auto i : kept) {
    std::vector<Reducer> others;
    for (auto k : kept)
      if (k != i) others.push_back(basis[k]);
    Terms tail(basis[i].terms.begin() + 1, basis[i].terms.end());
    Terms reduced = reduce_terms(std::move(tail), others, p, order);
    reduced.insert(reduced.begin(), basis[i].terms.front());
    out.push_back(to_poly(p, vars, std::move(reduced)));
  }
  for (auto& g : out) {
    const Term lt = leading_term(g, order);
    g = g.scaled(p.inv(lt.coeff));
  }
  return GroebnerBasis(p, std::move(vars), order, std::move(out));
}

bool satisfies_buchberger_criterion(std::span<const Polynomial> elements, const TermOrder& order) {
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (elements[i].is_zero() || elements[j].is_zero()) continue;
      if (!normal_form(s_polynomial(elements[i], elements[j], order), elements, order).is_zero())
        return false;
    }
  return true;
}

}  // namespace frobcheck
