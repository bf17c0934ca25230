#include "frobcheck/chow/intersection_ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "frobcheck/algebra/parse.hpp"
#include "frobcheck/errors.hpp"

namespace frobcheck {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in intersection arithmetic");
  return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in intersection arithmetic");
  return r;
}

// Dense truncated base ring Z[h]/(h_i^{n_i+1}).
class BaseRing {
 public:
  explicit BaseRing(std::span<const int> dims) : dims_(dims.begin(), dims.end()) {
    size_ = 1;
    for (int n : dims_) size_ *= static_cast<std::size_t>(n + 1);
  }

  std::size_t size() const { return size_; }

  std::size_t index(std::span<const int> exps) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i) idx = idx * (dims_[i] + 1) + exps[i];
    return idx;
  }

  std::vector<int> exponents(std::size_t idx) const {
    std::vector<int> e(dims_.size());
    for (std::size_t i = dims_.size(); i-- > 0;) {
      e[i] = static_cast<int>(idx % (dims_[i] + 1));
      idx /= (dims_[i] + 1);
    }
    return e;
  }

  std::vector<std::int64_t> multiply(const std::vector<std::int64_t>& a,
                                     const std::vector<std::int64_t>& b) const {
    std::vector<std::int64_t> out(size_, 0);
    for (std::size_t i = 0; i < size_; ++i) {
      if (a[i] == 0) continue;
      const auto ei = exponents(i);
      for (std::size_t j = 0; j < size_; ++j) {
        if (b[j] == 0) continue;
        const auto ej = exponents(j);
        std::vector<int> e(dims_.size());
        bool ok = true;
        for (std::size_t c = 0; c < dims_.size() && ok; ++c) {
          e[c] = ei[c] + ej[c];
          if (e[c] > dims_[c]) ok = false;
        }
        if (!ok) continue;
        auto& slot = out[index(e)];
        slot = add_checked(slot, mul_checked(a[i], b[j]));
      }
    }
    return out;
  }

 private:
  std::vector<int> dims_;
  std::size_t size_;
};

}  // namespace

ProductBase::ProductBase(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw InvalidArgument("a product base needs at least one factor");
  for (int n : dims_)
    if (n < 1) throw InvalidArgument("projective factor dimensions must be >= 1");
}

int ProductBase::dimension() const noexcept { return std::accumulate(dims_.begin(), dims_.end(), 0); }

DivClass& DivClass::operator+=(const DivClass& o) {
  if (o.size() != size()) throw DimensionMismatch("divisor classes of different lengths");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] = add_checked(coeffs_[i], o.coeffs_[i]);
  return *this;
}

DivClass& DivClass::operator-=(const DivClass& o) { return *this += (-1) * o; }

DivClass operator*(std::int64_t s, const DivClass& c) {
  DivClass r = c;
  for (auto& x : r.coeffs_) x = mul_checked(x, s);
  return r;
}

IntersectionRing::IntersectionRing(ProductBase base) : base_(std::move(base)) {}

IntersectionRing::IntersectionRing(ProductBase base, SplitBundleSpec bundle)
    : base_(std::move(base)), twists_(std::move(bundle.twists)) {
  if (twists_.empty()) throw InvalidArgument("a split bundle needs at least one summand");
  for (const auto& a : twists_)
    if (a.size() != base_.factors())
      throw DimensionMismatch("bundle twist has " + std::to_string(a.size()) +
                              " entries, base has " + std::to_string(base_.factors()) + " factors");

  const BaseRing ring(base_.dims());
  const int top = base_.dimension();
  std::vector<std::int64_t> one(ring.size(), 0);
  one[0] = 1;
  segre_ = one;
  for (const auto& a : twists_) {
    std::vector<std::int64_t> ell(ring.size(), 0);
    for (std::size_t c = 0; c < a.size(); ++c) {
      if (a[c] == 0) continue;
      std::vector<int> e(base_.factors(), 0);
      e[c] = 1;
      ell[ring.index(e)] = a[c];
    }
    // 1 + ell + ell^2 + ... ; ell is nilpotent of order <= top + 1.
    std::vector<std::int64_t> series = one;
    std::vector<std::int64_t> power = one;
    for (int m = 1; m <= top; ++m) {
      power = ring.multiply(power, ell);
      for (std::size_t i = 0; i < series.size(); ++i) series[i] = add_checked(series[i], power[i]);
    }
    segre_ = ring.multiply(segre_, series);
  }
}

int IntersectionRing::dimension() const noexcept {
  return base_.dimension() + (has_bundle() ? static_cast<int>(rank()) - 1 : 0);
}

DivClass IntersectionRing::h(std::size_t i) const {
  if (i >= base_.factors()) throw InvalidArgument("no such base generator");
  std::vector<std::int64_t> c(generator_count(), 0);
  c[i] = 1;
  return DivClass(std::move(c));
}

DivClass IntersectionRing::xi() const {
  if (!has_bundle()) throw InvalidArgument("xi only exists on a projective bundle");
  std::vector<std::int64_t> c(generator_count(), 0);
  c.back() = 1;
  return DivClass(std::move(c));
}

DivClass IntersectionRing::pullback(std::span<const std::int64_t> base_coeffs) const {
  if (base_coeffs.size() != base_.factors()) throw DimensionMismatch("base class has the wrong length");
  std::vector<std::int64_t> c(generator_count(), 0);
  std::copy(base_coeffs.begin(), base_coeffs.end(), c.begin());
  return DivClass(std::move(c));
}

void IntersectionRing::check_class(const DivClass& c) const {
  if (c.size() != generator_count())
    throw DimensionMismatch("class has " + std::to_string(c.size()) + " coefficients, ring has " +
                            std::to_string(generator_count()) + " generators");
}

ChowElement IntersectionRing::element(const DivClass& c) const {
  check_class(c);
  ChowElement e;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    std::vector<int> exps(generator_count(), 0);
    exps[i] = 1;
    e[exps] = c[i];
  }
  return e;
}

ChowElement IntersectionRing::constant(std::int64_t c) const {
  ChowElement e;
  if (c != 0) e[std::vector<int>(generator_count(), 0)] = c;
  return e;
}

ChowElement IntersectionRing::multiply(const ChowElement& a, const ChowElement& b) const {
  const auto dims = base_.dims();
  const int top = dimension();
  ChowElement out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      int total = 0;
      bool ok = true;
      for (std::size_t i = 0; i < e.size() && ok; ++i) {
        e[i] = ea[i] + eb[i];
        total += e[i];
        if (i < dims.size() && e[i] > dims[i]) ok = false;
      }
      if (!ok || total > top) continue;
      auto& slot = out[e];
      slot = add_checked(slot, mul_checked(ca, cb));
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

ChowElement IntersectionRing::add(const ChowElement& a, const ChowElement& b, std::int64_t scale) const {
  ChowElement out = a;
  for (const auto& [e, c] : b) {
    auto& slot = out[e];
    slot = add_checked(slot, mul_checked(c, scale));
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::int64_t IntersectionRing::monomial_degree(std::span<const int> exps) const {
  if (exps.size() != generator_count()) throw DimensionMismatch("monomial has the wrong length");
  const auto dims = base_.dims();
  int total = 0;
  for (int e : exps) total += e;
  if (total != dimension()) return 0;
  std::vector<int> complement(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (exps[i] > dims[i]) return 0;
    complement[i] = dims[i] - exps[i];
  }
  if (!has_bundle()) return 1;
  // xi^{r-1+m} pushes forward to the degree-m complete homogeneous
  // polynomial in the twists.
  const int s = exps.back();
  if (s < static_cast<int>(rank()) - 1) return 0;
  return segre_[BaseRing(dims).index(complement)];
}

std::int64_t IntersectionRing::degree(const ChowElement& e) const {
  std::int64_t d = 0;
  for (const auto& [exps, c] : e) d = add_checked(d, mul_checked(c, monomial_degree(exps)));
  return d;
}

std::string IntersectionRing::generator_name(std::size_t i) const {
  if (i < base_.factors()) return "h" + std::to_string(i + 1);
  if (has_bundle() && i == base_.factors()) return "xi";
  throw InvalidArgument("no such generator");
}

std::optional<std::size_t> IntersectionRing::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generator_count(); ++i)
    if (generator_name(i) == name) return i;
  return std::nullopt;
}

std::string IntersectionRing::format(const DivClass& c) const {
  check_class(c);
  // xi first, then h1..hk.
  std::vector<std::size_t> order;
  if (has_bundle()) order.push_back(base_.factors());
  for (std::size_t i = 0; i < base_.factors(); ++i) order.push_back(i);
  std::string s;
  for (auto i : order) {
    const std::int64_t v = c[i];
    if (v == 0) continue;
    const std::int64_t mag = v < 0 ? -v : v;
    if (s.empty()) s += v < 0 ? "-" : "";
    else s += v < 0 ? " - " : " + ";
    if (mag != 1) s += std::to_string(mag) + "*";
    s += generator_name(i);
  }
  return s.empty() ? "0" : s;
}

std::int64_t intersect(const IntersectionRing& ring, std::span<const DivClass> classes) {
  if (classes.size() != static_cast<std::size_t>(ring.dimension()))
    throw DimensionMismatch("need " + std::to_string(ring.dimension()) + " classes, got " +
                            std::to_string(classes.size()));
  ChowElement prod = ring.constant(1);
  for (const auto& c : classes) prod = ring.multiply(prod, ring.element(c));
  return ring.degree(prod);
}

std::int64_t hypersurface_degree(const IntersectionRing& ring, const DivClass& hypersurface,
                                 std::span<const DivClass> classes) {
  if (classes.size() + 1 != static_cast<std::size_t>(ring.dimension()))
    throw DimensionMismatch("need " + std::to_string(ring.dimension() - 1) + " classes on the hypersurface");
  std::vector<DivClass> all(classes.begin(), classes.end());
  all.push_back(hypersurface);
  return intersect(ring, all);
}

DivClass canonical_class(const IntersectionRing& ring) {
  const auto dims = ring.base().dims();
  std::vector<std::int64_t> k(ring.generator_count(), 0);
  for (std::size_t c = 0; c < dims.size(); ++c) {
    k[c] = -(dims[c] + 1);
    for (const auto& a : ring.twists()) k[c] = add_checked(k[c], a[c]);
  }
  if (ring.has_bundle()) k.back() = -static_cast<std::int64_t>(ring.rank());
  return DivClass(std::move(k));
}

std::int64_t chern_top_degree(const IntersectionRing& ring, std::span<const DivClass> line_factors) {
  return intersect(ring, line_factors);
}

std::vector<DivClass> omega_twist_factors(const ProductBase& base, const DivClass& twist) {
  for (int n : base.dims())
    if (n != 1) throw NonP1Factor();
  if (twist.size() != base.factors()) throw DimensionMismatch("twist has the wrong length");
  std::vector<DivClass> out;
  for (std::size_t i = 0; i < base.factors(); ++i) {
    std::vector<std::int64_t> c(twist.coefficients().begin(), twist.coefficients().end());
    c[i] -= 2;
    out.emplace_back(std::move(c));
  }
  return out;
}

bool verify_linear_identity(const IntersectionRing& ring, const DivClass& lhs, const DivClass& rhs) {
  if (lhs.size() != ring.generator_count() || rhs.size() != ring.generator_count())
    throw DimensionMismatch("class length does not match the ring");
  return lhs == rhs;
}

namespace {

class ClassParser {
 public:
  ClassParser(const IntersectionRing& ring, std::string_view text) : ring_(ring), lex_(text) {}

  ChowElement parse_all() {
    ChowElement e = expr();
    if (!lex_.at_end()) throw ParseError("unexpected '" + lex_.peek().text + "'", lex_.peek().pos);
    return e;
  }

  std::int64_t parse_degree() {
    const auto t = lex_.expect(Lexer::Kind::Ident, "'deg'");
    if (t.text != "deg") throw ParseError("expected 'deg(...)'", t.pos);
    lex_.expect(Lexer::Kind::LParen, "'('");
    ChowElement e = expr();
    lex_.expect(Lexer::Kind::RParen, "')'");
    if (!lex_.at_end()) throw ParseError("unexpected '" + lex_.peek().text + "'", lex_.peek().pos);
    return ring_.degree(e);
  }

 private:
  ChowElement expr() {
    ChowElement acc;
    if (lex_.accept(Lexer::Kind::Minus)) acc = ring_.add(acc, term(), -1);
    else acc = term();
    while (true) {
      if (lex_.accept(Lexer::Kind::Plus)) acc = ring_.add(acc, term());
      else if (lex_.accept(Lexer::Kind::Minus)) acc = ring_.add(acc, term(), -1);
      else return acc;
    }
  }

  ChowElement term() {
    ChowElement acc = power();
    while (true) {
      if (lex_.accept(Lexer::Kind::Star)) {
        acc = ring_.multiply(acc, power());
      } else if (lex_.peek().kind == Lexer::Kind::Ident || lex_.peek().kind == Lexer::Kind::LParen) {
        acc = ring_.multiply(acc, power());
      } else {
        return acc;
      }
    }
  }

  ChowElement power() {
    ChowElement base = atom();
    if (!lex_.accept(Lexer::Kind::Caret)) return base;
    const auto t = lex_.expect(Lexer::Kind::Number, "an exponent");
    if (t.text.size() > 4) throw ParseError("exponent too large", t.pos);
    ChowElement out = ring_.constant(1);
    for (int i = std::stoi(t.text); i > 0; --i) out = ring_.multiply(out, base);
    return out;
  }

  ChowElement atom() {
    const auto& t = lex_.peek();
    if (t.kind == Lexer::Kind::Number) {
      const auto tok = lex_.next();
      std::int64_t v = 0;
      for (char c : tok.text) v = add_checked(mul_checked(v, 10), c - '0');
      return ring_.constant(v);
    }
    if (t.kind == Lexer::Kind::LParen) {
      lex_.next();
      ChowElement e = expr();
      lex_.expect(Lexer::Kind::RParen, "')'");
      return e;
    }
    if (t.kind == Lexer::Kind::Minus) {
      lex_.next();
      return ring_.add(ring_.constant(0), atom(), -1);
    }
    const auto tok = lex_.expect(Lexer::Kind::Ident, "a class");
    if (tok.text == "K") return ring_.element(canonical_class(ring_));
    auto idx = ring_.generator_index(tok.text);
    if (!idx) throw UnknownVariable(tok.text, tok.pos);
    return ring_.element(tok.text == "xi" ? ring_.xi() : ring_.h(*idx));
  }

  const IntersectionRing& ring_;
  Lexer lex_;
};

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  for (const auto& piece : parse_name_list(text)) {
    std::size_t used = 0;
    long long v;
    try {
      v = std::stoll(piece, &used);
    } catch (const std::exception&) {
      throw ParseError("expected an integer, found '" + piece + "'", 0);
    }
    if (used != piece.size()) throw ParseError("expected an integer, found '" + piece + "'", 0);
    out.push_back(v);
  }
  return out;
}

}  // namespace

ChowElement parse_class_expression(const IntersectionRing& ring, std::string_view text) {
  return ClassParser(ring, text).parse_all();
}

DivClass parse_divisor(const IntersectionRing& ring, std::string_view text) {
  const ChowElement e = parse_class_expression(ring, text);
  std::vector<std::int64_t> c(ring.generator_count(), 0);
  for (const auto& [exps, v] : e) {
    int total = 0;
    std::size_t at = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      total += exps[i];
      if (exps[i]) at = i;
    }
    if (total != 1) throw InvalidArgument("'" + std::string(text) + "' is not a divisor class");
    c[at] = v;
  }
  return DivClass(std::move(c));
}

std::int64_t evaluate_degree_query(const IntersectionRing& ring, std::string_view text) {
  return ClassParser(ring, text).parse_degree();
}

ProductBase parse_product_base(std::string_view text) {
  std::vector<int> dims;
  for (auto v : parse_int_list(text)) {
    if (v < 1 || v > 64) throw InvalidArgument("factor dimensions must lie in [1, 64]");
    dims.push_back(static_cast<int>(v));
  }
  return ProductBase(std::move(dims));
}

SplitBundleSpec parse_bundle(std::string_view text, std::size_t factors) {
  SplitBundleSpec spec;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    auto twist = parse_int_list(text.substr(start, end - start));
    if (twist.size() != factors)
      throw DimensionMismatch("bundle twist needs " + std::to_string(factors) + " entries");
    spec.twists.push_back(std::move(twist));
    start = end + 1;
  }
  return spec;
}

}  // namespace frobcheck
