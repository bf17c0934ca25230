#include "frobcheck/dplattice/projective_plane.hpp"

#include <algorithm>

#include "frobcheck/algebra/prime.hpp"
#include "frobcheck/errors.hpp"

namespace frobcheck {

namespace {

using Digits = std::vector<unsigned>;

Digits to_digits(unsigned a, unsigned p, unsigned k) {
  Digits d(k);
  for (unsigned i = 0; i < k; ++i, a /= p) d[i] = a % p;
  return d;
}

unsigned from_digits(const Digits& d, unsigned p) {
  unsigned a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

// Remainder of a by the monic g over F_p, coefficients low to high.
Digits poly_mod(Digits a, const Digits& g, unsigned p) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t i = a.size(); i-- > dg;) {
    const unsigned c = a[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) a[i - dg + j] = (a[i - dg + j] + (p - c) * g[j]) % p;
  }
  a.resize(std::min(a.size(), dg));
  return a;
}

bool is_irreducible(const Digits& f, unsigned p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned deg = 1; deg <= k / 2; ++deg) {
    unsigned count = 1;
    for (unsigned i = 0; i < deg; ++i) count *= p;
    for (unsigned low = 0; low < count; ++low) {
      Digits g = to_digits(low, p, deg);
      g.push_back(1);
      const Digits r = poly_mod(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](unsigned c) { return c == 0; })) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(unsigned q) : q_(q) {
  if (q < 2 || q > 256) throw UnsupportedFieldSize(q);
  p_ = 0;
  for (unsigned d = 2; d <= q; ++d)
    if (q % d == 0) {
      p_ = d;
      break;
    }
  unsigned k = 0;
  for (unsigned t = q; t > 1; t /= p_) {
    if (t % p_ != 0) throw InvalidArgument("field order " + std::to_string(q) + " is not a prime power");
    ++k;
  }

  Digits modulus;
  if (k > 1) {
    unsigned count = q;
    for (unsigned low = 0; low < count && modulus.empty(); ++low) {
      Digits f = to_digits(low, p_, k);
      f.push_back(1);
      if (is_irreducible(f, p_)) modulus = std::move(f);
    }
  }

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    const Digits da = to_digits(a, p_, k);
    Digits na(k);
    for (unsigned i = 0; i < k; ++i) na[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<std::uint8_t>(from_digits(na, p_));
    for (unsigned b = 0; b < q; ++b) {
      const Digits db = to_digits(b, p_, k);
      Digits s(k), prod(2 * k, 0);
      for (unsigned i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p_;
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      if (k > 1) prod = poly_mod(std::move(prod), modulus, p_);
      prod.resize(k);
      add_[a * q + b] = static_cast<std::uint8_t>(from_digits(s, p_));
      mul_[a * q + b] = static_cast<std::uint8_t>(from_digits(prod, p_));
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<std::uint8_t>(b);
    }
  }
}

std::uint8_t FiniteField::inv(std::uint8_t a) const {
  if (a == 0) throw InvalidArgument("zero has no inverse");
  return inv_[a];
}

PlanePoint normalize(const FiniteField& F, PlanePoint v) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (v[i] == 0) continue;
    const auto s = F.inv(v[i]);
    for (auto& x : v) x = F.mul(x, s);
    return v;
  }
  throw InvalidArgument("the zero vector is not a projective point");
}

Matrix3 normalize(const FiniteField& F, Matrix3 m) {
  for (std::size_t i = 0; i < 9; ++i) {
    if (m[i] == 0) continue;
    const auto s = F.inv(m[i]);
    for (auto& x : m) x = F.mul(x, s);
    return m;
  }
  throw InvalidArgument("the zero matrix is not in PGL_3");
}

PointConfig::PointConfig(const FiniteField& F, std::vector<PlanePoint> points) {
  for (auto& pt : points) {
    for (auto x : pt)
      if (x >= F.order()) throw InvalidArgument("coordinate outside the field");
    pt = normalize(F, pt);
  }
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end())
    throw InvalidArgument("configuration points are not distinct");
  points_ = std::move(points);
}

std::vector<PlanePoint> langer_configuration() {
  return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
}

std::vector<PlanePoint> all_points(const FiniteField& F) {
  const auto q = static_cast<std::uint8_t>(F.order() - 1);
  std::vector<PlanePoint> out;
  out.push_back({0, 0, 1});
  for (unsigned b = 0; b <= q; ++b) out.push_back({0, 1, static_cast<std::uint8_t>(b)});
  for (unsigned a = 0; a <= q; ++a)
    for (unsigned b = 0; b <= q; ++b)
      out.push_back({1, static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)});
  return out;
}

bool is_full_plane_config(const FiniteField& F, const PointConfig& c) {
  const std::size_t q = F.order();
  return c.size() == q * q + q + 1;
}

std::uint8_t determinant(const FiniteField& F, const Matrix3& m) {
  auto minor = [&](int a, int b, int c, int d) { return F.sub(F.mul(m[a], m[d]), F.mul(m[b], m[c])); };
  std::uint8_t det = F.mul(m[0], minor(4, 5, 7, 8));
  det = F.sub(det, F.mul(m[1], minor(3, 5, 6, 8)));
  return F.add(det, F.mul(m[2], minor(3, 4, 6, 7)));
}

PlanePoint apply(const FiniteField& F, const Matrix3& m, const PlanePoint& v) {
  PlanePoint out{};
  for (int r = 0; r < 3; ++r) {
    std::uint8_t s = 0;
    for (int c = 0; c < 3; ++c) s = F.add(s, F.mul(m[3 * r + c], v[c]));
    out[r] = s;
  }
  return normalize(F, out);
}

Matrix3 compose(const FiniteField& F, const Matrix3& a, const Matrix3& b) {
  Matrix3 out{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      std::uint8_t s = 0;
      for (int k = 0; k < 3; ++k) s = F.add(s, F.mul(a[3 * r + k], b[3 * k + c]));
      out[3 * r + c] = s;
    }
  return normalize(F, out);
}

std::uint64_t pgl3_order(unsigned q) {
  const std::uint64_t q3 = static_cast<std::uint64_t>(q) * q * q;
  return (q3 - 1) * (q3 - q) * (q3 - static_cast<std::uint64_t>(q) * q) / (q - 1);
}

void for_each_pgl3(const FiniteField& F, const std::function<void(const Matrix3&)>& f) {
  const auto pts = all_points(F);
  const unsigned q = F.order();
  Matrix3 m{};
  for (const auto& r0 : pts) {
    for (int c = 0; c < 3; ++c) m[c] = r0[c];
    for (unsigned i1 = 0; i1 < q * q * q; ++i1) {
      m[3] = static_cast<std::uint8_t>(i1 % q);
      m[4] = static_cast<std::uint8_t>(i1 / q % q);
      m[5] = static_cast<std::uint8_t>(i1 / (q * q));
      for (unsigned i2 = 0; i2 < q * q * q; ++i2) {
        m[6] = static_cast<std::uint8_t>(i2 % q);
        m[7] = static_cast<std::uint8_t>(i2 / q % q);
        m[8] = static_cast<std::uint8_t>(i2 / (q * q));
        if (determinant(F, m) != 0) f(m);
      }
    }
  }
}

std::vector<Matrix3> pgl3_elements(const FiniteField& F) {
  if (F.order() > 4) throw UnsupportedFieldSize(F.order());
  std::vector<Matrix3> out;
  out.reserve(pgl3_order(F.order()));
  for_each_pgl3(F, [&](const Matrix3& m) { out.push_back(m); });
  return out;
}

OrbitResult pgl_orbit_canonical(const FiniteField& F, const PointConfig& c) {
  if (F.order() > 8) throw UnsupportedFieldSize(F.order());
  std::vector<PlanePoint> best = c.points();
  std::vector<PlanePoint> image(c.size());
  std::uint64_t stabilizer = 0;
  for_each_pgl3(F, [&](const Matrix3& m) {
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = apply(F, m, c.points()[i]);
    std::sort(image.begin(), image.end());
    if (image == c.points()) ++stabilizer;
    if (image < best) best = image;
  });
  const std::uint64_t order = pgl3_order(F.order());
  return {PointConfig(F, std::move(best)), order / stabilizer, stabilizer, order};
}

}  // namespace frobcheck
