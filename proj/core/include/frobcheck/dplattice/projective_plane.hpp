#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace frobcheck {

/// GF(q), q = p^k <= 256, elements 0..q-1 read as base-p digit vectors of
/// polynomials modulo a fixed irreducible. 0 and 1 are the field's 0 and 1.
class FiniteField {
 public:
  explicit FiniteField(unsigned q);

  unsigned order() const noexcept { return q_; }
  unsigned characteristic() const noexcept { return p_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + b]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * q_ + b]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
  std::uint8_t inv(std::uint8_t a) const;
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add(a, neg(b)); }

 private:
  unsigned q_, p_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

using PlanePoint = std::array<std::uint8_t, 3>;
using Matrix3 = std::array<std::uint8_t, 9>;

/// Scales so the first nonzero coordinate is 1. Throws on the zero vector.
PlanePoint normalize(const FiniteField& F, PlanePoint v);
Matrix3 normalize(const FiniteField& F, Matrix3 m);

/// Sorted set of distinct normalized points of P^2(F_q).
class PointConfig {
 public:
  PointConfig(const FiniteField& F, std::vector<PlanePoint> points);

  const std::vector<PlanePoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  friend bool operator==(const PointConfig&, const PointConfig&) = default;

 private:
  std::vector<PlanePoint> points_;
};

/// [1:0:0], [0:1:0], [0:0:1], [1:1:0], [1:0:1], [0:1:1], [1:1:1], in this order.
std::vector<PlanePoint> langer_configuration();

std::vector<PlanePoint> all_points(const FiniteField& F);
bool is_full_plane_config(const FiniteField& F, const PointConfig& c);

std::uint8_t determinant(const FiniteField& F, const Matrix3& m);
PlanePoint apply(const FiniteField& F, const Matrix3& m, const PlanePoint& v);
Matrix3 compose(const FiniteField& F, const Matrix3& a, const Matrix3& b);

/// (q^3-1)(q^3-q)(q^3-q^2)/(q-1).
std::uint64_t pgl3_order(unsigned q);
/// Calls `f` on every normalized invertible matrix, i.e. once per element
/// of PGL_3(F_q).
void for_each_pgl3(const FiniteField& F, const std::function<void(const Matrix3&)>& f);
/// Materialized for q <= 4.
std::vector<Matrix3> pgl3_elements(const FiniteField& F);

struct OrbitResult {
  PointConfig canonical;
  std::uint64_t orbit_size;
  std::uint64_t stabilizer_size;
  std::uint64_t group_order;
};

/// Lexicographically least image under PGL_3(F_q) and the orbit size.
/// Throws UnsupportedFieldSize for q > 8.
OrbitResult pgl_orbit_canonical(const FiniteField& F, const PointConfig& c);

}  // namespace frobcheck
