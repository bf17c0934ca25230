#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace frobcheck {

/// dH - sum m_i E_i.
struct LatticeClass {
  std::int64_t d = 0;
  std::vector<std::int64_t> m;

  friend auto operator<=>(const LatticeClass&, const LatticeClass&) = default;
  friend bool operator==(const LatticeClass&, const LatticeClass&) = default;
};

std::string to_string(const LatticeClass& c);

/// Pic of P^2 blown up at r points, form diag(1, -1, ..., -1).
class PicLattice {
 public:
  explicit PicLattice(int r);

  int points() const noexcept { return r_; }
  LatticeClass hyperplane() const;
  LatticeClass exceptional(int i) const;
  /// (-3; -1, ..., -1), i.e. -3H + sum E_i.
  LatticeClass canonical() const;

  std::int64_t dot(const LatticeClass& a, const LatticeClass& b) const;
  std::int64_t self_intersection(const LatticeClass& c) const { return dot(c, c); }
  std::int64_t k_degree(const LatticeClass& c) const { return dot(canonical(), c); }

 private:
  void check(const LatticeClass& c) const;
  int r_;
};

/// All classes with 0 <= d <= d_max, every m_i >= -1, the given
/// self-intersection and K-degree; sorted by (d, m).
std::vector<LatticeClass> enumerate_classes(const PicLattice& L, std::int64_t self_int,
                                            std::int64_t k_deg, std::int64_t d_max);

/// Collinear triples of P^2(F_2), indices into langer_configuration().
std::vector<std::array<int, 3>> fano_lines();

/// H - E_i - E_j - E_k for each Fano line, on the r = 7 lattice.
std::vector<LatticeClass> langer_neg2_classes();

/// (-1)-classes of the r = 7 lattice (d <= 3) meeting every class of
/// `neg2` nonnegatively.
std::size_t count_compatible_exceptionals(const PicLattice& L, const std::vector<LatticeClass>& neg2);
std::vector<LatticeClass> compatible_exceptionals(const PicLattice& L,
                                                  const std::vector<LatticeClass>& neg2);

}  // namespace frobcheck
