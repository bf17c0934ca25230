#include "frobcheck/dplattice/lattice.hpp"

#include <algorithm>

#include "frobcheck/dplattice/projective_plane.hpp"
#include "frobcheck/errors.hpp"

namespace frobcheck {

std::string to_string(const LatticeClass& c) {
  std::string s = "(" + std::to_string(c.d) + ";";
  for (std::size_t i = 0; i < c.m.size(); ++i) s += (i ? "," : "") + std::to_string(c.m[i]);
  return s + ")";
}

PicLattice::PicLattice(int r) : r_(r) {
  if (r < 1 || r > 8) throw InvalidArgument("number of blown-up points must lie in [1, 8]");
}

LatticeClass PicLattice::hyperplane() const { return {1, std::vector<std::int64_t>(r_, 0)}; }

LatticeClass PicLattice::exceptional(int i) const {
  if (i < 0 || i >= r_) throw InvalidArgument("no such exceptional divisor");
  LatticeClass c{0, std::vector<std::int64_t>(r_, 0)};
  c.m[i] = -1;
  return c;
}

LatticeClass PicLattice::canonical() const { return {-3, std::vector<std::int64_t>(r_, -1)}; }

void PicLattice::check(const LatticeClass& c) const {
  if (c.m.size() != static_cast<std::size_t>(r_))
    throw DimensionMismatch("class " + to_string(c) + " does not live on the r=" + std::to_string(r_) +
                            " lattice");
}

std::int64_t PicLattice::dot(const LatticeClass& a, const LatticeClass& b) const {
  check(a);
  check(b);
  std::int64_t s = a.d * b.d;
  for (int i = 0; i < r_; ++i) s -= a.m[i] * b.m[i];
  return s;
}

namespace {

void fill(std::vector<std::int64_t>& m, std::size_t i, std::int64_t squares_left, std::int64_t sum_left,
          std::int64_t d, std::vector<LatticeClass>& out) {
  const std::size_t left = m.size() - i;
  if (left == 0) {
    if (squares_left == 0 && sum_left == 0) out.push_back({d, m});
    return;
  }
  if (squares_left < 0) return;
  for (std::int64_t v = -1; v * v <= squares_left || v < 0; ++v) {
    m[i] = v;
    fill(m, i + 1, squares_left - v * v, sum_left - v, d, out);
  }
  m[i] = 0;
}

}  // namespace

std::vector<LatticeClass> enumerate_classes(const PicLattice& L, std::int64_t self_int, std::int64_t k_deg,
                                            std::int64_t d_max) {
  if (d_max < 0) throw InvalidArgument("d_max must be nonnegative");
  if (d_max > 1000) throw InvalidArgument("d_max is too large to enumerate");
  std::vector<LatticeClass> out;
  std::vector<std::int64_t> m(L.points(), 0);
  for (std::int64_t d = 0; d <= d_max; ++d) {
    // d^2 - sum m^2 = self, -3d + sum m = k_deg
    fill(m, 0, d * d - self_int, k_deg + 3 * d, d, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::array<int, 3>> fano_lines() {
  const FiniteField F2(2);
  const auto pts = langer_configuration();
  std::vector<std::array<int, 3>> lines;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      for (int k = j + 1; k < 7; ++k) {
        Matrix3 m{};
        for (int c = 0; c < 3; ++c) {
          m[c] = pts[i][c];
          m[3 + c] = pts[j][c];
          m[6 + c] = pts[k][c];
        }
        if (determinant(F2, m) == 0) lines.push_back({i, j, k});
      }
  return lines;
}

std::vector<LatticeClass> langer_neg2_classes() {
  std::vector<LatticeClass> out;
  for (const auto& line : fano_lines()) {
    LatticeClass c{1, std::vector<std::int64_t>(7, 0)};
    for (int i : line) c.m[i] = 1;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<LatticeClass> compatible_exceptionals(const PicLattice& L, const std::vector<LatticeClass>& neg2) {
  if (L.points() != 7) throw InvalidArgument("compatible exceptional classes are defined for r = 7");
  std::vector<LatticeClass> out;
  for (auto& c : enumerate_classes(L, -1, -1, 3)) {
    if (std::all_of(neg2.begin(), neg2.end(), [&](const LatticeClass& n) { return L.dot(c, n) >= 0; }))
      out.push_back(std::move(c));
  }
  return out;
}

std::size_t count_compatible_exceptionals(const PicLattice& L, const std::vector<LatticeClass>& neg2) {
  return compatible_exceptionals(L, neg2).size();
}

}  // namespace frobcheck
