#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace frobcheck {

/// P^{n_1} x ... x P^{n_k}.
class ProductBase {
 public:
  explicit ProductBase(std::vector<int> dims);

  std::span<const int> dims() const noexcept { return dims_; }
  std::size_t factors() const noexcept { return dims_.size(); }
  int dimension() const noexcept;

 private:
  std::vector<int> dims_;
};

/// E = O(a_1) + ... + O(a_r) on a ProductBase; each a_j has one entry per
/// base factor.
struct SplitBundleSpec {
  std::vector<std::vector<std::int64_t>> twists;
};

/// Integer divisor class: coefficients on h_1..h_k and, on a bundle, xi.
class DivClass {
 public:
  DivClass() = default;
  explicit DivClass(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t size() const noexcept { return coeffs_.size(); }
  std::int64_t operator[](std::size_t i) const { return coeffs_.at(i); }
  std::span<const std::int64_t> coefficients() const noexcept { return coeffs_; }

  DivClass& operator+=(const DivClass& o);
  DivClass& operator-=(const DivClass& o);
  friend DivClass operator+(DivClass a, const DivClass& b) { return a += b; }
  friend DivClass operator-(DivClass a, const DivClass& b) { return a -= b; }
  friend DivClass operator*(std::int64_t s, const DivClass& c);
  friend bool operator==(const DivClass&, const DivClass&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// Polynomial in the ring generators with integer coefficients.
using ChowElement = std::map<std::vector<int>, std::int64_t>;

/// Chow ring of a product of projective spaces,
///   Z[h_1..h_k] / (h_i^{n_i+1}),
/// optionally of the projective bundle P(E) of a split E of rank r over it,
/// with the extra generator xi = c_1(O_P(1)) and relation
///   prod_j (xi - a_j) = 0,
/// where O_P(1) restricts to O(a_j) on the section P(O(a_j)).
/// The degree map sends h_1^{n_1}...h_k^{n_k} xi^{r-1} to 1.
class IntersectionRing {
 public:
  explicit IntersectionRing(ProductBase base);
  IntersectionRing(ProductBase base, SplitBundleSpec bundle);

  const ProductBase& base() const noexcept { return base_; }
  bool has_bundle() const noexcept { return !twists_.empty(); }
  std::size_t rank() const noexcept { return twists_.size(); }
  const std::vector<std::vector<std::int64_t>>& twists() const noexcept { return twists_; }
  /// k, plus one for xi on a bundle.
  std::size_t generator_count() const noexcept { return base_.factors() + (has_bundle() ? 1 : 0); }
  /// sum n_i, plus r - 1 on a bundle.
  int dimension() const noexcept;

  /// h_{i+1} for 0-based i.
  DivClass h(std::size_t i) const;
  /// Throws InvalidArgument without a bundle.
  DivClass xi() const;
  /// Pullback of sum_c coeffs[c] h_c from the base.
  DivClass pullback(std::span<const std::int64_t> base_coeffs) const;
  DivClass zero() const { return DivClass(std::vector<std::int64_t>(generator_count(), 0)); }

  ChowElement element(const DivClass& c) const;
  ChowElement constant(std::int64_t c) const;
  /// Product with h_i^{n_i+1} and everything above the top degree dropped.
  ChowElement multiply(const ChowElement& a, const ChowElement& b) const;
  ChowElement add(const ChowElement& a, const ChowElement& b, std::int64_t scale = 1) const;
  /// Degree of the top-dimensional part; lower-dimensional parts are ignored.
  std::int64_t degree(const ChowElement& e) const;
  /// Degree of a single monomial (exponents per generator).
  std::int64_t monomial_degree(std::span<const int> exps) const;

  std::string generator_name(std::size_t i) const;
  std::optional<std::size_t> generator_index(std::string_view name) const;
  std::string format(const DivClass& c) const;

 private:
  void check_class(const DivClass& c) const;

  ProductBase base_;
  std::vector<std::vector<std::int64_t>> twists_;
  // Coefficients of prod_j 1/(1 - a_j) truncated in the base ring, dense,
  // mixed radix over (n_i + 1).
  std::vector<std::int64_t> segre_;
};

/// Degree of the product of `classes`; their count must equal the ring
/// dimension.
std::int64_t intersect(const IntersectionRing& ring, std::span<const DivClass> classes);

/// Degree on the hypersurface X of the product of `classes`
/// (dimension - 1 of them).
std::int64_t hypersurface_degree(const IntersectionRing& ring, const DivClass& hypersurface,
                                 std::span<const DivClass> classes);

/// K = -sum (n_i+1) h_i; on P(E) of rank r,
/// K = -r xi + pullback(K_base + c_1(E)).
DivClass canonical_class(const IntersectionRing& ring);

/// deg c_top of a split bundle with the given line summands.
std::int64_t chern_top_degree(const IntersectionRing& ring, std::span<const DivClass> line_factors);

/// On (P^1)^k: the summands pr_i^* Omega^1 (x) twist, i.e. twist with 2
/// subtracted in slot i.
std::vector<DivClass> omega_twist_factors(const ProductBase& base, const DivClass& twist);

/// Equality of class vectors in the (free) Picard lattice.
bool verify_linear_identity(const IntersectionRing& ring, const DivClass& lhs, const DivClass& rhs);

/// Class expressions: integers, h1..hk, xi, K (canonical class), '+', '-',
/// '*', '^', parentheses.
ChowElement parse_class_expression(const IntersectionRing& ring, std::string_view text);
/// A degree-one expression as a divisor class.
DivClass parse_divisor(const IntersectionRing& ring, std::string_view text);
/// Evaluates "deg(<expr>)".
std::int64_t evaluate_degree_query(const IntersectionRing& ring, std::string_view text);

/// "1,1,1" -> dims; "0,0;1,0;0,1" -> twists.
ProductBase parse_product_base(std::string_view text);
SplitBundleSpec parse_bundle(std::string_view text, std::size_t factors);

}  // namespace frobcheck
