#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "frobcheck/algebra/polynomial.hpp"
#include "frobcheck/geometry/ambient.hpp"
#include "frobcheck/ideals/poly_ideal.hpp"

namespace frobcheck {

/// Hypersurface {f = 0} in a product of weighted projective spaces.
class HypersurfaceVariety {
 public:
  HypersurfaceVariety(Prime p, AmbientSpace space, Polynomial f);

  Prime prime() const noexcept { return p_; }
  const AmbientSpace& space() const noexcept { return space_; }
  const Polynomial& equation() const noexcept { return f_; }
  const MultiDegree& multidegree() const noexcept { return degree_; }

 private:
  Prime p_;
  AmbientSpace space_;
  Polynomial f_;
  MultiDegree degree_;
};

/// (f, df/dx for every variable). f stays a generator so the ideal is
/// right even when p divides a degree.
PolyIdeal jacobian_ideal(const HypersurfaceVariety& v);

enum class ConeStatus { SmoothAwayFromIrrelevant, SingularWitnessIdeal };

struct ConeSmoothness {
  ConeStatus status;
  std::size_t charts_checked;
  /// Product of one variable per factor at which the Jacobian ideal
  /// survives localization; present iff SingularWitnessIdeal.
  std::optional<Monomial> failing_chart;
};

/// Jacobian criterion on the affine cone, one Rabinowitsch test per
/// choice of a variable from each factor. `jobs` > 1 runs charts in
/// parallel; the result does not depend on it.
ConeSmoothness cone_smoothness(const HypersurfaceVariety& v, unsigned jobs = 1);

enum class SmoothnessVerdict { Smooth, QuasiSmoothOnly, Singular };

struct SmoothnessReport {
  SmoothnessVerdict verdict;
  ConeSmoothness cone;
  /// Ambient singular points lying on the hypersurface.
  std::vector<SingularStratum> strata_on_variety;
};

/// Smooth iff quasi-smooth and the hypersurface avoids every ambient
/// singular point. Throws Unsupported if an ambient singular stratum is
/// positive-dimensional.
SmoothnessReport smoothness_verdict(const HypersurfaceVariety& v, unsigned jobs = 1);

std::string to_string(ConeStatus s);
std::string to_string(SmoothnessVerdict s);

/// Euler relation sum_x w_c(x) x df/dx = d_c f in grading component c.
struct EulerCheck {
  std::size_t component;
  long degree;
  /// p divides the degree; the relation then only says the sum is 0.
  bool degenerate;
  bool holds;
};

std::vector<EulerCheck> euler_relations(const HypersurfaceVariety& v);

}  // namespace frobcheck
