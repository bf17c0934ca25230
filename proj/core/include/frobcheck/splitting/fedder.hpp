#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "frobcheck/algebra/polynomial.hpp"

namespace frobcheck {

/// S/(f) for a nonzero weighted-homogeneous f.
class HypersurfaceRing {
 public:
  explicit HypersurfaceRing(Polynomial f);

  Prime prime() const noexcept { return f_.prime(); }
  const VariableSet& vars() const noexcept { return f_.vars(); }
  const Polynomial& equation() const noexcept { return f_; }
  const MultiDegree& degree() const noexcept { return degree_; }

 private:
  Polynomial f_;
  MultiDegree degree_;
};

enum class SplitStatus { FSplit, NotFSplit };

std::string to_string(SplitStatus s);

struct SplitVerdict {
  SplitStatus status;
  /// Present iff FSplit: the grevlex-largest term of f^{p-1} with every
  /// exponent <= p-1.
  std::optional<Monomial> witness;
  /// f^{p-1} reduced mod (x_i^p).
  Polynomial residue;
};

/// Fedder's criterion for a hypersurface: S/(f) is F-split iff
/// f^{p-1} is not in (x_0^p, ..., x_n^p).
SplitVerdict fedder_fsplit(const HypersurfaceRing& ring);

/// f^a * delta1(f)^b in S / m^[p^s]. Descriptive only.
Polynomial delta1_probe(const HypersurfaceRing& ring, std::uint64_t a, std::uint64_t b, unsigned s);

struct FedderReport {
  std::string polynomial;
  std::uint32_t prime;
  MultiDegree degree;
  SplitStatus status;
  std::optional<std::string> witness;
  std::size_t residue_terms;
  std::size_t delta1_terms;
  std::optional<MultiDegree> delta1_degree;
  double elapsed_ms;
};

FedderReport fedder_report(const HypersurfaceRing& ring);

void to_json(nlohmann::json& j, const FedderReport& r);
void from_json(const nlohmann::json& j, FedderReport& r);

}  // namespace frobcheck
