#include "frobcheck/splitting/fedder.hpp"

#include <chrono>

#include "frobcheck/algebra/frobenius.hpp"
#include "frobcheck/errors.hpp"

namespace frobcheck {

HypersurfaceRing::HypersurfaceRing(Polynomial f) : f_(std::move(f)), degree_(weighted_degree(f_)) {}

std::string to_string(SplitStatus s) { return s == SplitStatus::FSplit ? "FSplit" : "NotFSplit"; }

SplitVerdict fedder_fsplit(const HypersurfaceRing& ring) {
  const std::uint32_t p = ring.prime().value();
  Polynomial residue = pow_mod_frobenius(ring.equation(), p - 1, p);
  if (residue.is_zero()) return {SplitStatus::NotFSplit, std::nullopt, std::move(residue)};
  Monomial witness = residue.leading_term().mono;
  return {SplitStatus::FSplit, std::move(witness), std::move(residue)};
}

Polynomial delta1_probe(const HypersurfaceRing& ring, std::uint64_t a, std::uint64_t b, unsigned s) {
  if (s == 0) throw InvalidArgument("probe needs s >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < s; ++i) {
    q *= ring.prime().value();
    if (q > 32768) throw ExponentOverflow();
  }
  const Polynomial& f = ring.equation();
  Polynomial left = pow_mod_frobenius(f, a, q);
  if (left.is_zero() || b == 0) return left;
  Polynomial right = pow_mod_frobenius(delta1(f), b, q);
  return multiply_mod_frobenius(left, right, q);
}

FedderReport fedder_report(const HypersurfaceRing& ring) {
  const auto start = std::chrono::steady_clock::now();
  const SplitVerdict v = fedder_fsplit(ring);
  const Polynomial d1 = delta1(ring.equation());
  const auto stop = std::chrono::steady_clock::now();

  FedderReport r;
  r.polynomial = ring.equation().to_string();
  r.prime = ring.prime().value();
  r.degree = ring.degree();
  r.status = v.status;
  if (v.witness) r.witness = format_monomial(ring.vars(), *v.witness);
  r.residue_terms = v.residue.term_count();
  r.delta1_terms = d1.term_count();
  r.delta1_degree = try_weighted_degree(d1);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return r;
}

void to_json(nlohmann::json& j, const FedderReport& r) {
  j = nlohmann::json{{"polynomial", r.polynomial},
                     {"prime", r.prime},
                     {"degree", r.degree},
                     {"status", to_string(r.status)},
                     {"witness", r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr)},
                     {"residue_terms", r.residue_terms},
                     {"delta1_terms", r.delta1_terms},
                     {"delta1_degree",
                      r.delta1_degree ? nlohmann::json(*r.delta1_degree) : nlohmann::json(nullptr)},
                     {"elapsed_ms", r.elapsed_ms}};
}

void from_json(const nlohmann::json& j, FedderReport& r) {
  j.at("polynomial").get_to(r.polynomial);
  j.at("prime").get_to(r.prime);
  j.at("degree").get_to(r.degree);
  const auto status = j.at("status").get<std::string>();
  if (status == "FSplit") r.status = SplitStatus::FSplit;
  else if (status == "NotFSplit") r.status = SplitStatus::NotFSplit;
  else throw InvalidArgument("unknown split status '" + status + "'");
  if (j.at("witness").is_null()) r.witness.reset();
  else r.witness = j.at("witness").get<std::string>();
  j.at("residue_terms").get_to(r.residue_terms);
  j.at("delta1_terms").get_to(r.delta1_terms);
  if (j.at("delta1_degree").is_null()) r.delta1_degree.reset();
  else r.delta1_degree = j.at("delta1_degree").get<MultiDegree>();
  j.at("elapsed_ms").get_to(r.elapsed_ms);
}

}  // namespace frobcheck
