#include "frobcheck/corpus/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "frobcheck/algebra/frobenius.hpp"
#include "frobcheck/algebra/parse.hpp"
#include "frobcheck/chow/intersection_ring.hpp"
#include "frobcheck/dplattice/lattice.hpp"
#include "frobcheck/dplattice/projective_plane.hpp"
#include "frobcheck/geometry/smoothness.hpp"
#include "frobcheck/splitting/fedder.hpp"

namespace frobcheck {

namespace {

using json = nlohmann::json;

const std::set<std::string> kKinds{"fsplit", "smooth", "delta1", "chow", "lattice"};
const std::set<std::string> kSplitVocab{"FSplit", "NotFSplit"};
const std::set<std::string> kSmoothVocab{"Smooth", "QuasiSmoothOnly", "Singular", "SmoothAwayFromIrrelevant",
                                         "SingularWitnessIdeal"};
const std::set<std::string> kLatticeQueries{"exceptional_count", "neg2_count",       "neg2_disjoint",
                                            "compatible_count",  "fano_incidence",   "pgl3_order",
                                            "full_plane_orbit",  "frame_canonical"};

bool is_cone_status(const std::string& s) {
  return s == "SmoothAwayFromIrrelevant" || s == "SingularWitnessIdeal";
}

const json& field(const json& obj, const std::string& entry, const std::string& key, json::value_t type) {
  if (!obj.is_object()) throw SchemaError(entry, key, "enclosing value is not an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(entry, key, "missing");
  const bool ok = type == json::value_t::number_integer ? it->is_number_integer() : it->type() == type;
  if (!ok) throw SchemaError(entry, key, std::string("expected ") + json(type).type_name() + ", found " +
                                             it->type_name());
  return *it;
}

void reject_unknown(const json& obj, const std::string& entry, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : obj.items())
    if (std::none_of(keys.begin(), keys.end(), [&](const char* allowed) { return k == allowed; }))
      throw SchemaError(entry, k, "unknown key");
}

bool needs_polynomial(const CorpusEntry& e) {
  return std::any_of(e.checks.begin(), e.checks.end(), [](const CheckSpec& c) {
    return c.kind == "fsplit" || c.kind == "smooth" || c.kind == "delta1";
  });
}

struct Setting {
  Prime p;
  AmbientSpace space;
  Polynomial f;
};

Setting build_setting(const CorpusEntry& e) {
  if (e.prime < 2 || e.prime > 97) throw InvalidArgument("prime " + std::to_string(e.prime) + " out of range");
  Prime p(static_cast<std::uint32_t>(e.prime));
  AmbientSpace space(e.factors);
  Polynomial f = parse_poly(e.polynomial, space.variables(), p);
  return {p, std::move(space), std::move(f)};
}

std::int64_t parse_integer(const std::string& s) {
  std::size_t used = 0;
  const long long v = std::stoll(s, &used);
  if (used != s.size()) throw std::invalid_argument("trailing characters");
  return v;
}

ProductBase chow_base(const json& params) { return parse_product_base(params.at("base").get<std::string>()); }

IntersectionRing chow_ring(const json& params) {
  ProductBase base = chow_base(params);
  if (params.contains("bundle"))
    return IntersectionRing(base, parse_bundle(params.at("bundle").get<std::string>(), base.factors()));
  return IntersectionRing(base);
}

void validate_check(const CorpusEntry& e, const CheckSpec& c) {
  if (!kKinds.count(c.kind)) throw SchemaError(e.name, "kind", "unknown check kind '" + c.kind + "'");
  if (c.kind == "fsplit" && !kSplitVocab.count(c.expect))
    throw SchemaError(e.name, "expect", "'" + c.expect + "' is not an F-splitting verdict");
  if (c.kind == "smooth" && !kSmoothVocab.count(c.expect))
    throw SchemaError(e.name, "expect", "'" + c.expect + "' is not a smoothness verdict");
  if (c.kind == "chow" && !c.params.contains("base")) throw SchemaError(e.name, "params.base", "missing");
  if (c.kind == "lattice") {
    if (!c.params.contains("query") || !c.params.at("query").is_string() ||
        !kLatticeQueries.count(c.params.at("query").get<std::string>()))
      throw SchemaError(e.name, "params.query", "missing or unknown lattice query");
  }
}

// Evaluation ------------------------------------------------------------

struct Outcome {
  std::string expected;
  std::string actual;
  bool passed;
};

Outcome eval_fsplit(const CorpusEntry& e, const CheckSpec& c) {
  auto s = build_setting(e);
  const HypersurfaceRing ring(s.f);
  const SplitVerdict v = fedder_fsplit(ring);
  Outcome o{c.expect, to_string(v.status), false};
  if (c.params.contains("witness")) {
    o.expected += " witness=" + c.params.at("witness").get<std::string>();
    o.actual += " witness=" + (v.witness ? format_monomial(ring.vars(), *v.witness) : std::string("none"));
  }
  o.passed = o.expected == o.actual;
  return o;
}

Outcome eval_smooth(const CorpusEntry& e, const CheckSpec& c) {
  auto s = build_setting(e);
  const HypersurfaceVariety v(s.p, s.space, s.f);
  std::string actual = is_cone_status(c.expect) ? to_string(cone_smoothness(v).status)
                                                : to_string(smoothness_verdict(v).verdict);
  return {c.expect, actual, actual == c.expect};
}

Outcome eval_delta1(const CorpusEntry& e, const CheckSpec& c) {
  auto s = build_setting(e);
  Polynomial result(s.p, s.f.vars());
  if (c.params.contains("probe")) {
    const auto probe = c.params.at("probe").get<std::vector<std::uint64_t>>();
    if (probe.size() != 3) throw InvalidArgument("probe needs [a, b, s]");
    result = delta1_probe(HypersurfaceRing(s.f), probe[0], probe[1], static_cast<unsigned>(probe[2]));
  } else {
    result = delta1(s.f);
  }
  const Polynomial expected = parse_poly(c.expect, s.f.vars(), s.p);
  return {expected.to_string(), result.to_string(), expected == result};
}

Outcome eval_chow(const CheckSpec& c) {
  const json& pr = c.params;
  const IntersectionRing ring = chow_ring(pr);
  auto integer = [&](std::int64_t value) {
    const std::string expected = std::to_string(parse_integer(c.expect));
    const std::string actual = std::to_string(value);
    return Outcome{expected, actual, expected == actual};
  };
  if (pr.contains("expr")) return integer(evaluate_degree_query(ring, pr.at("expr").get<std::string>()));
  if (pr.contains("hypersurface")) {
    std::vector<DivClass> classes;
    for (const auto& s : pr.at("classes").get<std::vector<std::string>>())
      classes.push_back(parse_divisor(ring, s));
    return integer(hypersurface_degree(ring, parse_divisor(ring, pr.at("hypersurface").get<std::string>()), classes));
  }
  if (pr.contains("omega_twist")) {
    const DivClass twist = parse_divisor(ring, pr.at("omega_twist").get<std::string>());
    return integer(chern_top_degree(ring, omega_twist_factors(ring.base(), twist)));
  }
  if (pr.contains("canonical")) {
    const DivClass want = parse_divisor(ring, c.expect);
    const DivClass got = canonical_class(ring);
    return {ring.format(want), ring.format(got), want == got};
  }
  if (pr.contains("lhs") && pr.contains("rhs")) {
    const bool holds = verify_linear_identity(ring, parse_divisor(ring, pr.at("lhs").get<std::string>()),
                                              parse_divisor(ring, pr.at("rhs").get<std::string>()));
    const std::string actual = holds ? "true" : "false";
    return {c.expect, actual, actual == c.expect};
  }
  throw InvalidArgument("chow check needs one of expr, hypersurface, omega_twist, canonical, lhs/rhs");
}

std::string lattice_query(const json& pr) {
  const std::string q = pr.at("query").get<std::string>();
  if (q == "exceptional_count") {
    const PicLattice L(pr.value("r", 7));
    return std::to_string(enumerate_classes(L, -1, -1, pr.value("d_max", 3)).size());
  }
  if (q == "neg2_count") return std::to_string(langer_neg2_classes().size());
  if (q == "neg2_disjoint") {
    const PicLattice L(7);
    const auto n = langer_neg2_classes();
    for (std::size_t i = 0; i < n.size(); ++i)
      for (std::size_t j = i + 1; j < n.size(); ++j)
        if (L.dot(n[i], n[j]) != 0) return "no";
    return "yes";
  }
  if (q == "compatible_count") {
    const std::string which = pr.value("neg2", std::string("langer"));
    std::vector<LatticeClass> neg2;
    if (which == "langer") neg2 = langer_neg2_classes();
    else if (which != "none") throw InvalidArgument("neg2 must be 'langer' or 'none'");
    return std::to_string(count_compatible_exceptionals(PicLattice(7), neg2));
  }
  if (q == "fano_incidence") {
    const auto lines = fano_lines();
    std::vector<int> per_point(7, 0);
    for (const auto& l : lines)
      for (int i : l) ++per_point[i];
    const bool uniform = std::all_of(per_point.begin(), per_point.end(), [&](int c) { return c == per_point[0]; });
    return "7/" + std::to_string(lines.size()) + "/3/" + (uniform ? std::to_string(per_point[0]) : "mixed");
  }
  const FiniteField F(pr.value("q", 2u));
  if (q == "pgl3_order") {
    std::uint64_t n = 0;
    for_each_pgl3(F, [&](const Matrix3&) { ++n; });
    return std::to_string(n);
  }
  if (q == "full_plane_orbit") {
    return std::to_string(pgl_orbit_canonical(F, PointConfig(F, all_points(F))).orbit_size);
  }
  // frame_canonical: a general 4-point configuration lands on the standard frame.
  std::vector<PlanePoint> frame;
  for (const auto& p : pr.at("points")) frame.push_back(p.get<PlanePoint>());
  const PointConfig standard(F, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  return pgl_orbit_canonical(F, PointConfig(F, frame)).canonical == standard ? "standard" : "other";
}

Outcome eval_lattice(const CheckSpec& c) {
  std::string actual = lattice_query(c.params);
  return {c.expect, actual, actual == c.expect};
}

}  // namespace

Corpus parse_corpus(const json& j) {
  Corpus corpus;
  const json& entries = field(j, "<top>", "entries", json::value_t::array);
  std::set<std::string> names;
  for (std::size_t idx = 0; idx < entries.size(); ++idx) {
    const json& ej = entries[idx];
    const std::string label = "#" + std::to_string(idx);
    CorpusEntry e;
    e.name = field(ej, label, "name", json::value_t::string).get<std::string>();
    if (!names.insert(e.name).second) throw SchemaError(e.name, "name", "duplicate entry name");
    reject_unknown(ej, e.name, {"name", "prime", "ambient", "polynomial", "checks", "paper_ref"});
    e.prime = field(ej, e.name, "prime", json::value_t::number_integer).get<std::int64_t>();
    const json& amb = field(ej, e.name, "ambient", json::value_t::object);
    reject_unknown(amb, e.name, {"factors"});
    for (const auto& fj : field(amb, e.name, "factors", json::value_t::array)) {
      reject_unknown(fj, e.name, {"weights", "vars"});
      ProjectiveFactor f;
      try {
        f.weights = field(fj, e.name, "weights", json::value_t::array).get<std::vector<int>>();
        f.vars = field(fj, e.name, "vars", json::value_t::array).get<std::vector<std::string>>();
      } catch (const json::exception& ex) {
        throw SchemaError(e.name, "ambient.factors", ex.what());
      }
      e.factors.push_back(std::move(f));
    }
    e.polynomial = field(ej, e.name, "polynomial", json::value_t::string).get<std::string>();
    e.paper_ref = field(ej, e.name, "paper_ref", json::value_t::string).get<std::string>();
    for (const auto& cj : field(ej, e.name, "checks", json::value_t::array)) {
      reject_unknown(cj, e.name, {"kind", "expect", "params"});
      CheckSpec c;
      c.kind = field(cj, e.name, "kind", json::value_t::string).get<std::string>();
      c.expect = field(cj, e.name, "expect", json::value_t::string).get<std::string>();
      c.params = field(cj, e.name, "params", json::value_t::object);
      validate_check(e, c);
      e.checks.push_back(std::move(c));
    }
    if (needs_polynomial(e)) {
      try {
        auto s = build_setting(e);
        for (const auto& c : e.checks)
          if (c.kind == "delta1") parse_poly(c.expect, s.f.vars(), s.p);
      } catch (const Error& ex) {
        throw SchemaError(e.name, "polynomial", ex.what());
      }
    }
    corpus.entries.push_back(std::move(e));
  }
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("<file>", path.string(), "cannot open");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& ex) {
    throw SchemaError("<file>", path.string(), ex.what());
  }
  return parse_corpus(j);
}

json corpus_to_json(const Corpus& c) {
  json entries = json::array();
  for (const auto& e : c.entries) {
    json factors = json::array();
    for (const auto& f : e.factors) factors.push_back({{"weights", f.weights}, {"vars", f.vars}});
    json checks = json::array();
    for (const auto& ch : e.checks) checks.push_back({{"kind", ch.kind}, {"expect", ch.expect}, {"params", ch.params}});
    entries.push_back({{"name", e.name},
                       {"prime", e.prime},
                       {"ambient", {{"factors", factors}}},
                       {"polynomial", e.polynomial},
                       {"checks", checks},
                       {"paper_ref", e.paper_ref}});
  }
  return {{"entries", entries}};
}

void to_json(json& j, const CheckResult& r) {
  j = {{"name", r.name},         {"check", r.check},   {"expected", r.expected},
       {"actual", r.actual},     {"passed", r.passed}, {"elapsed_ms", r.elapsed_ms}};
}

void from_json(const json& j, CheckResult& r) {
  j.at("name").get_to(r.name);
  j.at("check").get_to(r.check);
  j.at("expected").get_to(r.expected);
  j.at("actual").get_to(r.actual);
  j.at("passed").get_to(r.passed);
  j.at("elapsed_ms").get_to(r.elapsed_ms);
}

void to_json(json& j, const ReportSummary& s) {
  j = {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}};
}

void from_json(const json& j, ReportSummary& s) {
  j.at("total").get_to(s.total);
  j.at("passed").get_to(s.passed);
  j.at("failed").get_to(s.failed);
}

void to_json(json& j, const Report& r) { j = {{"results", r.results}, {"summary", r.summary}}; }

void from_json(const json& j, Report& r) {
  j.at("results").get_to(r.results);
  j.at("summary").get_to(r.summary);
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  for (const auto& row : r.results) {
    os << (row.passed ? "PASS" : "FAIL") << "  " << row.name << "  " << row.check << "  expected=" << row.expected
       << "  actual=" << row.actual << "  " << row.elapsed_ms << " ms\n";
  }
  os << "total " << r.summary.total << ", passed " << r.summary.passed << ", failed " << r.summary.failed << "\n";
  return os.str();
}

CheckResult run_check(const CorpusEntry& entry, const CheckSpec& check, bool timings) {
  CheckResult r{entry.name, check.kind, check.expect, "", false, 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o;
    if (check.kind == "fsplit") o = eval_fsplit(entry, check);
    else if (check.kind == "smooth") o = eval_smooth(entry, check);
    else if (check.kind == "delta1") o = eval_delta1(entry, check);
    else if (check.kind == "chow") o = eval_chow(check);
    else o = eval_lattice(check);
    r.expected = std::move(o.expected);
    r.actual = std::move(o.actual);
    r.passed = o.passed;
  } catch (const std::exception& ex) {
    r.actual = std::string("error: ") + ex.what();
    r.passed = false;
  }
  if (timings)
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Report run_corpus(const Corpus& corpus, const RunOptions& options) {
  const std::size_t n = corpus.entries.size();
  std::vector<std::vector<CheckResult>> per_entry(n);
  auto run_entry = [&](std::size_t i) {
    for (const auto& c : corpus.entries[i].checks) per_entry[i].push_back(run_check(corpus.entries[i], c, options.timings));
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) run_entry(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) run_entry(i);
      });
  }
  Report report;
  for (auto& rows : per_entry)
    for (auto& row : rows) {
      ++report.summary.total;
      ++(row.passed ? report.summary.passed : report.summary.failed);
      report.results.push_back(std::move(row));
    }
  return report;
}

Report run_corpus(const std::filesystem::path& path, const RunOptions& options) {
  return run_corpus(load_corpus(path), options);
}

int exit_code(const Report& r) { return r.summary.failed == 0 ? 0 : 1; }

}  // namespace frobcheck
