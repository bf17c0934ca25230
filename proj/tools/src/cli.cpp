#include "frobcheck_cli/cli.hpp"

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "frobcheck/algebra/frobenius.hpp"
#include "frobcheck/algebra/parse.hpp"
#include "frobcheck/chow/intersection_ring.hpp"
#include "frobcheck/corpus/corpus.hpp"
#include "frobcheck/dplattice/lattice.hpp"
#include "frobcheck/geometry/smoothness.hpp"
#include "frobcheck/splitting/fedder.hpp"

namespace frobcheck::cli {

namespace {

struct RingArgs {
  unsigned prime = 0;
  std::string vars;
  std::string weights;
  std::string poly;
};

void add_ring_options(CLI::App* sub, RingArgs& a) {
  sub->add_option("-p,--prime", a.prime, "characteristic")->required();
  sub->add_option("--vars", a.vars, "variable names \"x,y,z\" or an ambient such as \"P(1,1,3)\"")->required();
  sub->add_option("--weights", a.weights, "weights matching --vars, default all 1");
  sub->add_option("--poly", a.poly, "polynomial")->required();
}

VariableSet make_vars(const RingArgs& a) {
  if (!a.vars.empty() && a.vars.front() == 'P') {
    if (!a.weights.empty()) throw InvalidArgument("--weights cannot be combined with an ambient spec");
    return AmbientSpace::parse(a.vars).variables();
  }
  auto names = parse_name_list(a.vars);
  if (a.weights.empty()) return VariableSet::standard(std::move(names));
  std::vector<int> w;
  for (const auto& s : parse_name_list(a.weights)) w.push_back(std::stoi(s));
  return VariableSet::weighted(std::move(names), std::move(w));
}

Polynomial make_poly(const RingArgs& a) { return parse_poly(a.poly, make_vars(a), Prime(a.prime)); }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"frobcheck: Frobenius splitting, smoothness, intersection and lattice checks", "frobcheck"};
  app.require_subcommand(1);

  RingArgs fs;
  bool fs_json = false;
  auto* fsplit = app.add_subcommand("fsplit", "Fedder's criterion for a hypersurface");
  add_ring_options(fsplit, fs);
  fsplit->add_flag("--json", fs_json, "print a JSON report");

  RingArgs d1;
  std::vector<std::uint64_t> probe;
  auto* delta = app.add_subcommand("delta1", "Witt carry of a polynomial");
  add_ring_options(delta, d1);
  delta->add_option("--probe", probe, "a,b,s: f^a delta1(f)^b mod m^[p^s]")->delimiter(',')->expected(3);

  unsigned sm_prime = 0, sm_jobs = 1;
  std::string sm_ambient, sm_vars, sm_poly;
  bool sm_cone = false;
  auto* smooth = app.add_subcommand("smooth", "smoothness of a hypersurface in a weighted product");
  smooth->add_option("-p,--prime", sm_prime)->required();
  smooth->add_option("--ambient", sm_ambient, "e.g. \"P(1,1,1,1,3)\" or \"P2xP2\"")->required();
  smooth->add_option("--vars", sm_vars, "variable names in factor order");
  smooth->add_option("--poly", sm_poly)->required();
  smooth->add_option("--jobs", sm_jobs)->check(CLI::PositiveNumber);
  smooth->add_flag("--cone", sm_cone, "report only the affine-cone criterion");

  std::string ch_base, ch_bundle, ch_expr;
  bool ch_canonical = false;
  auto* chow = app.add_subcommand("chow", "intersection numbers on products and split bundles");
  chow->add_option("--base", ch_base, "factor dimensions, e.g. 1,1,1")->required();
  chow->add_option("--bundle", ch_bundle, "twists, e.g. \"0,0;1,0;0,1\"");
  auto* expr_opt = chow->add_option("--expr", ch_expr, "\"deg(...)\"");
  auto* canon_opt = chow->add_flag("--canonical", ch_canonical, "print the canonical class");
  expr_opt->excludes(canon_opt);

  auto* lattice = app.add_subcommand("lattice", "blowup Picard lattice combinatorics");
  lattice->require_subcommand(1);
  int lt_points = 7;
  std::int64_t lt_dmax = 3;
  bool lt_langer = false, lt_list = false;
  auto* exc = lattice->add_subcommand("exc", "(-1)-classes");
  exc->add_option("--points", lt_points)->check(CLI::Range(1, 8));
  exc->add_option("--dmax", lt_dmax)->check(CLI::NonNegativeNumber);
  exc->add_flag("--langer", lt_langer, "impose the Langer (-2)-configuration (r = 7)");
  exc->add_flag("--list", lt_list, "print the classes");

  std::string vf_path, vf_format = "text", vf_output;
  unsigned vf_jobs = 1;
  bool vf_no_timings = false;
  auto* verify = app.add_subcommand("verify", "run a corpus file");
  verify->add_option("corpus", vf_path)->required();
  verify->add_option("--jobs", vf_jobs)->check(CLI::PositiveNumber);
  verify->add_option("--format", vf_format)->check(CLI::IsMember({"json", "text"}));
  verify->add_option("-o,--output", vf_output, "also write the JSON report here");
  verify->add_flag("--no-timings", vf_no_timings, "write elapsed_ms as 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*fsplit) {
      const HypersurfaceRing ring(make_poly(fs));
      if (fs_json) {
        out << nlohmann::json(fedder_report(ring)).dump(2) << "\n";
        return 0;
      }
      const SplitVerdict v = fedder_fsplit(ring);
      out << to_string(v.status);
      if (v.witness) out << " witness=" << format_monomial(ring.vars(), *v.witness);
      out << "\n";
      return 0;
    }
    if (*delta) {
      const Polynomial f = make_poly(d1);
      const Polynomial r = probe.empty() ? delta1(f)
                                         : delta1_probe(HypersurfaceRing(f), probe[0], probe[1],
                                                        static_cast<unsigned>(probe[2]));
      out << r.to_string() << "\n";
      return 0;
    }
    if (*smooth) {
      std::optional<std::vector<std::string>> names;
      if (!sm_vars.empty()) names = parse_name_list(sm_vars);
      const AmbientSpace space = AmbientSpace::parse(sm_ambient, names);
      const Prime p(sm_prime);
      const HypersurfaceVariety v(p, space, parse_poly(sm_poly, space.variables(), p));
      for (const auto& e : euler_relations(v))
        if (!e.holds) err << "warning: Euler relation fails in grading component " << e.component << "\n";
      if (sm_cone) {
        const auto c = cone_smoothness(v, sm_jobs);
        out << to_string(c.status);
        if (c.failing_chart) out << " chart=" << format_monomial(space.variables(), *c.failing_chart);
        out << "\n";
        return 0;
      }
      const auto r = smoothness_verdict(v, sm_jobs);
      out << to_string(r.verdict) << "\n";
      return 0;
    }
    if (*chow) {
      ProductBase base = parse_product_base(ch_base);
      const IntersectionRing ring = ch_bundle.empty()
                                        ? IntersectionRing(base)
                                        : IntersectionRing(base, parse_bundle(ch_bundle, base.factors()));
      if (ch_canonical) {
        out << ring.format(canonical_class(ring)) << "\n";
      } else if (!ch_expr.empty()) {
        out << evaluate_degree_query(ring, ch_expr) << "\n";
      } else {
        err << "chow: one of --expr or --canonical is required\n";
        return 2;
      }
      return 0;
    }
    if (*exc) {
      const PicLattice L(lt_points);
      const auto all = enumerate_classes(L, -1, -1, lt_dmax);
      if (!lt_langer) {
        out << "(-1)-classes: " << all.size() << "\n";
        if (lt_list)
          for (const auto& c : all) out << to_string(c) << "\n";
        return 0;
      }
      if (lt_points != 7) {
        err << "lattice exc: --langer needs --points 7\n";
        return 2;
      }
      const auto neg2 = langer_neg2_classes();
      bool disjoint = true;
      for (std::size_t i = 0; i < neg2.size(); ++i)
        for (std::size_t j = i + 1; j < neg2.size(); ++j) disjoint = disjoint && L.dot(neg2[i], neg2[j]) == 0;
      const auto compatible = compatible_exceptionals(L, neg2);
      out << "(-1)-classes: " << all.size() << "; compatible: " << compatible.size()
          << "; (-2)-classes: " << neg2.size() << "; disjoint: " << (disjoint ? "yes" : "no") << "\n";
      if (lt_list) {
        for (const auto& c : compatible) out << "(-1) " << to_string(c) << "\n";
        for (const auto& c : neg2) out << "(-2) " << to_string(c) << "\n";
      }
      return 0;
    }
    if (*verify) {
      const Report report = run_corpus(std::filesystem::path(vf_path), {vf_jobs, !vf_no_timings});
      const std::string js = nlohmann::json(report).dump(2) + "\n";
      if (vf_format == "json") out << js;
      else out << report_text(report);
      if (!vf_output.empty()) {
        std::ofstream f(vf_output);
        if (!f) {
          err << "cannot write " << vf_output << "\n";
          return 2;
        }
        f << js;
      }
      return exit_code(report);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace frobcheck::cli
