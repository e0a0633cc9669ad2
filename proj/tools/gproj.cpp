#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gproj/comma.hpp"
#include "gproj/errors.hpp"
#include "gproj/homology.hpp"
#include "gproj/horseshoe.hpp"
#include "gproj/io.hpp"
#include "gproj/recollement.hpp"

using json = nlohmann::json;
using namespace gproj;

namespace {

enum Exit { kOk = 0, kInternal = 1, kInput = 2, kMismatch = 3, kUnknown = 4, kBudget = 5, kHypothesis = 6 };

struct Out {
  bool json = false;
  void text(const std::string& s) const {
    if (!json) std::cout << s << "\n";
  }
  void record(const nlohmann::json& j) const {
    if (json) std::cout << j.dump() << "\n";
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string verdict_word(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Unknown:
      break;
  }
  return "unknown";
}

std::string number(const std::optional<std::size_t>& x) { return x ? std::to_string(*x) : "inf"; }

json opt_json(const std::optional<std::size_t>& x) { return x ? json(*x) : json(nullptr); }

struct Globals {
  bool json = false;
  std::string field;
  std::optional<Field> parsed_field() const {
    if (field.empty()) return std::nullopt;
    try {
      return Field::parse(field);
    } catch (const Error&) {
      throw InvalidInput("bad --field '" + field + "'");
    }
  }
};

int cmd_algebra_info(const Globals& g, const std::string& path, std::size_t bound) {
  Out out{g.json};
  AlgebraPtr a = load_algebra(path, g.parsed_field());
  const Quiver& q = a->quiver();
  GorensteinInfo info = is_gorenstein_algebra(a, bound);
  const bool selfinj = is_selfinjective(a);
  const bool hered = is_hereditary(a);
  out.text("algebra: " + std::to_string(q.num_vertices()) + " vertices, " + std::to_string(q.num_arrows()) +
           " arrows, field " + a->field().name());
  out.text("dim " + std::to_string(a->dim()) + ", self-injective: " + yes_no(selfinj));
  out.text("path basis size: " + std::to_string(a->basis().size()));
  out.text("hereditary: " + yes_no(hered));
  json proj = json::object(), inj = json::object();
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    const std::string p = indec_projective(a, v).dims_string();
    const std::string i = indec_injective(a, v).dims_string();
    out.text("P(" + q.vertex_name(v) + ") = " + p + "   I(" + q.vertex_name(v) + ") = " + i);
    proj[q.vertex_name(v)] = indec_projective(a, v).dims();
    inj[q.vertex_name(v)] = indec_injective(a, v).dims();
  }
  std::string gor = verdict_word(info.status);
  if (info.status == Verdict::Yes) gor += " (dimension " + std::to_string(info.d) + ")";
  if (info.status == Verdict::Unknown) gor += " (up to bound " + std::to_string(info.bound) + ")";
  out.text("Gorenstein: " + gor);
  out.record({{"type", "algebra-info"},
              {"vertices", q.vertex_names()},
              {"arrows", q.num_arrows()},
              {"field", a->field().name()},
              {"dim", a->dim()},
              {"self_injective", selfinj},
              {"hereditary", hered},
              {"projectives", proj},
              {"injectives", inj},
              {"gorenstein", verdict_word(info.status)},
              {"gorenstein_dimension", info.status == Verdict::Yes ? json(info.d) : json(nullptr)}});
  return kOk;
}

int cmd_gp_check(const Globals& g, const std::string& tri, const std::string& mod, std::size_t bound,
                 const std::string& route) {
  Out out{g.json};
  TriangularPtr t = load_triangular(tri, g.parsed_field());
  Module m = load_module(mod, t->t());
  const bool direct = route != "via-components";
  const bool via = route != "direct";
  std::optional<GPVerdict> dv;
  std::optional<ComponentVerdict> cv;
  if (direct) dv = is_gp(m, is_gorenstein_algebra(t->t(), bound));
  if (via) cv = gp_via_components(make_context(t, bound), m);
  out.text("module " + m.dims_string());
  json rec{{"type", "gp-check"}, {"module", m.dims()}};
  int code = kOk;
  if (dv && cv) {
    const bool agree = dv->status == cv->verdict.status;
    out.text("GP: " + verdict_word(dv->status) + " / " + verdict_word(cv->verdict.status) +
             (agree ? " (agree)" : " (DISAGREE)"));
    rec["agree"] = agree;
    if (!agree) code = kMismatch;
  } else {
    out.text("GP: " + verdict_word(dv ? dv->status : cv->verdict.status));
  }
  if (dv) {
    out.text("direct: " + dv->describe());
    rec["direct"] = verdict_word(dv->status);
  }
  if (cv) {
    out.text("components: " + cv->describe());
    if (cv->failed_clause) out.text("failing clause: " + std::to_string(cv->failed_clause));
    rec["via_components"] = verdict_word(cv->verdict.status);
    rec["failed_clause"] = cv->failed_clause;
    rec["final_clause_holds"] = cv->final_clause_holds;
  }
  out.record(rec);
  if (code == kOk && ((dv && dv->status == Verdict::Unknown) || (cv && cv->verdict.status == Verdict::Unknown))) {
    code = kUnknown;
  }
  return code;
}

int cmd_gp_list(const Globals& g, const std::string& tri, std::size_t max_dim, std::size_t bound, bool modules) {
  Out out{g.json};
  TriangularPtr t = load_triangular(tri, g.parsed_field());
  GPListing list = enumerate_indec_gp(t, max_dim, bound);
  out.text("indecomposable GP modules, total dimension <= " + std::to_string(max_dim) + ", field " +
           t->field().name());
  for (const auto& m : list.modules) {
    const bool proj = is_projective(m);
    out.text("  " + m.dims_string() + "  projective: " + yes_no(proj));
    if (modules) out.text(format_module(m));
    json rec{{"type", "gp-class"}, {"dims", m.dims()}, {"projective", proj}};
    if (modules) rec["module"] = format_module(m);
    out.record(rec);
  }
  out.text("count: " + std::to_string(list.modules.size()));
  out.text("method: " + list.method + (list.certified ? " (certified)" : " (bounded search)"));
  if (!list.note.empty()) out.text("note: " + list.note);
  out.record({{"type", "gp-list"},
              {"count", list.modules.size()},
              {"method", list.method},
              {"certified", list.certified},
              {"max_total_dim", max_dim},
              {"note", list.note}});
  return kOk;
}

int cmd_resolve(const Globals& g, const std::string& alg, const std::string& mod, int window, std::size_t bound) {
  Out out{g.json};
  AlgebraPtr a = load_algebra(alg, g.parsed_field());
  Module m = load_module(mod, a);
  GPVerdict v = is_gp(m, bound);
  if (v.status != Verdict::Yes) {
    out.text("not Gorenstein projective: " + v.describe());
    out.record({{"type", "resolve"}, {"module", m.dims()}, {"gp", verdict_word(v.status)}});
    return v.status == Verdict::No ? kHypothesis : kUnknown;
  }
  ComplexWindow c = complete_resolution(m, window, bound);
  const bool exact = c.exact_interior();
  const bool hom_exact = is_hom_proj_exact(c);
  const bool proj = is_projective(m);
  out.text("complete resolution of " + m.dims_string() + ", degrees " + std::to_string(c.lo) + ".." +
           std::to_string(c.hi));
  for (int i = c.lo; i <= c.hi; ++i) out.text("  [" + std::to_string(i) + "] " + c.term(i).dims_string());
  out.text("exact: " + yes_no(exact));
  out.text("Hom(-, proj) exact: " + yes_no(hom_exact));
  if (proj) out.text("split: yes (the module is projective)");
  json terms = json::array();
  for (int i = c.lo; i <= c.hi; ++i) terms.push_back(c.term(i).dims());
  out.record({{"type", "resolve"},
              {"module", m.dims()},
              {"gp", "yes"},
              {"lo", c.lo},
              {"hi", c.hi},
              {"terms", terms},
              {"exact", exact},
              {"hom_proj_exact", hom_exact},
              {"projective", proj}});
  return exact && hom_exact ? kOk : kMismatch;
}

int cmd_perfect(const Globals& g, const std::string& tri, std::size_t bound, std::size_t max_degree,
                std::size_t sample_dim) {
  Out out{g.json};
  TriangularPtr t = load_triangular(tri, g.parsed_field());
  auto samples = indecomposable_gp(t->lambda(), sample_dim, bound);
  PerfectReport r = check_perfect(*t, bound, samples, max_degree);
  out.text(r.describe());
  out.record({{"type", "perfect"},
              {"perfect", r.perfect()},
              {"p1", to_string(r.p1)},
              {"p2", to_string(r.p2)},
              {"pd_right", opt_json(r.pd_right)},
              {"pd_left", opt_json(r.pd_left)},
              {"samples", r.samples},
              {"ext_values_checked", r.ext_values_checked},
              {"nonzero_ext", r.nonzero_ext},
              {"max_degree", r.max_degree},
              {"witness", r.witness}});
  return r.perfect() ? kOk : kHypothesis;
}

int cmd_recollement(const Globals& g, const std::string& tri, bool full, std::size_t samples, std::uint64_t seed,
                    std::size_t max_dim, std::size_t bound) {
  Out out{g.json};
  TriangularPtr t = load_triangular(tri, g.parsed_field());
  if (full) {
    FullHypotheses h = check_hypotheses_full(*t, bound);
    out.text(h.describe());
    out.record({{"type", "hypotheses"},
                {"holds", h.holds()},
                {"lambda_gorenstein", verdict_word(h.lambda_gorenstein)},
                {"f_preserves_projectives", h.f_preserves_projectives},
                {"gp_samples", h.gp_samples},
                {"gp_failures", h.gp_failures},
                {"witness", h.witness}});
    if (!h.holds()) {
      out.text("hypotheses fail: " + h.witness);
      return kHypothesis;
    }
  }
  GPListing list = enumerate_indec_gp(t, max_dim, bound);
  RecollementReport r = full ? verify_full_recollement(t, list.modules, bound)
                             : verify_left_recollement(t, list.modules, bound);
  out.text(r.describe());
  out.record({{"type", "recollement"},
              {"full", r.full},
              {"passed", r.passed()},
              {"t_objects", r.t_objects},
              {"lambda_objects", r.lambda_objects},
              {"gamma_objects", r.gamma_objects},
              {"fully_faithful_pairs", r.fully_faithful_pairs},
              {"kernel_members", r.kernel_members},
              {"decompositions", r.decompositions},
              {"adjunction_pairs", r.adjunction_pairs},
              {"functorial_pairs", r.functorial_pairs},
              {"independence_checks", r.independence_checks},
              {"image_witnesses", r.image_witnesses},
              {"failures", r.failures}});
  bool ok = r.passed();
  std::vector<AdjointPair> pairs{AdjointPair::IUpperILower, AdjointPair::JShriekJUpper};
  if (full) pairs = {AdjointPair::IUpperILower, AdjointPair::ILowerIShriek, AdjointPair::JShriekJUpper,
                     AdjointPair::JUpperJLower};
  for (auto p : pairs) {
    AdjunctionReport a = verify_adjunction(p, *t, samples, seed);
    out.text("adjunction " + a.describe());
    out.record({{"type", "adjunction"},
                {"pair", to_string(p)},
                {"samples", a.samples.size()},
                {"failures", a.failures()}});
    ok = ok && a.passed();
  }
  return ok ? kOk : kMismatch;
}

int cmd_horseshoe(const Globals& g, const std::string& alg, const std::string& direction, std::size_t instances,
                  std::size_t length, std::uint64_t seed, std::size_t max_total) {
  Out out{g.json};
  AlgebraPtr a = load_algebra(alg, g.parsed_field());
  std::mt19937_64 rng(seed);
  bool ok = true;
  for (const std::string dir : {"right", "left"}) {
    if (direction != "both" && direction != dir) continue;
    std::size_t exact_cols = 0, agree = 0, complexes = 0, commuting = 0;
    for (std::size_t k = 0; k < instances; ++k) {
      const bool exact = k % 2 == 0;
      HorseshoeInstance inst = dir == "right" ? random_right_instance(a, length, exact, rng, max_total)
                                              : random_left_instance(a, length, exact, rng, max_total);
      HorseshoeResult r = dir == "right" ? horseshoe_glue_right(inst.ses, inst.y_side, inst.z_side)
                                         : horseshoe_glue_left(inst.ses, inst.y_side, inst.z_side);
      exact_cols += r.side_exact ? 1 : 0;
      agree += r.equivalence_holds() ? 1 : 0;
      complexes += r.is_complex ? 1 : 0;
      commuting += r.squares_commute ? 1 : 0;
    }
    const bool pass = agree == instances && complexes == instances && commuting == instances;
    ok = ok && pass;
    out.text(dir + " gluing: " + std::to_string(instances) + " instances, " + std::to_string(exact_cols) +
             " with exact side column; complex " + std::to_string(complexes) + ", commuting " +
             std::to_string(commuting) + ", exactness equivalence " + std::to_string(agree) + " -> " +
             (pass ? "pass" : "FAIL"));
    out.record({{"type", "horseshoe"},
                {"direction", dir},
                {"instances", instances},
                {"exact_side", exact_cols},
                {"complex", complexes},
                {"commuting", commuting},
                {"equivalence", agree},
                {"passed", pass}});
  }
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gorenstein projective modules over bound quiver algebras and triangular matrix algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "JSON-lines output");
  app.add_option("--field", g.field, "ground field override: F_p, GF(p), p or Q");

  std::size_t bound = kDefaultBound;
  std::string alg_path, tri_path, mod_path;

  auto* info = app.add_subcommand("algebra-info", "dimension, projectives, injectives, Gorenstein verdict");
  info->add_option("algebra", alg_path)->required();
  info->add_option("--bound", bound);

  std::string route = "both";
  bool direct = false, via = false;
  auto* check = app.add_subcommand("gp-check", "decide whether a T-module is Gorenstein projective");
  check->add_option("triangular", tri_path)->required();
  check->add_option("module", mod_path)->required();
  check->add_option("--bound", bound);
  check->add_flag("--direct", direct, "only the direct test over T");
  check->add_flag("--via-components", via, "only the componentwise test");
  check->add_flag("--both", "both routes and compare (default)");

  std::size_t max_dim = 6;
  bool emit = false;
  auto* list = app.add_subcommand("gp-list", "indecomposable Gorenstein projective T-modules");
  list->add_option("triangular", tri_path)->required();
  list->add_option("--max-dim", max_dim);
  list->add_option("--bound", bound);
  list->add_flag("--modules", emit, "print the module data of every class");

  int window = 3;
  auto* resolve = app.add_subcommand("resolve", "complete projective resolution window");
  resolve->add_option("algebra", alg_path)->required();
  resolve->add_option("module", mod_path)->required();
  resolve->add_option("--window", window);
  resolve->add_option("--bound", bound);

  std::size_t max_degree = 10, sample_dim = 6;
  auto* perfect = app.add_subcommand("perfect", "perfectness of the tensor functor");
  perfect->add_option("triangular", tri_path)->required();
  perfect->add_option("--bound", bound);
  perfect->add_option("--max-degree", max_degree);
  perfect->add_option("--sample-dim", sample_dim);

  bool full = false;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  auto* rec = app.add_subcommand("recollement", "stable recollement checks");
  rec->add_option("triangular", tri_path)->required();
  rec->add_flag("--full", full);
  rec->add_option("--samples", samples);
  rec->add_option("--seed", seed);
  rec->add_option("--max-dim", max_dim);
  rec->add_option("--bound", bound);

  std::string direction = "both";
  std::size_t instances = 50, length = 3, max_total = 6;
  auto* horse = app.add_subcommand("horseshoe", "glue random resolutions along short exact sequences");
  horse->add_option("algebra", alg_path)->required();
  horse->add_option("--direction", direction)->check(CLI::IsMember({"right", "left", "both"}));
  horse->add_option("--instances", instances);
  horse->add_option("--length", length);
  horse->add_option("--seed", seed);
  horse->add_option("--max-total", max_total);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }
  if (direct && via) {
    std::cerr << "error: --direct and --via-components exclude each other; use --both\n";
    return kInput;
  }
  if (direct) route = "direct";
  if (via) route = "via-components";

  try {
    if (*info) return cmd_algebra_info(g, alg_path, bound);
    if (*check) return cmd_gp_check(g, tri_path, mod_path, bound, route);
    if (*list) return cmd_gp_list(g, tri_path, max_dim, bound, emit);
    if (*resolve) return cmd_resolve(g, alg_path, mod_path, window, bound);
    if (*perfect) return cmd_perfect(g, tri_path, bound, max_degree, sample_dim);
    if (*rec) return cmd_recollement(g, tri_path, full, samples, seed, max_dim, bound);
    if (*horse) return cmd_horseshoe(g, alg_path, direction, instances, length, seed, max_total);
  } catch (const HypothesisFailed& e) {
    std::cerr << "hypothesis failed: " << e.what() << "\n";
    return kHypothesis;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const Inconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kUnknown;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const InfiniteDimensional& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInput;
}
