#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gproj/comma.hpp"
#include "gproj/enumerate.hpp"
#include "gproj/errors.hpp"
#include "gproj/homology.hpp"
#include "gproj/horseshoe.hpp"
#include "gproj/io.hpp"
#include "gproj/recollement.hpp"

using namespace gproj;
using Dims = std::vector<std::size_t>;

namespace {

constexpr double kListSeconds = 60.0;
constexpr double kOracleSeconds = 600.0;
constexpr std::size_t kOracleSamples = 200;
constexpr std::size_t kOracleMaxDim = 8;
constexpr std::size_t kHorseshoePerAlgebra = 25;
constexpr std::size_t kExtDegree = 10;
constexpr std::size_t kAdjunctionSamples = 100;
constexpr std::size_t kTransferSamples = 50;
constexpr std::size_t kListDim = 6;

std::string fixture(const std::string& name) { return std::string(GPROJ_FIXTURE_DIR) + "/" + name; }

const std::set<Dims> kLoopList{{1, 0, 0, 0}, {2, 0, 0, 0}, {3, 0, 0, 0}, {3, 1, 0, 0}, {3, 1, 0, 1}, {3, 1, 1, 0}};
const std::set<Dims> kCycleList{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {1, 1, 0, 0, 0},
                                {1, 0, 1, 0, 0}, {0, 1, 1, 0, 0}, {0, 1, 1, 1, 0}, {0, 1, 1, 1, 1}};

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::set<Dims> dim_set(const std::vector<Module>& ms) {
  std::set<Dims> out;
  for (const auto& m : ms) out.insert(m.dims());
  return out;
}

TriangularPtr loop_example(std::optional<Field> f = std::nullopt) {
  return load_triangular(fixture("loop_cubed_over_sink.tri"), f);
}
TriangularPtr cycle_example(std::optional<Field> f = std::nullopt) {
  return load_triangular(fixture("cycle_over_arrow.tri"), f);
}

Outcome check_listing(const TriangularPtr& t, const std::set<Dims>& expected, std::ostringstream& os) {
  auto t0 = std::chrono::steady_clock::now();
  GPListing g = enumerate_indec_gp(t, kListDim);
  const double s = seconds_since(t0);
  bool ok = g.modules.size() == expected.size() && dim_set(g.modules) == expected;
  std::size_t indec = 0;
  for (const auto& m : g.modules) indec += is_indecomposable(m) ? 1 : 0;
  ok = ok && indec == g.modules.size() && s < kListSeconds;
  os << t->field().name() << ": " << g.modules.size() << " classes, " << indec << " indecomposable, " << g.method
     << ", " << s << " s; ";
  return {ok, ""};
}

Outcome criterion_loop_list() {
  std::ostringstream os;
  bool ok = true;
  for (Field f : {Field::prime(2), Field::prime(3)}) ok = check_listing(loop_example(f), kLoopList, os).pass && ok;
  return {ok, os.str()};
}

Outcome criterion_cycle_list() {
  std::ostringstream os;
  bool ok = check_listing(cycle_example(), kCycleList, os).pass;
  return {ok, os.str()};
}

Outcome criterion_oracle() {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t total = 0, mismatches = 0, yes = 0, final_clause = 0;
  std::mt19937_64 rng(2024);
  for (auto t : {loop_example(), cycle_example()}) {
    ComponentContext ctx = make_context(t);
    GorensteinInfo info = is_gorenstein_algebra(t->t());
    for (std::size_t k = 0; k < kOracleSamples; ++k) {
      Module m = random_module(t->t(), random_dim_vector(t->t(), kOracleMaxDim, rng), rng);
      ComponentVerdict via = gp_via_components(ctx, m);
      GPVerdict direct = is_gp(m, info);
      ++total;
      if (via.verdict.status != direct.status || direct.status == Verdict::Unknown) ++mismatches;
      if (direct.status == Verdict::Yes) ++yes;
      if (!via.final_clause_holds) ++final_clause;
    }
  }
  const double s = seconds_since(t0);
  std::ostringstream os;
  os << total << " modules, " << mismatches << " mismatches, " << yes << " GP, final clause failures " << final_clause
     << ", " << s << " s";
  return {mismatches == 0 && final_clause == 0 && s < kOracleSeconds, os.str()};
}

Outcome criterion_projectives() {
  std::ostringstream os;
  bool ok = true;
  for (auto t : {loop_example(), cycle_example()}) {
    auto expected = comma_projectives(*t);
    const std::size_t n = t->t()->num_vertices();
    std::vector<int> hits(expected.size(), 0);
    bool bijective = expected.size() == n;
    for (std::size_t v = 0; v < n && bijective; ++v) {
      Module p = indec_projective(t->t(), v);
      int found = 0;
      for (std::size_t k = 0; k < expected.size(); ++k) {
        if (p.dims() == expected[k].dims() && isomorphic_indecomposables(p, expected[k])) {
          ++found;
          ++hits[k];
        }
      }
      bijective = found == 1;
    }
    for (int h : hits) bijective = bijective && h == 1;
    os << n << " projectives " << (bijective ? "matched" : "NOT matched") << "; ";
    ok = ok && bijective;
  }
  return {ok, os.str()};
}

Outcome criterion_horseshoe() {
  std::vector<AlgebraPtr> algebras{load_algebra(fixture("loop_cubed.alg")), load_algebra(fixture("two_arrow_sink.alg")),
                                   load_algebra(fixture("cyclic_rad_square_zero.alg")), cycle_example()->t()};
  std::mt19937_64 rng(77);
  std::ostringstream os;
  bool ok = true;
  for (const std::string dir : {"right", "left"}) {
    std::size_t n = 0, fails = 0, exact = 0;
    for (const auto& a : algebras) {
      for (std::size_t k = 0; k < kHorseshoePerAlgebra; ++k) {
        const bool want = k % 2 == 0;
        ++n;
        try {
          HorseshoeInstance inst = dir == "right" ? random_right_instance(a, 3, want, rng)
                                                  : random_left_instance(a, 3, want, rng);
          HorseshoeResult r = dir == "right" ? horseshoe_glue_right(inst.ses, inst.y_side, inst.z_side)
                                             : horseshoe_glue_left(inst.ses, inst.y_side, inst.z_side);
          exact += r.side_exact ? 1 : 0;
          if (!r.is_complex || !r.squares_commute || !r.equivalence_holds() || r.side_exact != want) ++fails;
        } catch (const Error&) {
          ++fails;
        }
      }
    }
    os << dir << ": " << n << " instances (" << exact << " exact), " << fails << " failures; ";
    ok = ok && fails == 0 && n >= 50;
  }
  return {ok, os.str()};
}

std::vector<Module> listed(const TriangularPtr& t) { return enumerate_indec_gp(t, kListDim).modules; }

Outcome criterion_complete_resolutions() {
  std::size_t n = 0, good = 0;
  for (auto t : {loop_example(), cycle_example()}) {
    for (const auto& m : listed(t)) {
      ++n;
      ComplexWindow c = complete_resolution(m, 4);
      if (c.is_complex() && c.exact_interior() && is_hom_proj_exact(c)) ++good;
    }
  }
  std::ostringstream os;
  os << n << " modules, " << good << " with exact and Hom(-, proj)-exact windows at w = 4";
  return {n == 14 && good == n, os.str()};
}

Outcome criterion_perfect() {
  std::ostringstream os;
  bool ok = true;
  for (auto t : {loop_example(), cycle_example()}) {
    std::vector<Module> samples = indecomposable_gp(t->lambda(), kListDim);
    for (const auto& c : listed(t)) {
      Module x = apply_functor(FunctorTag::IUpper, *t, c);
      if (!x.is_zero()) samples.push_back(x);
    }
    PerfectReport r = check_perfect(*t, kDefaultBound, samples, kExtDegree);
    const bool good = r.p1 == Certification::Certified && r.pd_right && *r.pd_right <= 1 &&
                      r.p2 == Certification::Certified && r.pd_left == 0u && r.nonzero_ext == 0 &&
                      r.max_degree == kExtDegree;
    os << "pd M_Gamma = " << (r.pd_right ? std::to_string(*r.pd_right) : "inf") << ", pd _Lambda M = "
       << (r.pd_left ? std::to_string(*r.pd_left) : "inf") << ", " << r.ext_values_checked << " Ext values, "
       << r.nonzero_ext << " nonzero; ";
    ok = ok && good;
  }
  return {ok, os.str()};
}

Outcome criterion_left_recollement() {
  std::ostringstream os;
  bool ok = true;
  for (auto t : {loop_example(), cycle_example()}) {
    RecollementReport r = verify_left_recollement(t, listed(t));
    std::size_t adj_fail = 0;
    for (auto p : {AdjointPair::IUpperILower, AdjointPair::JShriekJUpper}) {
      AdjunctionReport a = verify_adjunction(p, *t, kAdjunctionSamples, 1);
      adj_fail += a.failures() + (a.samples.size() == kAdjunctionSamples ? 0 : 1);
    }
    os << r.fully_faithful_pairs << " fully faithful pairs, " << r.decompositions << "/" << r.kernel_members
       << " splittings, " << r.adjunction_pairs << " stable adjunction pairs, " << adj_fail << " adjunction failures, "
       << r.failures.size() << " failures; ";
    ok = ok && r.passed() && adj_fail == 0 && r.decompositions == r.kernel_members;
  }
  return {ok, os.str()};
}

Outcome criterion_full_recollement() {
  std::ostringstream os;
  bool ok = true;
  for (auto t : {loop_example(), cycle_example()}) {
    FullHypotheses h = check_hypotheses_full(*t);
    if (!h.holds()) {
      os << "hypotheses fail: " << h.witness << "; ";
      ok = false;
      continue;
    }
    RecollementReport r = verify_full_recollement(t, listed(t));
    std::size_t adj_fail = 0;
    for (auto p : {AdjointPair::ILowerIShriek, AdjointPair::JUpperJLower}) {
      adj_fail += verify_adjunction(p, *t, kAdjunctionSamples, 2).failures();
    }
    os << "hypotheses hold, " << r.independence_checks << " independence checks, " << r.image_witnesses
       << " image witnesses, " << r.failures.size() << " failures, " << adj_fail << " adjunction failures; ";
    ok = ok && r.passed() && r.independence_checks > 0 && adj_fail == 0;
  }
  return {ok, os.str()};
}

Outcome criterion_cm_free_and_transfer() {
  std::ostringstream os;
  bool ok = true;

  auto h = load_triangular(fixture("hereditary_pair.tri"));
  CMFreeReport rh = is_cm_free(h->t(), kListDim);
  GorensteinInfo hinfo = is_gorenstein_algebra(h->t());
  std::size_t searched = 0, non_projective_gp = 0;
  for (const auto& m : indecomposable_classes(h->t(), kListDim)) {
    ++searched;
    if (!is_projective(m) && is_gp(m, hinfo).status != Verdict::No) ++non_projective_gp;
  }
  os << "hereditary triangular: cm-free " << (rh.cm_free ? "yes" : "no") << ", gl.dim "
     << (rh.global_dimension ? std::to_string(*rh.global_dimension) : "inf") << ", " << searched
     << " indecomposables searched, " << non_projective_gp << " non-projective GP; ";
  ok = ok && rh.cm_free && rh.certified_all_dimensions && searched > 0 && non_projective_gp == 0;

  auto loop = load_algebra(fixture("loop_cubed.alg"));
  CMFreeReport rl = is_cm_free(loop, kListDim);
  const bool witness_simple =
      rl.witness && rl.witness->total_dim() == 1 && is_isomorphic(*rl.witness, simple_module(loop, 0));
  os << "k[x]/x^3: cm-free " << (rl.cm_free ? "yes" : "no") << ", witness " << (rl.witness ? rl.witness->dims_string() : "-")
     << "; ";
  ok = ok && !rl.cm_free && witness_simple;

  std::mt19937_64 rng(99);
  for (auto t : {loop_example(), cycle_example()}) {
    std::size_t n = 0, consistent = 0, finite = 0;
    for (std::size_t k = 0; k < kTransferSamples; ++k) {
      Module m;
      if (k % 2 == 0) {
        m = random_module(t->t(), random_dim_vector(t->t(), 6, rng), rng);
      } else {
        std::vector<Module> parts;
        const std::size_t count = 1 + rng() % 2;
        for (std::size_t j = 0; j < count; ++j) parts.push_back(indec_projective(t->t(), rng() % t->t()->num_vertices()));
        if (k % 4 == 3) {
          Module y = random_module(t->gamma(), random_dim_vector(t->gamma(), 3, rng), rng);
          parts.push_back(extend_from_gamma(*t, y));
        }
        m = direct_sum(parts).sum;
      }
      PdTransferReport r = finite_pd_transfer(*t, split(*t, m));
      ++n;
      if (r.hypothesis_holds && r.consistent) ++consistent;
      if (r.pd_t) ++finite;
    }
    os << n << " comma objects, " << consistent << " consistent, " << finite << " of finite pd; ";
    ok = ok && consistent == n && finite > 0 && finite < n;
  }
  return {ok, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"loop-over-sink GP list over F_2 and F_3", criterion_loop_list},
      {"cycle-over-arrow GP list", criterion_cycle_list},
      {"componentwise and direct GP verdicts agree", criterion_oracle},
      {"indecomposable projectives of T match the comma description", criterion_projectives},
      {"horseshoe gluing in both directions", criterion_horseshoe},
      {"complete resolutions of the listed GP modules", criterion_complete_resolutions},
      {"perfectness certificates and sampled Ext vanishing", criterion_perfect},
      {"left recollement on the stable categories", criterion_left_recollement},
      {"full recollement hypotheses and checks", criterion_full_recollement},
      {"CM-freeness and finite projective dimension transfer", criterion_cm_free_and_transfer},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " | " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
