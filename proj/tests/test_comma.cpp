#include <doctest.h>

#include <random>

#include "gproj/comma.hpp"
#include "gproj/enumerate.hpp"
#include "gproj/errors.hpp"
#include "gproj/free_module.hpp"
#include "support.hpp"

using namespace gproj;
using namespace support;

namespace {

/// F y computed as the Lambda-part of the cokernel of the T-projective presentation
/// induced from a Gamma-presentation of y.
Module induced_F(const TriangularAlgebra& t, const Module& y) {
  ProjectiveCover c0 = projective_cover(y);
  KernelResult k = kernel(c0.cover);
  ProjectiveCover c1 = projective_cover(k.module);
  ModMorphism d = k.inclusion * c1.cover;
  std::vector<std::size_t> g0, g1;
  for (auto v : c0.free.generators) g0.push_back(t.gamma_to_t(v));
  for (auto v : c1.free.generators) g1.push_back(t.gamma_to_t(v));
  FreeModule t0 = FreeModule::make(t.t(), g0);
  FreeModule t1 = FreeModule::make(t.t(), g1);
  std::vector<Mat> images;
  for (auto v : g1) images.emplace_back(t.field(), t0.module.dim(v), 1);
  for (const auto& c : free_coefficients(c1.free, c0.free, d)) {
    const std::size_t pos = t0.position(c.j, t.t_path_of_gamma(c.path));
    images[c.g].set(pos, 0, images[c.g].at(pos, 0) + c.value);
  }
  Module coker = cokernel(morphism_from_free(t1, t0.module, images)).module;
  return restrict_to_lambda(t, coker);
}

Module t_module(const TriangularAlgebra& t, const std::vector<std::size_t>& dims, std::mt19937_64& rng) {
  return random_module(t.t(), dims, rng);
}

std::vector<std::vector<std::size_t>> dim_vectors(const std::vector<Module>& ms) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& m : ms) out.push_back(m.dims());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("comma") {
  TEST_CASE("triangular data of the loop example") {
    auto t = loop_over_sink();
    CHECK(t->bimodule_basis().size() == 9);
    CHECK(t->lambda()->dim() == 3);
    CHECK(t->gamma()->dim() == 5);
    Module m = t->bimodule_left();
    CHECK(m.total_dim() == 9);
    Module free3 = direct_sum(t->lambda(), {regular_module(t->lambda()), regular_module(t->lambda()),
                                            regular_module(t->lambda())}).sum;
    CHECK(is_isomorphic(m, free3));
    CHECK(t->t()->quiver().vertex_names() == std::vector<std::string>{"1", "2", "3", "4"});
  }

  TEST_CASE("triangular data of the cycle example") {
    auto t = cycle_over_arrow();
    Module left = t->bimodule_left();
    Module p2 = indec_projective(t->lambda(), 1);
    CHECK(is_isomorphic(left, direct_sum({p2, p2}).sum));
    Module right = t->bimodule_right();
    AlgebraPtr op = right.algebra();
    Module q = indec_projective(op, 0);
    CHECK(is_isomorphic(right, direct_sum({q, q}).sum));
  }

  TEST_CASE("degenerate and invalid triangular data") {
    auto t = TriangularAlgebra::from_parts(truncated_loop(2), two_arrow_sink(), {}, {});
    CHECK(t->bimodule_basis().empty());
    CHECK(t->bimodule_left().is_zero());
    CHECK_THROWS_AS(TriangularAlgebra::from_parts(truncated_loop(2), two_arrow_sink(), {{"c", "1", "2"}}, {}),
                    InvalidInput);
    auto q = make_algebra({"1", "2"}, {{"a", {"1", "2"}}}, {});
    CHECK_THROWS_AS(TriangularAlgebra::from_algebra(q, {0}), InvalidInput);
    CHECK_NOTHROW(TriangularAlgebra::from_algebra(q, {1}));
  }

  TEST_CASE("tensor functor values") {
    auto t = loop_over_sink();
    CHECK(apply_F(*t, Module::zero(t->gamma())).is_zero());
    CHECK(apply_F(*t, indec_projective(t->gamma(), 2)).total_dim() == 3);
    CHECK(apply_F(*t, simple_module(t->gamma(), 1)).is_zero());
    CHECK(apply_F(*t, simple_module(t->gamma(), 0)).total_dim() == 3);
    auto c = cycle_over_arrow();
    CHECK(apply_F(*c, simple_module(c->gamma(), 1)).is_zero());
    CHECK(apply_F(*c, indec_projective(c->gamma(), 1)).dims() == dv({0, 1, 1}));
  }

  TEST_CASE("tensor functor agrees with induced presentations") {
    std::mt19937_64 rng(31);
    for (auto t : {loop_over_sink(), cycle_over_arrow(), loop_over_sink(Field::prime(3))}) {
      for (int i = 0; i < 15; ++i) {
        Module y = random_module(t->gamma(), random_dim_vector(t->gamma(), 5, rng), rng);
        Module fy = apply_F(*t, y);
        Module oracle = induced_F(*t, y);
        REQUIRE(fy.dims() == oracle.dims());
        CHECK(is_isomorphic(fy, oracle));
      }
    }
  }

  TEST_CASE("functor laws and right exactness") {
    std::mt19937_64 rng(7);
    for (auto t : {loop_over_sink(), cycle_over_arrow()}) {
      const AlgebraPtr& g = t->gamma();
      for (int i = 0; i < 10; ++i) {
        Module a = random_module(g, random_dim_vector(g, 4, rng), rng);
        Module b = random_module(g, random_dim_vector(g, 4, rng), rng);
        Module c = random_module(g, random_dim_vector(g, 4, rng), rng);
        CHECK(apply_F_mor(*t, ModMorphism::identity(a)) == ModMorphism::identity(apply_F(*t, a)));
        HomSpace ab = hom_space(a, b);
        HomSpace bc = hom_space(b, c);
        if (ab.dim() > 0 && bc.dim() > 0) {
          ModMorphism f = ab.basis[rng() % ab.dim()];
          ModMorphism h = bc.basis[rng() % bc.dim()];
          CHECK(apply_F_mor(*t, h * f) == apply_F_mor(*t, h) * apply_F_mor(*t, f));
          CHECK(apply_F_mor(*t, h * f).is_valid());
        }
        Module fs = apply_F(*t, direct_sum({a, b}).sum);
        CHECK(is_isomorphic(fs, direct_sum({apply_F(*t, a), apply_F(*t, b)}).sum));
        ProjectiveCover pc = projective_cover(a);
        CHECK(apply_F_mor(*t, pc.cover).is_surjective());
      }
    }
  }

  TEST_CASE("split and merge are inverse") {
    std::mt19937_64 rng(12);
    for (auto t : {loop_over_sink(), cycle_over_arrow()}) {
      for (int i = 0; i < 25; ++i) {
        Module m = t_module(*t, random_dim_vector(t->t(), 7, rng), rng);
        CommaObject c = split(*t, m);
        CHECK(c.phi.is_valid());
        Module back = merge(*t, c);
        CHECK(validate(back).ok);
        CHECK(back.maps() == m.maps());
        CommaObject again = split(*t, back);
        CHECK(again.phi == c.phi);
      }
    }
  }

  TEST_CASE("splitting an indecomposable projective") {
    auto t = cycle_over_arrow();
    Module p4 = indec_projective(t->t(), 3);
    CHECK(p4.dims() == dv({0, 1, 1, 1, 0}));
    CommaObject c = split(*t, p4);
    CHECK(is_isomorphic(c.y, indec_projective(t->gamma(), 0)));
    CHECK(c.phi.is_iso());
    Module lam = extend_from_lambda(*t, simple_module(t->lambda(), 0));
    CHECK(split(*t, lam).y.is_zero());
  }

  TEST_CASE("projective recognition and the shape of projectives") {
    for (auto t : {loop_over_sink(), cycle_over_arrow()}) {
      for (std::size_t v = 0; v < t->t()->num_vertices(); ++v) {
        ProjectiveShape s = is_projective_T(*t, indec_projective(t->t(), v));
        CHECK(s.projective);
        CHECK(s.shape_matches);
        CHECK(s.gamma_summands.size() + s.lambda_summands.size() == 1);
      }
      // Each indecomposable projective matches exactly one module of the expected list.
      auto expected = comma_projectives(*t);
      REQUIRE(expected.size() == t->t()->num_vertices());
      std::vector<int> used(expected.size(), 0);
      for (std::size_t v = 0; v < t->t()->num_vertices(); ++v) {
        Module p = indec_projective(t->t(), v);
        int hits = 0;
        for (std::size_t k = 0; k < expected.size(); ++k) {
          if (expected[k].dims() == p.dims() && isomorphic_indecomposables(p, expected[k])) {
            ++hits;
            ++used[k];
          }
        }
        CHECK(hits == 1);
      }
      for (int u : used) CHECK(u == 1);
    }
    auto t = cycle_over_arrow();
    ProjectiveShape s = is_projective_T(*t, indec_projective(t->t(), 3));
    CHECK(s.gamma_summands == std::vector<std::size_t>{0});
    auto l = loop_over_sink();
    Module two = extend_from_lambda(*l, enumerate_modules(l->lambda(), {2}).front());
    CHECK_FALSE(is_projective_T(*l, two).projective);
    CHECK_FALSE(is_projective_T(*l, two).shape_matches);
  }

  TEST_CASE("component verdict examples") {
    auto l = loop_over_sink();
    auto ctx = make_context(l);
    CHECK(gp_via_components(ctx, extend_from_lambda(*l, regular_module(l->lambda()))).verdict.status == Verdict::Yes);
    Module p2 = indec_projective(l->t(), 1);
    CHECK(p2.dims() == dv({3, 1, 0, 0}));
    auto v = gp_via_components(ctx, p2);
    CHECK(v.verdict.status == Verdict::Yes);
    CHECK(v.final_clause_holds);
    auto c = cycle_over_arrow();
    auto cctx = make_context(c);
    CommaObject bad{indec_projective(c->gamma(), 0), Module::zero(c->lambda()), {}};
    bad.phi = ModMorphism::zero(apply_F(*c, bad.y), bad.x);
    auto bv = gp_via_components(cctx, bad);
    CHECK(bv.verdict.status == Verdict::No);
    CHECK(bv.failed_clause == 1);
    CHECK(bv.describe().find("phi") != std::string::npos);
    // F S(5) = 0, so only the Gamma clause can fail.
    CommaObject s5{simple_module(c->gamma(), 1), Module::zero(c->lambda()), {}};
    s5.phi = ModMorphism::zero(apply_F(*c, s5.y), s5.x);
    auto sv = gp_via_components(cctx, s5);
    CHECK(sv.verdict.status == Verdict::No);
    CHECK(sv.failed_clause == 3);
  }

  TEST_CASE("component route agrees with the direct route") {
    std::mt19937_64 rng(77);
    for (auto t : {loop_over_sink(), cycle_over_arrow()}) {
      auto ctx = make_context(t);
      auto tinfo = is_gorenstein_algebra(t->t());
      REQUIRE(tinfo.status == Verdict::Yes);
      int yes = 0;
      for (int i = 0; i < 60; ++i) {
        Module m = t_module(*t, random_dim_vector(t->t(), 7, rng), rng);
        auto via = gp_via_components(ctx, m);
        auto direct = is_gp(m, tinfo);
        CHECK(via.verdict.status == direct.status);
        CHECK(via.final_clause_holds);
        if (direct.status == Verdict::Yes) ++yes;
      }
      CHECK(yes > 0);
    }
  }

  TEST_CASE("perfectness") {
    auto l = loop_over_sink();
    PerfectReport r = check_perfect(*l);
    CHECK(r.p1 == Certification::Certified);
    CHECK(r.p2 == Certification::Certified);
    REQUIRE(r.pd_right);
    CHECK(*r.pd_right <= 1);
    CHECK(r.pd_left == 0u);
    CHECK(r.perfect());
    auto c = cycle_over_arrow();
    PerfectReport rc = check_perfect(*c, kDefaultBound, indecomposable_gp(c->lambda(), 3), 6);
    CHECK(rc.pd_right == 0u);
    CHECK(rc.pd_left == 0u);
    CHECK(rc.perfect());
    CHECK(rc.samples == 6);
    CHECK(rc.nonzero_ext == 0);
    auto z = TriangularAlgebra::from_parts(truncated_loop(2), two_arrow_sink(), {}, {});
    CHECK(check_perfect(*z).perfect());
  }

  TEST_CASE("finite projective dimension transfer") {
    auto c = cycle_over_arrow();
    auto proj = finite_pd_transfer(*c, split(*c, indec_projective(c->t(), 4)));
    CHECK(proj.hypothesis_holds);
    CHECK(proj.pd_t == 0u);
    CHECK(proj.pd_gamma == 0u);
    CHECK(proj.pd_lambda == 0u);
    CommaObject s5{simple_module(c->gamma(), 1), Module::zero(c->lambda()), {}};
    s5.phi = ModMorphism::zero(apply_F(*c, s5.y), s5.x);
    auto r5 = finite_pd_transfer(*c, s5);
    CHECK(r5.pd_t.has_value());
    CHECK(r5.pd_gamma.has_value());
    CHECK(r5.pd_lambda.has_value());
    CHECK(r5.consistent);
    auto l = loop_over_sink();
    auto rl = finite_pd_transfer(*l, comma_lambda_part(*l, simple_module(l->lambda(), 0)), 8);
    CHECK_FALSE(rl.pd_t.has_value());
    CHECK_FALSE(rl.pd_lambda.has_value());
    CHECK(rl.consistent);
  }

  TEST_CASE("enumeration of the loop example") {
    for (Field f : {Field::prime(2), Field::prime(3)}) {
      auto t = loop_over_sink(f);
      GPListing g = enumerate_indec_gp(t, 6);
      CHECK(g.method == "gamma-cm-free");
      CHECK(g.certified);
      CHECK(dim_vectors(g.modules) == std::vector<std::vector<std::size_t>>{
                                          {1, 0, 0, 0}, {2, 0, 0, 0}, {3, 0, 0, 0}, {3, 1, 0, 0}, {3, 1, 0, 1}, {3, 1, 1, 0}});
      for (const auto& m : g.modules) CHECK(is_indecomposable(m));
    }
  }

  TEST_CASE("enumeration of the cycle example") {
    auto t = cycle_over_arrow();
    GPListing g = enumerate_indec_gp(t, 6);
    CHECK(g.modules.size() == 8);
    CHECK(dim_vectors(g.modules) == std::vector<std::vector<std::size_t>>{{0, 0, 1, 0, 0},
                                                                          {0, 1, 0, 0, 0},
                                                                          {0, 1, 1, 0, 0},
                                                                          {0, 1, 1, 1, 0},
                                                                          {0, 1, 1, 1, 1},
                                                                          {1, 0, 0, 0, 0},
                                                                          {1, 0, 1, 0, 0},
                                                                          {1, 1, 0, 0, 0}});
    CHECK(g.modules.front().dims() == dv({1, 0, 0, 0, 0}));
  }

  TEST_CASE("enumeration agrees with a bounded search over T") {
    for (auto t : {loop_over_sink(), cycle_over_arrow()}) {
      GPListing g = enumerate_indec_gp(t, 5);
      auto tinfo = is_gorenstein_algebra(t->t());
      std::vector<Module> brute;
      for (auto& m : indecomposable_classes(t->t(), 5)) {
        if (is_gp(m, tinfo).status == Verdict::Yes) brute.push_back(m);
      }
      CHECK(dim_vectors(brute) == dim_vectors(g.modules));
    }
  }

  TEST_CASE("product of hereditary algebras lists projectives only") {
    auto a2 = make_algebra({"1", "5"}, {{"a", {"1", "5"}}}, {});
    auto t = TriangularAlgebra::from_parts(a2, two_arrow_sink(), {}, {});
    GPListing g = enumerate_indec_gp(t, 6);
    CHECK(g.modules.size() == t->t()->num_vertices());
    for (const auto& m : g.modules) CHECK(is_projective(m));
  }
}
