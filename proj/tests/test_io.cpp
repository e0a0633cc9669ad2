#include <doctest.h>

#include <random>

#include "gproj/enumerate.hpp"
#include "gproj/errors.hpp"
#include "gproj/io.hpp"
#include "support.hpp"

using namespace gproj;
using namespace support;

namespace {

std::string fixture(const std::string& name) { return std::string(GPROJ_FIXTURE_DIR) + "/" + name; }

std::size_t error_line(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("algebra files") {
    CHECK(load_algebra(fixture("loop_cubed.alg"))->same_as(*make_algebra({"1"}, {{"g", {"1", "1"}}}, {"g g g"})));
    CHECK(load_algebra(fixture("two_arrow_sink.alg"))->same_as(*two_arrow_sink()));
    CHECK(load_algebra(fixture("cyclic_rad_square_zero.alg"))->same_as(*cyclic_rad_square_zero()));
    auto f3 = load_algebra(fixture("loop_cubed.alg"), Field::prime(3));
    CHECK(f3->field() == Field::prime(3));
    CHECK(f3->dim() == 3);
    auto q = parse_algebra("field: Q\nvertices: a b\narrows:\n  x: a -> b\n");
    CHECK(q->field().is_rational());
    CHECK(q->dim() == 3);
  }

  TEST_CASE("algebra file errors") {
    CHECK_THROWS_AS(parse_algebra("field: F_2\nvertices:\n"), ParseError);
    CHECK(error_line([] { parse_algebra("vertices: 1\narrows:\n  x: 1 -> 1\nrelations:\n  x y\n"); }) == 5);
    CHECK(error_line([] { parse_algebra("vertices: 1 2\narrows:\n  x: 1 -> 3\n"); }) == 3);
    CHECK(error_line([] { parse_algebra("vertices: 1\narrows:\n  x 1 -> 1\n"); }) == 3);
    CHECK(error_line([] { parse_algebra("field: F_4\nvertices: 1\n"); }) == 1);
    CHECK(error_line([] { parse_algebra("vertices: 1 1\n"); }) == 1);
    CHECK(error_line([] { parse_algebra("\n\nstray\nvertices: 1\n"); }) == 3);
    try {
      parse_algebra("vertices: 1 2\narrows:\n  x: 1 -> 7\n");
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.column() == 11);
      CHECK(std::string(e.what()).find("unknown vertex '7'") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_algebra("vertices: 1\narrows:\n  x: 1 -> 1\n"), InfiniteDimensional);
  }

  TEST_CASE("triangular files") {
    auto l = load_triangular(fixture("loop_cubed_over_sink.tri"));
    CHECK(l->t()->same_as(*loop_over_sink()->t()));
    CHECK(l->bimodule_basis().size() == 9);
    auto c = load_triangular(fixture("cycle_over_arrow.tri"), Field::prime(3));
    CHECK(c->t()->same_as(*cycle_over_arrow(Field::prime(3))->t()));
    auto k = load_triangular(fixture("arrow_killed_connection.tri"));
    CHECK(k->bimodule_basis().size() == 1);
    auto p = load_triangular(fixture("product_loop_sink.tri"));
    CHECK(p->bimodule_basis().empty());
  }

  TEST_CASE("triangular file errors") {
    const std::string lam = "[lambda]\nvertices: 1\n";
    const std::string gam = "[gamma]\nvertices: 2\n";
    CHECK(error_line([&] { parse_triangular(lam + gam + "[connecting]\n  c: 1 -> 2\n"); }) == 6);
    CHECK(error_line([&] { parse_triangular(lam); }) > 0);
    CHECK(error_line([&] { parse_triangular(lam + gam + "[extra]\n"); }) == 5);
    CHECK(error_line([&] { parse_triangular("vertices: 1\n" + lam + gam); }) == 1);
    CHECK(error_line([&] { parse_triangular("field: F_3\n[lambda]\nfield: F_2\nvertices: 1\n" + gam); }) > 0);
    CHECK_NOTHROW(parse_triangular(lam + gam + "[connecting]\n  c: 2 -> 1\n"));
  }

  TEST_CASE("module files") {
    auto l = loop_over_sink();
    Module p3 = load_module(fixture("loop_p3.mod"), l->t());
    CHECK(p3.dims() == dv({3, 1, 1, 0}));
    CHECK(is_isomorphic(p3, indec_projective(l->t(), 2)));
    Module b4 = load_module(fixture("loop_side_b4.mod"), l->t());
    CHECK(is_isomorphic(b4, indec_projective(l->t(), 3)));
    Module two = load_module(fixture("loop_lambda2.mod"), l->t());
    CHECK(two.dims() == dv({2, 0, 0, 0}));
    auto c = cycle_over_arrow();
    CHECK(is_isomorphic(load_module(fixture("cycle_p4.mod"), c->t()), indec_projective(c->t(), 3)));
    auto q = parse_algebra("field: Q\nvertices: a b\narrows:\n  x: a -> b\n");
    Module half = parse_module("dims: a:1 b:1\nx:\n  1/2\n", q);
    CHECK(half.map(0).at(0, 0) == FieldScalar(Field::rationals(), mpq_class(1, 2)));
  }

  TEST_CASE("module file errors") {
    auto a = truncated_loop(3);
    CHECK(error_line([&] { parse_module("", a); }) == 1);
    CHECK(error_line([&] { parse_module("dims: 2:1\n", a); }) == 1);
    CHECK(error_line([&] { parse_module("dims: 1:2\nx:\n  0 0\n", a); }) == 3);
    CHECK(error_line([&] { parse_module("dims: 1:2\nx:\n  0 0 1\n  0 0\n", a); }) == 3);
    CHECK(error_line([&] { parse_module("dims: 1:1\ny:\n  0\n", a); }) == 2);
    CHECK(error_line([&] { parse_module("dims: 1:1\n  0\n", a); }) == 2);
    CHECK(error_line([&] { parse_module("dims: 1:1\nx:\n  z\n", a); }) == 3);
    // x acting by the identity violates x^3 = 0.
    CHECK_THROWS_WITH_AS(parse_module("dims: 1:1\nx:\n  1\n", a), doctest::Contains("not a module"), ParseError);
  }

  TEST_CASE("module round trip") {
    std::mt19937_64 rng(8);
    for (auto a : {truncated_loop(3), two_arrow_sink(Field::prime(3)), loop_over_sink()->t(), cycle_over_arrow()->t()}) {
      for (int i = 0; i < 10; ++i) {
        Module m = random_module(a, random_dim_vector(a, 6, rng), rng);
        Module back = parse_module(format_module(m), a);
        CHECK(back.dims() == m.dims());
        CHECK(back.maps() == m.maps());
      }
    }
  }
}
