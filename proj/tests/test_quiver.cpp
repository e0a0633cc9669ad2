#include <doctest.h>

#include "gproj/errors.hpp"
#include "support.hpp"

using namespace gproj;
using namespace support;

TEST_SUITE("quiver") {
  TEST_CASE("truncated loop has basis e, x, x^2") {
    auto a = truncated_loop(3);
    REQUIRE(a->dim() == 3);
    CHECK(a->path_label(0) == "e1");
    CHECK(a->path_label(1) == "x");
    CHECK(a->path_label(2) == "x x");
  }

  TEST_CASE("two-arrow sink has dimension five") {
    auto g = two_arrow_sink();
    CHECK(g->dim() == 5);
    CHECK(g->paths_between(1, 0).size() == 1);
  }

  TEST_CASE("cyclic quivers without relations are rejected") {
    Quiver q;
    q.add_vertex("1");
    q.add_arrow("x", 0, 0);
    CHECK_THROWS_AS(Algebra::build(q, {}), InfiniteDimensional);
    CHECK_THROWS_AS(Algebra::build(q, {}, Field::prime(2), 50), InfiniteDimensional);
  }

  TEST_CASE("bad relations are rejected") {
    Quiver q;
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_arrow("a", 0, 1);
    q.add_arrow("b", 0, 1);
    CHECK_THROWS_AS(Algebra::build(q, {{0, 1}}), InvalidInput);
    CHECK_THROWS_AS(Algebra::build(q, {{0}}), InvalidInput);
    CHECK_THROWS_AS(parse_relation(q, "a z"), InvalidInput);
  }

  TEST_CASE("composition order of relation strings") {
    auto l = cyclic_rad_square_zero();
    const auto& q = l->quiver();
    auto r = parse_relation(q, "a2 a1");
    CHECK(r == std::vector<std::size_t>{*q.find_arrow("a1"), *q.find_arrow("a2")});
    CHECK(l->dim() == 6);
    auto a1 = l->arrow_path(*q.find_arrow("a1"));
    auto a2 = l->arrow_path(*q.find_arrow("a2"));
    CHECK_FALSE(l->multiply(a2, a1));
    CHECK_FALSE(l->multiply(a1, a2));
  }

  TEST_CASE("projective dimension vectors") {
    auto a = truncated_loop(3);
    CHECK(indec_projective(a, 0).dims() == dv({3}));
    auto g = two_arrow_sink();
    CHECK(indec_projective(g, 0).dims() == dv({1, 0, 0}));
    CHECK(indec_projective(g, 1).dims() == dv({1, 1, 0}));
    auto iso = make_algebra({"1", "2"}, {}, {});
    CHECK(indec_projective(iso, 1).dims() == simple_module(iso, 1).dims());
  }

  TEST_CASE("injective dimension vectors") {
    auto g = two_arrow_sink();
    CHECK(indec_injective(g, 0).dims() == dv({1, 1, 1}));
    CHECK(indec_injective(g, 1).dims() == dv({0, 1, 0}));
    CHECK(simple_module(g, 2).total_dim() == 1);
  }

  TEST_CASE("every projective and injective satisfies the relations") {
    for (auto a : {truncated_loop(3), two_arrow_sink(), cyclic_rad_square_zero(), single_arrow(),
                   truncated_loop(4, Field::prime(3))}) {
      std::size_t total = 0;
      for (std::size_t v = 0; v < a->num_vertices(); ++v) {
        total += a->paths_from(v).size();
        CHECK(validate(indec_projective(a, v)).ok);
        CHECK(validate(indec_injective(a, v)).ok);
      }
      CHECK(total == a->dim());
      CHECK(a->opposite()->opposite()->dim() == a->dim());
      CHECK(a->opposite()->num_arrows() == a->num_arrows());
      CHECK(a->opposite()->opposite()->same_as(*a));
    }
  }

  TEST_CASE("structural flags") {
    CHECK(is_selfinjective(truncated_loop(3)));
    CHECK(is_selfinjective(cyclic_rad_square_zero()));
    CHECK(is_hereditary(two_arrow_sink()));
    CHECK_FALSE(is_selfinjective(two_arrow_sink()));
    CHECK_FALSE(is_hereditary(truncated_loop(3)));
    CHECK_FALSE(is_hereditary(cyclic_rad_square_zero()));
  }
}
