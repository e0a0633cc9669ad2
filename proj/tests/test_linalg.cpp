#include <doctest.h>

#include <random>

#include "gproj/errors.hpp"
#include "gproj/mat.hpp"

using namespace gproj;

namespace {

Mat random_mat(Field f, std::size_t r, std::size_t c, std::mt19937_64& rng, int spread = 3) {
  Mat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, static_cast<long long>(rng() % (2 * spread + 1)) - spread);
  }
  return m;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("rref of the empty matrix") {
    auto r = rref(Mat(Field::prime(2), 0, 0));
    CHECK(r.reduced.rows() == 0);
    CHECK(r.pivots.empty());
  }

  TEST_CASE("rref of the identity over F_2") {
    const Field f = Field::prime(2);
    auto r = rref(Mat::identity(f, 3));
    CHECK(r.reduced == Mat::identity(f, 3));
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
  }

  TEST_CASE("rref over Q scales and clears") {
    const Field q = Field::rationals();
    auto r = rref(Mat::from_ints(q, 2, 2, {2, 4, 1, 2}));
    CHECK(r.reduced == Mat::from_ints(q, 2, 2, {1, 2, 0, 0}));
    CHECK(r.pivots == std::vector<std::size_t>{0});
  }

  TEST_CASE("rref over Q with fractions") {
    const Field q = Field::rationals();
    Mat m(q, 2, 3);
    m.set(0, 0, FieldScalar(q, mpq_class(1, 2)));
    m.set(0, 1, FieldScalar(q, mpq_class(1, 3)));
    m.set(1, 0, 3);
    m.set(1, 2, FieldScalar(q, mpq_class(-2, 7)));
    auto r = rref(m);
    CHECK(r.pivots.size() == 2);
    auto k = kernel_basis(m);
    CHECK(k.cols() == 1);
    CHECK((m * k).is_zero());
  }

  TEST_CASE("kernel basis examples") {
    const Field f = Field::prime(2);
    CHECK(kernel_basis(Mat::identity(f, 4)).cols() == 0);
    auto z = kernel_basis(Mat(f, 2, 3));
    CHECK(z.cols() == 3);
    CHECK(rank(z) == 3);
    auto k = kernel_basis(Mat::from_ints(f, 1, 2, {1, 1}));
    CHECK(k == Mat::column_vector(f, {1, 1}));
  }

  TEST_CASE("solve examples") {
    const Field f = Field::prime(3);
    std::mt19937_64 rng(7);
    Mat b = random_mat(f, 3, 2, rng);
    auto x = solve(Mat::identity(f, 3), b);
    REQUIRE(x);
    CHECK(*x == b);
    auto z = solve(Mat(f, 2, 2), Mat(f, 2, 1));
    REQUIRE(z);
    CHECK(z->is_zero());
    CHECK_FALSE(solve(Mat::from_ints(f, 2, 1, {1, 1}), Mat::from_ints(f, 2, 1, {1, 0})));
    CHECK_THROWS_AS(solve(Mat(f, 2, 2), Mat(f, 3, 1)), DimensionMismatch);
  }

  TEST_CASE("mixed fields are rejected") {
    CHECK_THROWS_AS(Mat::identity(Field::prime(2), 2) * Mat::identity(Field::prime(3), 2), FieldMismatch);
    CHECK_THROWS_AS(solve(Mat::identity(Field::prime(2), 2), Mat::identity(Field::rationals(), 2)),
                    FieldMismatch);
  }

  TEST_CASE("orthogonal spans in F_2^3 meet trivially") {
    const Field f = Field::prime(2);
    Mat a = Mat::from_ints(f, 3, 1, {1, 0, 0});
    Mat b = Mat::from_ints(f, 3, 2, {0, 0, 1, 0, 0, 1});
    // Oracle: enumerate every vector of F_2^3 and test membership in both spans.
    int common = 0;
    for (int v = 1; v < 8; ++v) {
      Mat x = Mat::column_vector(f, {v & 1, (v >> 1) & 1, (v >> 2) & 1});
      if (columns_in_span(a, x) && columns_in_span(b, x)) ++common;
    }
    CHECK(common == 0);
    CHECK(intersect_columnspaces(a, b).cols() == 0);
    CHECK(intersect_columnspaces(b, b).cols() == 2);
    Mat e1 = Mat::unit_column(f, 3, 0), e2 = Mat::unit_column(f, 3, 1);
    CHECK(sum_columnspaces(e1, e2).cols() == 2);
  }

  TEST_CASE("random properties over several fields") {
    std::mt19937_64 rng(20261015);
    for (Field f : {Field::prime(2), Field::prime(3), Field::prime(2147483647u), Field::rationals()}) {
      for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        Mat m = random_mat(f, r, c, rng);
        if (trial % 3 == 0) m = m * random_mat(f, c, c, rng) * Mat(f, c, c);
        auto rr = rref(m);
        CHECK(rank(rr.reduced) == rr.rank());
        Mat k = kernel_basis(m);
        CHECK(k.cols() == c - rr.rank());
        CHECK(rank(k) == k.cols());
        CHECK((m * k).is_zero());

        Mat y = random_mat(f, c, 2, rng);
        auto x = solve(m, m * y);
        REQUIRE(x);
        CHECK(m * *x == m * y);

        Mat a = random_mat(f, 4, 1 + rng() % 3, rng);
        Mat b = random_mat(f, 4, 1 + rng() % 3, rng);
        CHECK(sum_columnspaces(a, b).cols() + intersect_columnspaces(a, b).cols() == rank(a) + rank(b));

        auto q = quotient_by(a, 4);
        CHECK((q.projection * a).is_zero());
        CHECK((q.projection * q.section).is_identity());
        CHECK(q.projection.rows() == 4 - rank(a));
      }
    }
  }

  TEST_CASE("inverse and kron") {
    const Field q = Field::rationals();
    Mat m = Mat::from_ints(q, 2, 2, {2, 1, 1, 1});
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK((m * *inv).is_identity());
    CHECK_FALSE(inverse(Mat::from_ints(q, 2, 2, {1, 2, 2, 4})));
    Mat k = Mat::kron(Mat::identity(q, 2), m);
    CHECK(k.rows() == 4);
    CHECK(k.block(2, 2, 2, 2) == m);
    CHECK(k.block(0, 2, 2, 2).is_zero());
  }
}
