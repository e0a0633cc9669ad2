#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gproj/comma.hpp"
#include "gproj/module.hpp"
#include "gproj/quiver.hpp"

namespace support {

using namespace gproj;

inline AlgebraPtr make_algebra(const std::vector<std::string>& vertices,
                               const std::vector<std::pair<std::string, std::pair<std::string, std::string>>>& arrows,
                               const std::vector<std::string>& relations, Field f = Field::prime(2)) {
  Quiver q;
  for (const auto& v : vertices) q.add_vertex(v);
  for (const auto& [name, st] : arrows) q.add_arrow(name, *q.find_vertex(st.first), *q.find_vertex(st.second));
  std::vector<std::vector<std::size_t>> rels;
  for (const auto& r : relations) rels.push_back(parse_relation(q, r));
  return Algebra::build(std::move(q), std::move(rels), f);
}

/// k[x]/x^n on one vertex.
inline AlgebraPtr truncated_loop(int n, Field f = Field::prime(2)) {
  std::string rel;
  for (int i = 0; i < n; ++i) rel += (i ? " x" : "x");
  return make_algebra({"1"}, {{"x", {"1", "1"}}}, {rel}, f);
}

/// 3 -> 2 <- 4, vertex order 2 3 4.
inline AlgebraPtr two_arrow_sink(Field f = Field::prime(2)) {
  return make_algebra({"2", "3", "4"}, {{"b3", {"3", "2"}}, {"b4", {"4", "2"}}}, {}, f);
}

/// Oriented 3-cycle with all paths of length two killed.
inline AlgebraPtr cyclic_rad_square_zero(Field f = Field::prime(2)) {
  return make_algebra({"1", "2", "3"}, {{"a1", {"1", "2"}}, {"a2", {"2", "3"}}, {"a3", {"3", "1"}}},
                      {"a2 a1", "a3 a2", "a1 a3"}, f);
}

/// 5 -> 4.
inline AlgebraPtr single_arrow(Field f = Field::prime(2)) {
  return make_algebra({"4", "5"}, {{"c", {"5", "4"}}}, {}, f);
}

inline Module module_from(const AlgebraPtr& a, std::vector<std::size_t> dims,
                          const std::vector<std::vector<long long>>& entries) {
  std::vector<Mat> maps;
  const Quiver& q = a->quiver();
  for (std::size_t x = 0; x < q.num_arrows(); ++x) {
    const auto r = dims[q.arrow(x).target], c = dims[q.arrow(x).source];
    maps.push_back(x < entries.size() && !entries[x].empty() ? Mat::from_ints(a->field(), r, c, entries[x])
                                                              : Mat(a->field(), r, c));
  }
  return Module(a, std::move(dims), std::move(maps));
}

/// Loop g with g^3 = 0 at vertex 1 over 3 -> 2 <- 4, connected by c: 2 -> 1.
inline TriangularPtr loop_over_sink(Field f = Field::prime(2)) {
  auto lambda = make_algebra({"1"}, {{"g", {"1", "1"}}}, {"g g g"}, f);
  return TriangularAlgebra::from_parts(lambda, two_arrow_sink(f), {{"c", "2", "1"}}, {});
}

/// The radical-square-zero 3-cycle over 5 -> 4, connected by c: 4 -> 2.
inline TriangularPtr cycle_over_arrow(Field f = Field::prime(2)) {
  auto gamma = make_algebra({"4", "5"}, {{"b", {"5", "4"}}}, {}, f);
  return TriangularAlgebra::from_parts(cyclic_rad_square_zero(f), gamma, {{"c", "4", "2"}}, {});
}

inline std::vector<std::size_t> dv(std::initializer_list<std::size_t> l) { return l; }

}  // namespace support
