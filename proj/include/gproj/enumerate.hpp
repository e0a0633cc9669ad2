#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "gproj/module.hpp"

namespace gproj {

/// Brute-force oracle: every arrow-matrix assignment over F_2 with the given dimension
/// vector that satisfies the relations, one representative per isomorphism class.
/// Requires total dimension <= 8 and at most 2^max_bits assignments.
std::vector<Module> enumerate_modules(const AlgebraPtr& a, const std::vector<std::size_t>& dims,
                                      std::size_t max_bits = 22);

/// Uniform random arrow matrices, then entries of failing relations are zeroed until
/// the relations hold.
Module random_module(const AlgebraPtr& a, const std::vector<std::size_t>& dims, std::mt19937_64& rng);
/// A nonzero dimension vector of total dimension at most max_total.
std::vector<std::size_t> random_dim_vector(const AlgebraPtr& a, std::size_t max_total, std::mt19937_64& rng);
/// m with its basis changed by a random invertible matrix at every vertex.
Module random_twist(const Module& m, std::mt19937_64& rng);
Mat random_invertible(Field f, std::size_t n, std::mt19937_64& rng);

}  // namespace gproj
