#pragma once

#include <cstddef>
#include <vector>

#include "gproj/module.hpp"

namespace gproj {

/// A projective module written as a sum of P(v_j), one summand per generator.
/// At vertex w the basis is ordered by summand, then by path order.
struct FreeModule {
  AlgebraPtr algebra;
  std::vector<std::size_t> generators;
  Module module;

  static FreeModule make(const AlgebraPtr& a, std::vector<std::size_t> generators);
  std::size_t rank() const { return generators.size(); }
  /// Position of path p (source v_j) of summand j inside the space at target(p).
  std::size_t position(std::size_t j, std::size_t p) const;

 private:
  std::vector<std::vector<std::size_t>> offset_;  // [summand][vertex]
  std::vector<std::size_t> path_pos_;             // path -> position among paths with same source and target
};

/// The unique morphism sending generator j to the vector images[j] in n at v_j.
ModMorphism morphism_from_free(const FreeModule& f, const Module& n, const std::vector<Mat>& images);

/// Image of generator g of the source inside the target, at vertex v_g.
Mat generator_image(const FreeModule& source, const ModMorphism& d, std::size_t g);

/// Coefficient c(g, j, p) of path p in summand j of the image of generator g of the source.
struct FreeCoefficient {
  std::size_t g;
  std::size_t j;
  std::size_t path;
  FieldScalar value;
};
std::vector<FreeCoefficient> free_coefficients(const FreeModule& source, const FreeModule& target,
                                               const ModMorphism& d);

/// Hom(-, B)-dual of a map between free B-modules, over op (the opposite of B):
/// returns target* -> source*, generator j going to sum c(g, j, p) p^op in summand g.
struct DualMap {
  FreeModule source;
  FreeModule target;
  ModMorphism map;
};
DualMap dualize(const FreeModule& source, const FreeModule& target, const ModMorphism& d, const AlgebraPtr& op);

/// Index in b_op of the opposite of basis path p of b.
std::size_t opposite_index(const Algebra& b, std::size_t p, const Algebra& b_op);

}  // namespace gproj
