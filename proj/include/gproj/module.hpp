#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gproj/mat.hpp"
#include "gproj/quiver.hpp"

namespace gproj {

/// A representation: one vector space per vertex and one matrix per arrow
/// (shape dim(target) x dim(source)).
class Module {
 public:
  Module() = default;
  /// Checks shapes and fields; relations are checked by validate().
  Module(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Mat> maps);
  static Module zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Algebra& alg() const { return *algebra_; }
  Field field() const { return algebra_->field(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_.at(v); }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  const Mat& map(std::size_t arrow) const { return maps_.at(arrow); }
  const std::vector<Mat>& maps() const { return maps_; }

  /// Action of basis path p: dim(target(p)) x dim(source(p)).
  Mat path_action(std::size_t p) const;
  Mat path_action(const std::vector<std::size_t>& arrows, std::size_t source) const;

  /// "(3,1,0,1)" in vertex order.
  std::string dims_string() const;

 private:
  AlgebraPtr algebra_;
  std::vector<std::size_t> dims_;
  std::vector<Mat> maps_;
};

struct ValidationReport {
  bool ok = true;
  std::string message;
};

/// Shape and relation check; the message names the first failing relation.
ValidationReport validate(const Module& m);

void require_same_algebra(const Module& a, const Module& b, const char* op);

/// Per-vertex matrices forming commuting squares over every arrow.
struct ModMorphism {
  Module source;
  Module target;
  std::vector<Mat> maps;

  ModMorphism() = default;
  ModMorphism(Module src, Module tgt, std::vector<Mat> m);
  static ModMorphism identity(const Module& m);
  static ModMorphism zero(const Module& src, const Module& tgt);

  const Mat& at(std::size_t v) const { return maps.at(v); }
  /// Shapes and commuting squares.
  bool is_valid() const;
  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_iso() const;
  std::size_t rank() const;

  /// this after o.
  ModMorphism operator*(const ModMorphism& o) const;
  ModMorphism operator+(const ModMorphism& o) const;
  ModMorphism operator-(const ModMorphism& o) const;
  ModMorphism operator-() const;
  ModMorphism scaled(const FieldScalar& s) const;
  bool operator==(const ModMorphism& o) const;

  /// Column vector: row-major vectorizations of the vertex maps, concatenated.
  Mat flatten() const;
};

struct DirectSum {
  Module sum;
  std::vector<ModMorphism> injections;
  std::vector<ModMorphism> projections;
};

DirectSum direct_sum(const std::vector<Module>& parts);
DirectSum direct_sum(const AlgebraPtr& algebra, const std::vector<Module>& parts);
/// Block-diagonal morphism between the direct sums of sources and targets.
ModMorphism direct_sum_morphism(const std::vector<ModMorphism>& parts);

struct KernelResult {
  Module module;
  ModMorphism inclusion;
};

struct CokernelResult {
  Module module;
  ModMorphism projection;
  /// Per-vertex linear sections of the projection (not module maps).
  std::vector<Mat> sections;
};

struct ImageResult {
  Module module;
  ModMorphism inclusion;
  ModMorphism corestriction;
};

/// Submodule spanned at each vertex by the columns of bases[v]; throws when not invariant.
KernelResult submodule(const Module& m, const std::vector<Mat>& bases);
/// Quotient by the per-vertex column spaces of sub[v]; throws when not invariant.
CokernelResult quotient(const Module& m, const std::vector<Mat>& sub);

KernelResult kernel(const ModMorphism& f);
CokernelResult cokernel(const ModMorphism& f);
ImageResult image(const ModMorphism& f);

struct HomSpace {
  Module source;
  Module target;
  std::vector<ModMorphism> basis;
  /// Flattened basis morphisms as columns.
  Mat coords;

  std::size_t dim() const { return basis.size(); }
  /// Linear combination with the given coefficient column.
  ModMorphism combination(const Mat& coeffs) const;
  std::optional<Mat> coordinates(const ModMorphism& f) const;
};

HomSpace hom_space(const Module& m, const Module& n);

/// Certificate-based isomorphism test: invariant mismatches prove non-isomorphism,
/// an invertible morphism proves isomorphism. Throws Inconclusive otherwise.
bool is_isomorphic(const Module& m, const Module& n, std::uint64_t seed = 1);
/// Returns an isomorphism m -> n when one is found.
std::optional<ModMorphism> find_isomorphism(const Module& m, const Module& n, std::uint64_t seed = 1);
/// Exact when m is indecomposable: End(m) is local, so m and n are isomorphic iff some
/// composite g f of basis morphisms f: m -> n, g: n -> m is invertible.
bool isomorphic_indecomposables(const Module& m, const Module& n);

/// Exhaustive idempotent search in End(m), preceded by a randomized Fitting
/// certificate. Requires F_2 or F_3 and a small End(m); throws BudgetExceeded otherwise.
bool is_indecomposable(const Module& m, std::uint64_t seed = 1);

Module indec_projective(const AlgebraPtr& a, std::size_t v);
Module indec_injective(const AlgebraPtr& a, std::size_t v);
Module simple_module(const AlgebraPtr& a, std::size_t v);
/// The left regular module, as the direct sum of all P(v).
Module regular_module(const AlgebraPtr& a);

/// The k-dual D(m) = Hom_k(m, k), a module over the opposite algebra.
Module dual_module(const Module& m);
/// As above, but over the given algebra, which must be structurally the opposite.
Module dual_module(const Module& m, const AlgebraPtr& over);
/// D(f): D(target) -> D(source) over the given algebra.
ModMorphism dual_morphism(const ModMorphism& f, const AlgebraPtr& over);

bool is_selfinjective(const AlgebraPtr& a);
bool is_hereditary(const AlgebraPtr& a);

}  // namespace gproj
