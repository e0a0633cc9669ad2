#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gproj/complex.hpp"
#include "gproj/free_module.hpp"
#include "gproj/module.hpp"

namespace gproj {

constexpr std::size_t kDefaultBound = 20;

KernelResult radical(const Module& m);
/// Basis vectors of M_v completing rad(M)_v; one generator of the cover each.
std::vector<std::vector<Mat>> top_generators(const Module& m);

struct ProjectiveCover {
  FreeModule free;
  ModMorphism cover;
};
ProjectiveCover projective_cover(const Module& m);

/// Minimal resolution ... -> P_1 -> P_0 -> M. diffs[i] : P_{i+1} -> P_i and
/// syzygies[i] = Omega^{i+1} M.
struct ProjResolution {
  Module module;
  std::vector<FreeModule> terms;
  std::vector<ModMorphism> diffs;
  ModMorphism augmentation;
  std::vector<Module> syzygies;
  /// True once a zero syzygy was reached: the resolution is complete.
  bool finite = false;

  /// Projective dimension if finite.
  std::optional<std::size_t> length() const;
  /// The window P_n -> ... -> P_0 -> M -> 0 in degrees -n-1 .. 1 (M in degree 0).
  ComplexWindow augmented_window() const;
};

/// Computes P_0 .. P_n (fewer when the resolution stops).
ProjResolution min_proj_resolution(const Module& m, std::size_t n);

/// dim Ext^i(m, n) for i = 0..max_i from an existing resolution (of length >= max_i + 1).
std::vector<std::size_t> ext_dims(const ProjResolution& r, const Module& n, std::size_t max_i);
std::size_t ext_dim(const Module& m, const Module& n, std::size_t i);

/// nullopt means infinite beyond the bound.
std::optional<std::size_t> pd(const Module& m, std::size_t bound = kDefaultBound);

struct InjDimRegular {
  /// Injective dimension of the left regular module.
  std::optional<std::size_t> left;
  /// Injective dimension of the right regular module.
  std::optional<std::size_t> right;
};
InjDimRegular injdim_regular(const AlgebraPtr& a, std::size_t bound = kDefaultBound);

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

struct GorensteinInfo {
  Verdict status = Verdict::Unknown;
  std::size_t d = 0;
  std::size_t bound = kDefaultBound;
  InjDimRegular injdims;
};
GorensteinInfo is_gorenstein_algebra(const AlgebraPtr& a, std::size_t bound = kDefaultBound);

struct GPVerdict {
  Verdict status = Verdict::Unknown;
  /// For No: Ext^degree(module or its transpose, regular) has dimension witness_dim.
  std::size_t degree = 0;
  std::size_t witness_dim = 0;
  bool on_transpose = false;
  std::size_t bound = 0;
  std::string describe() const;
};

GPVerdict is_gp(const Module& m, std::size_t bound = kDefaultBound);
GPVerdict is_gp(const Module& m, const GorensteinInfo& info);

/// Hom(m, A) as a module over the opposite algebra; (m*)_v = Hom(m, P(v)).
struct StarDual {
  Module module;
  /// Basis of Hom(m, P(v)) for each vertex v, matching the basis of (m*)_v.
  std::vector<HomSpace> components;
};
StarDual star(const Module& m);

/// Cokernel of the dual of a minimal presentation; a module over the opposite algebra.
Module transpose(const Module& m);

/// Splices the minimal resolution with the dual of a resolution of m*. Degrees -w..w,
/// P_{k-1} in degree -k and Q^k in degree k. Performs no Gorenstein projectivity check.
ComplexWindow candidate_complete_resolution(const Module& m, int w);
/// As above, but throws HypothesisFailed unless is_gp(m) is Yes.
ComplexWindow complete_resolution(const Module& m, int w, std::size_t bound = kDefaultBound);

/// The coresolution m -> Q^0 -> Q^1 -> ... -> Q^n over the original algebra.
struct Coresolution {
  ModMorphism coaugmentation;
  std::vector<FreeModule> terms;
  std::vector<ModMorphism> diffs;
};
Coresolution proj_coresolution(const Module& m, std::size_t n);

/// m -> I^0 -> ... -> I^n in degrees -1..n, dual to a minimal resolution of D(m);
/// padded with zero terms once the resolution stops.
ComplexWindow injective_coresolution(const Module& m, std::size_t n);

struct StableHom {
  HomSpace hom;
  /// Coordinates (in the hom basis) spanning the maps that factor through a projective.
  Mat factoring;
  std::size_t stable_dim = 0;

  bool is_stably_zero(const ModMorphism& f) const;
};
StableHom stable_hom(const Module& m, const Module& n);

/// Representatives of all indecomposable modules of total dimension <= max_total_dim,
/// one per isomorphism class, grown from simples by extensions with simple tops.
/// Requires F_2 or F_3.
std::vector<Module> indecomposable_classes(const AlgebraPtr& a, std::size_t max_total_dim,
                                           std::size_t max_classes = 5000);

/// Searches for a non-projective Gorenstein projective module among the indecomposables
/// up to the dimension bound. Finite global dimension is a certificate of CM-freeness.
struct CMFreeReport {
  bool cm_free = true;
  /// True when finite global dimension proves the answer for all dimensions.
  bool certified_all_dimensions = false;
  std::optional<std::size_t> global_dimension;
  std::optional<Module> witness;
  std::size_t checked_classes = 0;
  std::size_t max_total_dim = 0;
  std::string describe() const;
};
CMFreeReport is_cm_free(const AlgebraPtr& a, std::size_t max_total_dim, std::size_t bound = kDefaultBound);

/// Global dimension (max pd of simples) if finite within the bound.
std::optional<std::size_t> global_dimension(const AlgebraPtr& a, std::size_t bound = kDefaultBound);

bool is_projective(const Module& m);

}  // namespace gproj
