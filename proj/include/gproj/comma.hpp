#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gproj/homology.hpp"
#include "gproj/module.hpp"

namespace gproj {

/// An arrow from a Gamma-vertex to a Lambda-vertex, by vertex names.
struct ConnectingArrow {
  std::string name;
  std::string from;
  std::string to;
};

class TriangularAlgebra;
using TriangularPtr = std::shared_ptr<const TriangularAlgebra>;

/// T = [Lambda M; 0 Gamma] as a bound quiver algebra whose vertices split into a
/// Lambda block and a Gamma block with no arrows from Lambda to Gamma.
/// M is spanned by the surviving paths from Gamma-vertices to Lambda-vertices.
class TriangularAlgebra {
 public:
  /// T has the Lambda vertices first, then the Gamma vertices; arrows Lambda, Gamma, connecting.
  /// Mixed relations are written over the arrow names of T.
  static TriangularPtr from_parts(const AlgebraPtr& lambda, const AlgebraPtr& gamma,
                                  const std::vector<ConnectingArrow>& connecting,
                                  const std::vector<std::string>& mixed_relations);
  /// Splits an existing algebra; lambda_vertices lists the T-vertices of the Lambda block.
  static TriangularPtr from_algebra(const AlgebraPtr& t, const std::vector<std::size_t>& lambda_vertices);

  const AlgebraPtr& lambda() const { return lambda_; }
  const AlgebraPtr& gamma() const { return gamma_; }
  const AlgebraPtr& t() const { return t_; }
  Field field() const { return t_->field(); }
  TriangularPtr with_field(Field f) const;

  std::size_t lambda_to_t(std::size_t v) const { return lambda_vertices_.at(v); }
  std::size_t gamma_to_t(std::size_t v) const { return gamma_vertices_.at(v); }
  const std::vector<std::size_t>& lambda_vertices() const { return lambda_vertices_; }
  const std::vector<std::size_t>& gamma_vertices() const { return gamma_vertices_; }
  /// T-arrow index of an arrow of Lambda / Gamma.
  std::size_t lambda_arrow_to_t(std::size_t a) const { return lambda_arrows_.at(a); }
  std::size_t gamma_arrow_to_t(std::size_t a) const { return gamma_arrows_.at(a); }
  const std::vector<std::size_t>& connecting_arrows() const { return connecting_; }
  std::size_t t_path_of_lambda(std::size_t p) const { return lambda_paths_.at(p); }
  std::size_t t_path_of_gamma(std::size_t p) const { return gamma_paths_.at(p); }

  /// Basis of M: T-paths from a Gamma-vertex to a Lambda-vertex.
  const std::vector<std::size_t>& bimodule_basis() const { return m_basis_; }
  /// Basis paths of M ending at Lambda-vertex u.
  const std::vector<std::size_t>& bimodule_paths_to(std::size_t u) const { return m_to_.at(u); }
  /// Gamma-vertex where a basis path of M starts.
  std::size_t bimodule_source(std::size_t t_path) const;
  /// Lambda-vertex where a basis path of M ends.
  std::size_t bimodule_target(std::size_t t_path) const;

  /// M as a left Lambda-module (equal to F applied to the regular Gamma-module).
  Module bimodule_left() const;
  /// M as a right Gamma-module, i.e. a module over the opposite of Gamma.
  Module bimodule_right() const;

 private:
  TriangularAlgebra() = default;

  AlgebraPtr lambda_, gamma_, t_;
  std::vector<std::size_t> lambda_vertices_, gamma_vertices_;
  std::vector<std::size_t> lambda_arrows_, gamma_arrows_, connecting_;
  std::vector<std::size_t> lambda_paths_, gamma_paths_;
  std::vector<int> side_;          // per T-vertex: 0 Lambda, 1 Gamma
  std::vector<std::size_t> local_;  // per T-vertex: index inside its block
  std::vector<std::size_t> m_basis_;
  std::vector<std::vector<std::size_t>> m_to_;
};

/// F y = M (x)_Gamma y as a left Lambda-module.
Module apply_F(const TriangularAlgebra& t, const Module& y);
ModMorphism apply_F_mor(const TriangularAlgebra& t, const ModMorphism& g);

/// An object (Y, X, phi: F Y -> X) of the comma category.
struct CommaObject {
  Module y;
  Module x;
  ModMorphism phi;
};

CommaObject split(const TriangularAlgebra& t, const Module& m);
Module merge(const TriangularAlgebra& t, const CommaObject& c);
/// (Y, F Y, id) and (0, X, 0).
CommaObject comma_free_part(const TriangularAlgebra& t, const Module& y);
CommaObject comma_lambda_part(const TriangularAlgebra& t, const Module& x);

/// Morphism components on the Gamma side (a) and the Lambda side (b).
struct CommaMorphism {
  ModMorphism a;
  ModMorphism b;
};
CommaMorphism split_morphism(const TriangularAlgebra& t, const ModMorphism& f);
ModMorphism merge_morphism(const TriangularAlgebra& t, const Module& source, const Module& target,
                           const CommaMorphism& f);

/// Restriction to one block: a module over Lambda or Gamma.
Module restrict_to_lambda(const TriangularAlgebra& t, const Module& m);
Module restrict_to_gamma(const TriangularAlgebra& t, const Module& m);
/// A Lambda-module (or Gamma-module) viewed over T, zero on the other block.
Module extend_from_lambda(const TriangularAlgebra& t, const Module& x);
Module extend_from_gamma(const TriangularAlgebra& t, const Module& y);

struct ProjectiveShape {
  bool projective = false;
  /// Y projective, phi injective and Coker phi projective.
  bool shape_matches = false;
  /// Vertices of the indecomposable summands Q of Y (Gamma) and P of Coker phi (Lambda).
  std::vector<std::size_t> gamma_summands;
  std::vector<std::size_t> lambda_summands;
  std::string describe(const TriangularAlgebra& t) const;
};
ProjectiveShape is_projective_T(const TriangularAlgebra& t, const Module& m);

/// The modules (0, P(v)) for Lambda-vertices v and (P(w), F P(w)) for Gamma-vertices w, over T.
std::vector<Module> comma_projectives(const TriangularAlgebra& t);

struct ComponentContext {
  TriangularPtr t;
  GorensteinInfo lambda;
  GorensteinInfo gamma;
  std::size_t bound = kDefaultBound;
};
ComponentContext make_context(const TriangularPtr& t, std::size_t bound = kDefaultBound);

struct ComponentVerdict {
  GPVerdict verdict;
  /// 0 when the verdict is not No; 1 phi not injective, 2 Coker phi not GP, 3 Y not GP.
  int failed_clause = 0;
  bool phi_injective = false;
  std::optional<GPVerdict> cokernel;
  std::optional<GPVerdict> gamma_part;
  /// Final clause, computed when the verdict is Yes: X GP iff F Y GP.
  std::optional<Verdict> x_gp;
  std::optional<Verdict> fy_gp;
  bool final_clause_holds = true;
  std::string describe() const;
};
ComponentVerdict gp_via_components(const ComponentContext& ctx, const CommaObject& c);
ComponentVerdict gp_via_components(const ComponentContext& ctx, const Module& m);

enum class Certification { Certified, SampleVerified, Refuted, Unknown };
std::string to_string(Certification c);

struct PerfectReport {
  Certification p1 = Certification::Unknown;
  Certification p2 = Certification::Unknown;
  /// Projective dimensions of M over the opposite of Gamma and over Lambda.
  std::optional<std::size_t> pd_right;
  std::optional<std::size_t> pd_left;
  /// Sampled checks of Ext^i(G, F Q) for 1 <= i <= max_degree.
  std::size_t samples = 0;
  std::size_t ext_values_checked = 0;
  std::size_t nonzero_ext = 0;
  std::size_t max_degree = 0;
  std::string witness;

  bool perfect() const;
  std::string describe() const;
};
/// P1 via finite pd of M over the opposite of Gamma; P2 via finite pd of M over Lambda,
/// or else through the sampled Ext vanishing against every F P(w).
PerfectReport check_perfect(const TriangularAlgebra& t, std::size_t bound = kDefaultBound,
                            const std::vector<Module>& gp_samples = {}, std::size_t max_degree = 0);

struct PdTransferReport {
  bool hypothesis_holds = false;
  std::string hypothesis_witness;
  std::optional<std::size_t> pd_t;
  std::optional<std::size_t> pd_gamma;
  std::optional<std::size_t> pd_lambda;
  bool consistent = false;
  std::string describe() const;
};
PdTransferReport finite_pd_transfer(const TriangularAlgebra& t, const CommaObject& c,
                                    std::size_t bound = kDefaultBound);

struct GPListing {
  std::vector<Module> modules;
  /// "lambda-cm-free", "gamma-cm-free" or "bounded-search".
  std::string method;
  /// True when the structure of the list follows from certified hypotheses.
  bool certified = false;
  std::size_t max_total_dim = 0;
  std::string note;
};
/// Indecomposable GP T-modules of total dimension <= max_total_dim, sorted by total
/// dimension, then by dimension vector in descending lexicographic order.
GPListing enumerate_indec_gp(const TriangularPtr& t, std::size_t max_total_dim, std::size_t bound = kDefaultBound);

/// Indecomposable GP modules over a single algebra, up to the dimension bound.
std::vector<Module> indecomposable_gp(const AlgebraPtr& a, std::size_t max_total_dim,
                                      std::size_t bound = kDefaultBound);

void sort_by_dimension(std::vector<Module>& modules);

}  // namespace gproj
