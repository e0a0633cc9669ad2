#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gproj/comma.hpp"

namespace gproj {

/// i^*, i_*, i^!, j_!, j^*, j_* (abelian) and j_* on the stable categories.
enum class FunctorTag { IUpper, ILower, IShriek, JShriek, JUpper, JLower, JLowerStable };
std::string to_string(FunctorTag tag);
std::optional<FunctorTag> functor_from_string(const std::string& s);

/// Where a functor takes its input / output. Comma objects are handled as T-modules.
enum class Side { Lambda, Gamma, Comma };
Side input_side(FunctorTag tag);
Side output_side(FunctorTag tag);

/// Embedding used by the stable j_*: F y -> Q^0 from the projective coresolution, or the
/// same map followed by the inclusion into Q^0 + P(0).
enum class EmbeddingChoice { Minimal, Padded };

/// (y, P, F y -> P) with P projective and GP cokernel.
CommaObject j_lower_stable(const TriangularAlgebra& t, const Module& y,
                           EmbeddingChoice choice = EmbeddingChoice::Minimal, std::size_t bound = kDefaultBound);

Module apply_functor(FunctorTag tag, const TriangularAlgebra& t, const Module& input);
ModMorphism apply_functor(FunctorTag tag, const TriangularAlgebra& t, const ModMorphism& f);

/// As apply_functor, after checking that the input is GP.
Module stable_functor_image(FunctorTag tag, const ComponentContext& ctx, const Module& input);

/// The linear map induced by a functor between stable Hom spaces.
struct InducedStableMap {
  /// Maps factoring through projectives go to such maps.
  bool well_defined = false;
  std::size_t rank = 0;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  bool bijective() const { return well_defined && rank == source_dim && rank == target_dim; }
};
InducedStableMap induced_stable_map(const StableHom& source, const StableHom& target,
                                    const std::function<ModMorphism(const ModMorphism&)>& g);

enum class AdjointPair { IUpperILower, ILowerIShriek, JShriekJUpper, JUpperJLower };
std::string to_string(AdjointPair p);
FunctorTag left_adjoint(AdjointPair p);
FunctorTag right_adjoint(AdjointPair p);

struct AdjunctionSample {
  std::string left_object;
  std::string right_object;
  /// dim Hom(F a, b) and dim Hom(a, G b).
  std::size_t dim_left = 0;
  std::size_t dim_right = 0;
  /// h -> G(h) o unit is a bijection.
  bool bijection = false;
  /// counit_{Fa} o F(unit_a) = id and G(counit_b) o unit_{Gb} = id.
  bool triangle_left = false;
  bool triangle_right = false;
  bool passed() const { return dim_left == dim_right && bijection && triangle_left && triangle_right; }
};

struct AdjunctionReport {
  AdjointPair pair = AdjointPair::IUpperILower;
  std::vector<AdjunctionSample> samples;
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
  std::string describe() const;
};
/// Random objects of total dimension <= max_total on both sides, seeded.
AdjunctionReport verify_adjunction(AdjointPair pair, const TriangularAlgebra& t, std::size_t n_samples,
                                   std::uint64_t seed = 1, std::size_t max_total = 6);

struct RecollementReport {
  std::size_t t_objects = 0;
  std::size_t lambda_objects = 0;
  std::size_t gamma_objects = 0;
  /// Pairs checked for full faithfulness of i_* and j_!.
  std::size_t fully_faithful_pairs = 0;
  /// Members of the list with projective Gamma-part and the explicit splittings found.
  std::size_t kernel_members = 0;
  std::size_t decompositions = 0;
  std::size_t adjunction_pairs = 0;
  /// Additional counts for the full recollement.
  bool full = false;
  std::size_t functorial_pairs = 0;
  std::size_t independence_checks = 0;
  std::size_t image_witnesses = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  std::string describe() const;
};

/// Stable-level checks of the left recollement on the given GP T-modules.
RecollementReport verify_left_recollement(const TriangularPtr& t, const std::vector<Module>& gp_list,
                                          std::size_t bound = kDefaultBound);

struct FullHypotheses {
  Verdict lambda_gorenstein = Verdict::Unknown;
  std::optional<std::size_t> lambda_dimension;
  bool f_preserves_projectives = false;
  std::string witness;
  /// F of GP Gamma-modules checked to be GP.
  std::size_t gp_samples = 0;
  std::size_t gp_failures = 0;
  bool holds() const { return lambda_gorenstein == Verdict::Yes && f_preserves_projectives && gp_failures == 0; }
  std::string describe() const;
};
FullHypotheses check_hypotheses_full(const TriangularAlgebra& t, std::size_t bound = kDefaultBound,
                                     std::size_t sample_dim = 6);

/// Throws HypothesisFailed when check_hypotheses_full fails.
RecollementReport verify_full_recollement(const TriangularPtr& t, const std::vector<Module>& gp_list,
                                          std::size_t bound = kDefaultBound);

}  // namespace gproj
