#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "gproj/complex.hpp"
#include "gproj/module.hpp"

namespace gproj {

/// 0 -> Y -f-> X -g-> Z -> 0
struct ShortExact {
  ModMorphism f;
  ModMorphism g;
};
bool is_short_exact(const ShortExact& s);

/// Outcome of gluing two columns along a short exact sequence.
/// Right gluing: middle has X in degree -1 and D^i + C^i in degree i, lifts are sigma^{-1..n-1}.
/// Left gluing: middle has X in degree 0 and F_i + E_i in degree -i-1, lifts are pi_0..pi_L.
/// Each middle term is the direct sum listed in sums, outer column first.
struct HorseshoeResult {
  ComplexWindow middle;
  std::vector<ModMorphism> lifts;
  std::vector<DirectSum> sums;
  bool is_complex = false;
  bool squares_commute = false;
  bool middle_exact = false;
  bool side_exact = false;

  bool equivalence_holds() const { return middle_exact == side_exact; }
};

/// c_for_y: Y -> C^0 -> ... -> C^n (a complex, degrees -1..n);
/// d_for_z: 0 -> Z -> D^0 -> ... (exact, degrees -1..m). Glues up to min(n, m).
/// Throws HypothesisFailed when Ext^1(Ker d^j, C^j) != 0 for a needed j.
HorseshoeResult horseshoe_glue_right(const ShortExact& ses, const ComplexWindow& c_for_y,
                                     const ComplexWindow& d_for_z);

/// e_for_y: E_L -> ... -> E_0 -> Y -> 0 (exact, degrees -L-1..0);
/// f_for_z: F_L -> ... -> F_0 -> Z (a complex). Glues up to the shorter length.
/// Throws HypothesisFailed when Ext^1(F_i, Im e_i) != 0 for a needed i.
HorseshoeResult horseshoe_glue_left(const ShortExact& ses, const ComplexWindow& e_for_y,
                                    const ComplexWindow& f_for_z);

/// h with h o u = t, if any.
std::optional<ModMorphism> extend_along(const ModMorphism& u, const ModMorphism& t);
/// h with p o h = t, if any.
std::optional<ModMorphism> lift_along(const ModMorphism& p, const ModMorphism& t);

struct HorseshoeInstance {
  ShortExact ses;
  ComplexWindow y_side;
  ComplexWindow z_side;
  /// Exactness of the column that may fail (C for right gluing, F for left gluing).
  bool side_exact = true;
};

/// X random, Y generated by one or two random elements, Z the cokernel.
ShortExact random_short_exact(const AlgebraPtr& a, std::size_t max_total, std::mt19937_64& rng);
/// Injective coresolutions on both sides; when !exact the Y column receives a stray
/// injective summand with zero maps at a random interior degree.
HorseshoeInstance random_right_instance(const AlgebraPtr& a, std::size_t length, bool exact, std::mt19937_64& rng,
                                        std::size_t max_total = 6);
/// Minimal projective resolutions on both sides; when !exact the Z column receives a
/// stray projective summand.
HorseshoeInstance random_left_instance(const AlgebraPtr& a, std::size_t length, bool exact, std::mt19937_64& rng,
                                       std::size_t max_total = 6);

/// Minimal projective resolution as a window P_L -> ... -> P_0 -> m, padded with zeros.
ComplexWindow projective_resolution_window(const Module& m, std::size_t length);

}  // namespace gproj
