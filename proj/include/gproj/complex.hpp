#pragma once

#include <string>
#include <vector>

#include "gproj/module.hpp"

namespace gproj {

/// Degrees lo..hi of a cochain complex; diff(i) goes from term(i) to term(i + 1).
struct ComplexWindow {
  int lo = 0;
  int hi = -1;
  std::vector<Module> terms;
  std::vector<ModMorphism> diffs;

  ComplexWindow() = default;
  ComplexWindow(int lo_, std::vector<Module> terms_, std::vector<ModMorphism> diffs_);

  const Module& term(int i) const { return terms.at(static_cast<std::size_t>(i - lo)); }
  const ModMorphism& diff(int i) const { return diffs.at(static_cast<std::size_t>(i - lo)); }
  std::size_t length() const { return terms.size(); }

  /// Every differential is a valid morphism and consecutive ones compose to zero.
  bool is_complex() const;
  /// Cohomology at degree i vanishes (requires lo < i < hi).
  bool exact_at(int i) const;
  /// Exact at every interior degree.
  bool exact_interior() const;
  std::string describe() const;
};

/// Exactness of Hom(c, P(v)) at every interior degree, for every vertex v.
bool is_hom_proj_exact(const ComplexWindow& c);

}  // namespace gproj
