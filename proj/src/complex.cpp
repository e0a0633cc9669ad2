#include "gproj/complex.hpp"

#include "gproj/errors.hpp"

namespace gproj {

ComplexWindow::ComplexWindow(int lo_, std::vector<Module> terms_, std::vector<ModMorphism> diffs_)
    : lo(lo_), hi(lo_ + static_cast<int>(terms_.size()) - 1), terms(std::move(terms_)), diffs(std::move(diffs_)) {
  if (!terms.empty() && diffs.size() + 1 != terms.size()) {
    throw DimensionMismatch("complex window needs one differential between consecutive terms");
  }
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    if (diffs[i].source.dims() != terms[i].dims() || diffs[i].target.dims() != terms[i + 1].dims()) {
      throw DimensionMismatch("differential " + std::to_string(lo + static_cast<int>(i)) + " has the wrong shape");
    }
  }
}

bool ComplexWindow::is_complex() const {
  for (const auto& d : diffs) {
    if (!d.is_valid()) return false;
  }
  for (std::size_t i = 0; i + 1 < diffs.size(); ++i) {
    if (!(diffs[i + 1] * diffs[i]).is_zero()) return false;
  }
  return true;
}

bool ComplexWindow::exact_at(int i) const {
  if (i <= lo || i >= hi) throw InvalidInput("exactness is only defined at interior degrees");
  const Module& m = term(i);
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    if (m.dim(v) != rank(diff(i).maps[v]) + rank(diff(i - 1).maps[v])) return false;
  }
  return true;
}

bool ComplexWindow::exact_interior() const {
  for (int i = lo + 1; i < hi; ++i) {
    if (!exact_at(i)) return false;
  }
  return true;
}

std::string ComplexWindow::describe() const {
  std::string s;
  for (int i = lo; i <= hi; ++i) {
    if (i > lo) s += " -> ";
    s += "[" + std::to_string(i) + "]" + term(i).dims_string();
  }
  return s;
}

namespace {

/// Rank of g |-> g o d, as a map Hom(target(d), p) -> Hom(source(d), p).
std::size_t precompose_rank(const ModMorphism& d, const HomSpace& h) {
  if (h.dim() == 0) return 0;
  std::vector<Mat> cols;
  for (const auto& g : h.basis) cols.push_back((g * d).flatten());
  return rank(Mat::hstack(cols, d.source.field(), cols.front().rows()));
}

}  // namespace

bool is_hom_proj_exact(const ComplexWindow& c) {
  if (c.terms.empty()) return true;
  const AlgebraPtr& a = c.terms.front().algebra();
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    Module p = indec_projective(a, v);
    std::vector<HomSpace> homs;
    for (const auto& t : c.terms) homs.push_back(hom_space(t, p));
    for (int i = c.lo + 1; i < c.hi; ++i) {
      const std::size_t idx = static_cast<std::size_t>(i - c.lo);
      const std::size_t into = precompose_rank(c.diff(i), homs[idx + 1]);
      const std::size_t out = precompose_rank(c.diff(i - 1), homs[idx]);
      if (homs[idx].dim() != into + out) return false;
    }
  }
  return true;
}

}  // namespace gproj
