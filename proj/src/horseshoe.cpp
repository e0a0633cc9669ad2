#include "gproj/horseshoe.hpp"

#include <algorithm>
#include <string>

#include "gproj/enumerate.hpp"
#include "gproj/errors.hpp"
#include "gproj/free_module.hpp"
#include "gproj/homology.hpp"

namespace gproj {

namespace {

Mat random_column(Field f, std::size_t n, std::mt19937_64& rng) {
  std::vector<long long> v(n);
  for (auto& x : v) {
    x = f.is_prime() ? static_cast<long long>(rng() % f.characteristic()) : static_cast<long long>(rng() % 5) - 2;
  }
  return Mat::column_vector(f, v);
}

std::optional<ModMorphism> solve_in_hom(const HomSpace& h, const std::vector<ModMorphism>& images,
                                        const ModMorphism& t) {
  const Mat rhs = t.flatten();
  if (h.dim() == 0) {
    if (t.is_zero()) return ModMorphism::zero(h.source, h.target);
    return std::nullopt;
  }
  std::vector<Mat> cols;
  for (const auto& x : images) cols.push_back(x.flatten());
  auto x = solve(Mat::hstack(cols, t.source.field(), rhs.rows()), rhs);
  if (!x) return std::nullopt;
  return h.combination(*x);
}

void require_ext_vanishes(const Module& m, const Module& n, const std::string& what) {
  if (m.is_zero() || n.is_zero()) return;
  if (ext_dim(m, n, 1) != 0) throw HypothesisFailed("Ext^1 vanishing fails: " + what);
}

/// Injective at the first map and exact at every interior degree.
bool exact_from_start(const ComplexWindow& c) {
  return c.diff(c.lo).is_injective() && c.exact_interior();
}

bool exact_to_end(const ComplexWindow& c) {
  return c.diff(c.hi - 1).is_surjective() && c.exact_interior();
}

ComplexWindow truncate(const ComplexWindow& c, int hi) {
  std::vector<Module> t(c.terms.begin(), c.terms.begin() + (hi - c.lo + 1));
  std::vector<ModMorphism> d(c.diffs.begin(), c.diffs.begin() + (hi - c.lo));
  return ComplexWindow(c.lo, std::move(t), std::move(d));
}

ComplexWindow truncate_left(const ComplexWindow& c, int lo) {
  const auto skip = static_cast<std::size_t>(lo - c.lo);
  std::vector<Module> t(c.terms.begin() + static_cast<long>(skip), c.terms.end());
  std::vector<ModMorphism> d(c.diffs.begin() + static_cast<long>(skip), c.diffs.end());
  return ComplexWindow(lo, std::move(t), std::move(d));
}

/// Adds a stray summand s at window degree k with zero maps in and out.
ComplexWindow with_stray_summand(const ComplexWindow& c, int k, const Module& s) {
  std::vector<Module> t = c.terms;
  std::vector<ModMorphism> d = c.diffs;
  const auto idx = static_cast<std::size_t>(k - c.lo);
  DirectSum ds = direct_sum({c.terms[idx], s});
  t[idx] = ds.sum;
  if (idx > 0) d[idx - 1] = ds.injections[0] * d[idx - 1];
  if (idx < d.size()) d[idx] = d[idx] * ds.projections[0];
  return ComplexWindow(c.lo, std::move(t), std::move(d));
}

}  // namespace

bool is_short_exact(const ShortExact& s) {
  if (!s.f.is_valid() || !s.g.is_valid()) return false;
  if (!(s.g * s.f).is_zero()) return false;
  if (!s.f.is_injective() || !s.g.is_surjective()) return false;
  return s.f.source.total_dim() + s.g.target.total_dim() == s.f.target.total_dim();
}

std::optional<ModMorphism> extend_along(const ModMorphism& u, const ModMorphism& t) {
  HomSpace h = hom_space(u.target, t.target);
  std::vector<ModMorphism> images;
  for (const auto& b : h.basis) images.push_back(b * u);
  return solve_in_hom(h, images, t);
}

std::optional<ModMorphism> lift_along(const ModMorphism& p, const ModMorphism& t) {
  HomSpace h = hom_space(t.source, p.source);
  std::vector<ModMorphism> images;
  for (const auto& b : h.basis) images.push_back(p * b);
  return solve_in_hom(h, images, t);
}

HorseshoeResult horseshoe_glue_right(const ShortExact& ses, const ComplexWindow& c_for_y,
                                     const ComplexWindow& d_for_z) {
  if (!is_short_exact(ses)) throw InvalidInput("horseshoe: the sequence is not short exact");
  if (c_for_y.lo != -1 || d_for_z.lo != -1) throw InvalidInput("horseshoe: columns must start in degree -1");
  const int n = std::min(c_for_y.hi, d_for_z.hi);
  if (n < 0) throw InvalidInput("horseshoe: empty column");
  const ComplexWindow c = truncate(c_for_y, n);
  const ComplexWindow d = truncate(d_for_z, n);
  if (!(c.term(-1).dims() == ses.f.source.dims()) || !(d.term(-1).dims() == ses.g.target.dims())) {
    throw DimensionMismatch("horseshoe: columns do not start at the ends of the sequence");
  }
  if (!c.is_complex()) throw InvalidInput("horseshoe: the Y column is not a complex");
  if (!d.is_complex() || !exact_from_start(d)) throw InvalidInput("horseshoe: the Z column is not exact");

  HorseshoeResult out;
  for (int i = 0; i <= n; ++i) out.sums.push_back(direct_sum({d.term(i), c.term(i)}));
  auto in_d = [&](int i) { return out.sums[static_cast<std::size_t>(i)].injections[0]; };
  auto in_c = [&](int i) { return out.sums[static_cast<std::size_t>(i)].injections[1]; };
  auto pr_d = [&](int i) { return out.sums[static_cast<std::size_t>(i)].projections[0]; };
  auto pr_c = [&](int i) { return out.sums[static_cast<std::size_t>(i)].projections[1]; };

  for (int j = 0; j <= n; ++j) {
    require_ext_vanishes(image(d.diff(j - 1)).module, c.term(j), "degree " + std::to_string(j));
  }

  auto sigma = extend_along(ses.f, c.diff(-1));
  if (!sigma) throw InternalError("horseshoe: no lift of the Y coaugmentation");
  out.lifts.push_back(*sigma);
  std::vector<Module> terms{ses.f.target};
  std::vector<ModMorphism> diffs{in_d(0) * d.diff(-1) * ses.g + in_c(0) * *sigma};
  for (int i = 0; i < n; ++i) {
    const ModMorphism u = i == 0 ? d.diff(-1) * ses.g : d.diff(i - 1);
    const ModMorphism t = -(c.diff(i) * out.lifts.back());
    auto s = extend_along(u, t);
    if (!s) throw InternalError("horseshoe: lifting system unsolvable in degree " + std::to_string(i));
    out.lifts.push_back(*s);
    diffs.push_back(in_d(i + 1) * d.diff(i) * pr_d(i) + in_c(i + 1) * *s * pr_d(i) + in_c(i + 1) * c.diff(i) * pr_c(i));
  }
  for (int i = 0; i <= n; ++i) terms.push_back(out.sums[static_cast<std::size_t>(i)].sum);
  out.middle = ComplexWindow(-1, std::move(terms), std::move(diffs));

  out.is_complex = out.middle.is_complex();
  bool ok = out.middle.diff(-1) * ses.f == in_c(0) * c.diff(-1) && pr_d(0) * out.middle.diff(-1) == d.diff(-1) * ses.g;
  for (int i = 0; i < n && ok; ++i) {
    ok = out.middle.diff(i) * in_c(i) == in_c(i + 1) * c.diff(i) && pr_d(i + 1) * out.middle.diff(i) == d.diff(i) * pr_d(i);
  }
  out.squares_commute = ok;
  out.middle_exact = exact_from_start(out.middle);
  out.side_exact = exact_from_start(c);
  return out;
}

HorseshoeResult horseshoe_glue_left(const ShortExact& ses, const ComplexWindow& e_for_y,
                                    const ComplexWindow& f_for_z) {
  if (!is_short_exact(ses)) throw InvalidInput("horseshoe: the sequence is not short exact");
  if (e_for_y.hi != 0 || f_for_z.hi != 0) throw InvalidInput("horseshoe: columns must end in degree 0");
  const int lo = std::max(e_for_y.lo, f_for_z.lo);
  if (lo > -1) throw InvalidInput("horseshoe: empty column");
  const ComplexWindow e = truncate_left(e_for_y, lo);
  const ComplexWindow f = truncate_left(f_for_z, lo);
  const int len = -lo - 1;  // E_0 .. E_len
  if (!(e.term(0).dims() == ses.f.source.dims()) || !(f.term(0).dims() == ses.g.target.dims())) {
    throw DimensionMismatch("horseshoe: columns do not end at the ends of the sequence");
  }
  if (!f.is_complex()) throw InvalidInput("horseshoe: the Z column is not a complex");
  if (!e.is_complex() || !exact_to_end(e)) throw InvalidInput("horseshoe: the Y column is not exact");

  // E_i sits in degree -i-1; e_i = diff(-i-1), f_i likewise.
  auto e_map = [&](int i) { return e.diff(-i - 1); };
  auto f_map = [&](int i) { return f.diff(-i - 1); };
  HorseshoeResult out;
  for (int i = 0; i <= len; ++i) out.sums.push_back(direct_sum({f.term(-i - 1), e.term(-i - 1)}));
  auto in_f = [&](int i) { return out.sums[static_cast<std::size_t>(i)].injections[0]; };
  auto in_e = [&](int i) { return out.sums[static_cast<std::size_t>(i)].injections[1]; };
  auto pr_f = [&](int i) { return out.sums[static_cast<std::size_t>(i)].projections[0]; };
  auto pr_e = [&](int i) { return out.sums[static_cast<std::size_t>(i)].projections[1]; };

  for (int i = 0; i <= len; ++i) {
    require_ext_vanishes(f.term(-i - 1), image(e_map(i)).module, "degree " + std::to_string(i));
  }

  auto pi0 = lift_along(ses.g, f_map(0));
  if (!pi0) throw InternalError("horseshoe: no lift of the Z augmentation");
  out.lifts.push_back(*pi0);
  // diffs in degree order: d(-len-1) .. d(-1); build from the top end and reverse.
  std::vector<ModMorphism> rev{*pi0 * pr_f(0) + ses.f * e_map(0) * pr_e(0)};
  for (int i = 1; i <= len; ++i) {
    const ModMorphism v = i == 1 ? ses.f * e_map(0) : e_map(i - 1);
    const ModMorphism t = -(out.lifts.back() * f_map(i));
    auto p = lift_along(v, t);
    if (!p) throw InternalError("horseshoe: lifting system unsolvable in degree " + std::to_string(i));
    out.lifts.push_back(*p);
    rev.push_back(in_f(i - 1) * f_map(i) * pr_f(i) + in_e(i - 1) * *p * pr_f(i) + in_e(i - 1) * e_map(i) * pr_e(i));
  }
  std::vector<Module> terms;
  for (int i = len; i >= 0; --i) terms.push_back(out.sums[static_cast<std::size_t>(i)].sum);
  terms.push_back(ses.f.target);
  std::vector<ModMorphism> diffs(rev.rbegin(), rev.rend());
  out.middle = ComplexWindow(lo, std::move(terms), std::move(diffs));

  out.is_complex = out.middle.is_complex();
  auto dm = [&](int i) { return out.middle.diff(-i - 1); };
  bool ok = dm(0) * in_e(0) == ses.f * e_map(0) && ses.g * dm(0) == f_map(0) * pr_f(0);
  for (int i = 1; i <= len && ok; ++i) {
    ok = dm(i) * in_e(i) == in_e(i - 1) * e_map(i) && pr_f(i - 1) * dm(i) == f_map(i) * pr_f(i);
  }
  out.squares_commute = ok;
  out.middle_exact = exact_to_end(out.middle);
  out.side_exact = exact_to_end(f);
  return out;
}

ShortExact random_short_exact(const AlgebraPtr& a, std::size_t max_total, std::mt19937_64& rng) {
  for (;;) {
    Module x = random_module(a, random_dim_vector(a, max_total, rng), rng);
    if (x.is_zero()) continue;
    std::vector<std::size_t> gens;
    std::vector<Mat> images;
    const std::size_t count = 1 + rng() % 2;
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<std::size_t> support;
      for (std::size_t v = 0; v < a->num_vertices(); ++v) {
        if (x.dim(v) > 0) support.push_back(v);
      }
      const std::size_t v = support[rng() % support.size()];
      gens.push_back(v);
      images.push_back(random_column(a->field(), x.dim(v), rng));
    }
    FreeModule fm = FreeModule::make(a, gens);
    ImageResult im = image(morphism_from_free(fm, x, images));
    CokernelResult ck = cokernel(im.inclusion);
    return ShortExact{im.inclusion, ck.projection};
  }
}

ComplexWindow projective_resolution_window(const Module& m, std::size_t length) {
  ProjResolution r = min_proj_resolution(m, length);
  const AlgebraPtr& a = m.algebra();
  std::vector<Module> terms;
  for (std::size_t i = length + 1; i-- > 0;) {
    terms.push_back(i < r.terms.size() ? r.terms[i].module : Module::zero(a));
  }
  terms.push_back(m);
  std::vector<ModMorphism> diffs;
  for (std::size_t i = length; i-- > 0;) {
    // P_{i+1} -> P_i
    const Module& src = terms[length - i - 1];
    const Module& tgt = terms[length - i];
    diffs.push_back(i < r.diffs.size() ? r.diffs[i] : ModMorphism::zero(src, tgt));
  }
  diffs.push_back(r.augmentation);
  return ComplexWindow(-static_cast<int>(length) - 1, std::move(terms), std::move(diffs));
}

HorseshoeInstance random_right_instance(const AlgebraPtr& a, std::size_t length, bool exact, std::mt19937_64& rng,
                                        std::size_t max_total) {
  HorseshoeInstance inst;
  inst.ses = random_short_exact(a, max_total, rng);
  inst.y_side = injective_coresolution(inst.ses.f.source, length);
  inst.z_side = injective_coresolution(inst.ses.g.target, length);
  inst.side_exact = exact;
  if (!exact) {
    const int k = static_cast<int>(rng() % length);
    const std::size_t v = rng() % a->num_vertices();
    inst.y_side = with_stray_summand(inst.y_side, k, indec_injective(a, v));
  }
  return inst;
}

HorseshoeInstance random_left_instance(const AlgebraPtr& a, std::size_t length, bool exact, std::mt19937_64& rng,
                                       std::size_t max_total) {
  HorseshoeInstance inst;
  inst.ses = random_short_exact(a, max_total, rng);
  inst.y_side = projective_resolution_window(inst.ses.f.source, length);
  inst.z_side = projective_resolution_window(inst.ses.g.target, length);
  inst.side_exact = exact;
  if (!exact) {
    const int k = -1 - static_cast<int>(rng() % length);
    const std::size_t v = rng() % a->num_vertices();
    inst.z_side = with_stray_summand(inst.z_side, k, indec_projective(a, v));
  }
  return inst;
}

}  // namespace gproj
