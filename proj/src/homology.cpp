#include "gproj/homology.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "gproj/errors.hpp"

namespace gproj {

KernelResult radical(const Module& m) {
  const Algebra& a = m.alg();
  std::vector<Mat> bases;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    std::vector<Mat> parts;
    for (std::size_t x = 0; x < a.num_arrows(); ++x) {
      if (a.quiver().arrow(x).target == v) parts.push_back(m.map(x));
    }
    std::size_t cols = 0;
    for (const auto& p : parts) cols += p.cols();
    bases.push_back(cols ? Mat::hstack(parts, m.field(), m.dim(v)) : Mat(m.field(), m.dim(v), 0));
  }
  return submodule(m, bases);
}

std::vector<std::vector<Mat>> top_generators(const Module& m) {
  KernelResult rad = radical(m);
  std::vector<std::vector<Mat>> out;
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    Mat comp = complement_columns(rad.inclusion.maps[v]);
    std::vector<Mat> cols;
    for (std::size_t c = 0; c < comp.cols(); ++c) cols.push_back(comp.column(c));
    out.push_back(std::move(cols));
  }
  return out;
}

ProjectiveCover projective_cover(const Module& m) {
  auto tops = top_generators(m);
  std::vector<std::size_t> gens;
  std::vector<Mat> images;
  for (std::size_t v = 0; v < tops.size(); ++v) {
    for (auto& c : tops[v]) {
      gens.push_back(v);
      images.push_back(std::move(c));
    }
  }
  FreeModule f = FreeModule::make(m.algebra(), gens);
  ModMorphism cover = morphism_from_free(f, m, images);
  return {std::move(f), std::move(cover)};
}

std::optional<std::size_t> ProjResolution::length() const {
  if (!finite) return std::nullopt;
  return module.is_zero() ? 0 : terms.size() - 1;
}

ComplexWindow ProjResolution::augmented_window() const {
  std::vector<Module> t;
  std::vector<ModMorphism> d;
  for (std::size_t i = terms.size(); i-- > 0;) t.push_back(terms[i].module);
  t.push_back(module);
  t.push_back(Module::zero(module.algebra()));
  for (std::size_t i = diffs.size(); i-- > 0;) d.push_back(diffs[i]);
  d.push_back(augmentation);
  d.push_back(ModMorphism::zero(module, t.back()));
  return ComplexWindow(-static_cast<int>(terms.size()), std::move(t), std::move(d));
}

ProjResolution min_proj_resolution(const Module& m, std::size_t n) {
  ProjResolution r;
  r.module = m;
  ProjectiveCover c0 = projective_cover(m);
  r.terms.push_back(c0.free);
  r.augmentation = c0.cover;
  ModMorphism last = c0.cover;
  for (std::size_t i = 0;; ++i) {
    KernelResult k = kernel(last);
    r.syzygies.push_back(k.module);
    if (k.module.is_zero()) {
      r.finite = true;
      break;
    }
    if (i == n) break;
    ProjectiveCover c = projective_cover(k.module);
    ModMorphism d = k.inclusion * c.cover;
    r.terms.push_back(c.free);
    r.diffs.push_back(d);
    last = d;
  }
  return r;
}

namespace {

/// Matrix of Hom(P_i, n) -> Hom(P_{i+1}, n), phi |-> phi o d, in Yoneda coordinates.
Mat yoneda_cochain(const FreeModule& src, const FreeModule& tgt, const ModMorphism& d, const Module& n) {
  const Field f = n.field();
  std::vector<std::size_t> row_off{0}, col_off{0};
  for (auto u : src.generators) row_off.push_back(row_off.back() + n.dim(u));
  for (auto v : tgt.generators) col_off.push_back(col_off.back() + n.dim(v));
  Mat out(f, row_off.back(), col_off.back());
  for (const auto& c : free_coefficients(src, tgt, d)) {
    Mat block = n.path_action(c.path).scaled(c.value);
    if (block.rows() && block.cols()) out.add_block(row_off[c.g], col_off[c.j], block);
  }
  return out;
}

std::size_t hom_dim_free(const FreeModule& f, const Module& n) {
  std::size_t s = 0;
  for (auto v : f.generators) s += n.dim(v);
  return s;
}

}  // namespace

std::vector<std::size_t> ext_dims(const ProjResolution& r, const Module& n, std::size_t max_i) {
  require_same_algebra(r.module, n, "ext");
  if (!r.finite && r.terms.size() < max_i + 2) {
    throw InvalidInput("resolution too short for Ext^" + std::to_string(max_i));
  }
  std::vector<std::size_t> ranks;  // ranks[i] = rank of Hom(P_i, n) -> Hom(P_{i+1}, n)
  for (std::size_t i = 0; i <= max_i; ++i) {
    if (i < r.diffs.size()) {
      ranks.push_back(rank(yoneda_cochain(r.terms[i + 1], r.terms[i], r.diffs[i], n)));
    } else {
      ranks.push_back(0);
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= max_i; ++i) {
    const std::size_t h = i < r.terms.size() ? hom_dim_free(r.terms[i], n) : 0;
    out.push_back(h - ranks[i] - (i ? ranks[i - 1] : 0));
  }
  return out;
}

std::size_t ext_dim(const Module& m, const Module& n, std::size_t i) {
  return ext_dims(min_proj_resolution(m, i + 1), n, i)[i];
}

std::optional<std::size_t> pd(const Module& m, std::size_t bound) { return min_proj_resolution(m, bound).length(); }

InjDimRegular injdim_regular(const AlgebraPtr& a, std::size_t bound) {
  InjDimRegular out;
  auto max_pd = [bound](const AlgebraPtr& b) -> std::optional<std::size_t> {
    std::size_t best = 0;
    for (std::size_t v = 0; v < b->num_vertices(); ++v) {
      auto p = pd(indec_injective(b, v), bound);
      if (!p) return std::nullopt;
      best = std::max(best, *p);
    }
    return best;
  };
  out.right = max_pd(a);
  out.left = max_pd(a->opposite());
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

GorensteinInfo is_gorenstein_algebra(const AlgebraPtr& a, std::size_t bound) {
  GorensteinInfo g;
  g.bound = bound;
  g.injdims = injdim_regular(a, bound);
  if (g.injdims.left && g.injdims.right) {
    g.status = Verdict::Yes;
    g.d = std::max(*g.injdims.left, *g.injdims.right);
  }
  return g;
}

std::string GPVerdict::describe() const {
  switch (status) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no (Ext^" + std::to_string(degree) + "(" + (on_transpose ? "Tr M" : "M") + ", regular) has dimension " +
             std::to_string(witness_dim) + ")";
    case Verdict::Unknown:
      return "unknown up to bound " + std::to_string(bound);
  }
  return "unknown";
}

namespace {

std::optional<std::pair<std::size_t, std::size_t>> first_nonzero_ext(const Module& m, std::size_t from,
                                                                     std::size_t to) {
  if (m.is_zero() || to < from) return std::nullopt;
  ProjResolution r = min_proj_resolution(m, to + 1);
  auto e = ext_dims(r, regular_module(m.algebra()), to);
  for (std::size_t i = from; i <= to; ++i) {
    if (e[i]) return std::make_pair(i, e[i]);
  }
  return std::nullopt;
}

}  // namespace

GPVerdict is_gp(const Module& m, const GorensteinInfo& info) {
  GPVerdict v;
  v.bound = info.bound;
  if (m.is_zero()) {
    v.status = Verdict::Yes;
    return v;
  }
  if (info.status == Verdict::Yes) {
    if (auto w = first_nonzero_ext(m, 1, info.d)) {
      v.status = Verdict::No;
      v.degree = w->first;
      v.witness_dim = w->second;
    } else {
      v.status = Verdict::Yes;
    }
    return v;
  }
  if (auto w = first_nonzero_ext(m, 1, info.bound)) {
    v.status = Verdict::No;
    v.degree = w->first;
    v.witness_dim = w->second;
    return v;
  }
  if (auto w = first_nonzero_ext(transpose(m), 1, info.bound)) {
    v.status = Verdict::No;
    v.degree = w->first;
    v.witness_dim = w->second;
    v.on_transpose = true;
    return v;
  }
  v.status = Verdict::Unknown;
  return v;
}

GPVerdict is_gp(const Module& m, std::size_t bound) { return is_gp(m, is_gorenstein_algebra(m.algebra(), bound)); }

StarDual star(const Module& m) {
  const AlgebraPtr& a = m.algebra();
  const AlgebraPtr op = a->opposite();
  StarDual s;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    s.components.push_back(hom_space(m, indec_projective(a, v)));
    dims.push_back(s.components.back().dim());
  }
  std::vector<Mat> maps;
  for (std::size_t x = 0; x < a->num_arrows(); ++x) {
    const auto& arr = a->quiver().arrow(x);
    // Right multiplication by x: P(t) -> P(s), e_t |-> x.
    FreeModule pt = FreeModule::make(a, {arr.target});
    FreeModule ps = FreeModule::make(a, {arr.source});
    ModMorphism rho =
        morphism_from_free(pt, ps.module, {Mat::unit_column(a->field(), ps.module.dim(arr.target),
                                                            ps.position(0, a->arrow_path(x)))});
    const HomSpace& from = s.components[arr.target];
    const HomSpace& to = s.components[arr.source];
    Mat mat(a->field(), to.dim(), from.dim());
    for (std::size_t k = 0; k < from.dim(); ++k) {
      auto c = to.coordinates(rho * from.basis[k]);
      if (!c) throw InternalError("star: composite outside the hom space");
      mat.set_block(0, k, *c);
    }
    maps.push_back(std::move(mat));
  }
  s.module = Module(op, dims, std::move(maps));
  return s;
}

Module transpose(const Module& m) {
  const AlgebraPtr op = m.alg().opposite();
  ProjResolution r = min_proj_resolution(m, 1);
  if (r.diffs.empty()) return Module::zero(op);
  DualMap d = dualize(r.terms[1], r.terms[0], r.diffs[0], op);
  return cokernel(d.map).module;
}

Coresolution proj_coresolution(const Module& m, std::size_t n) {
  const AlgebraPtr& a = m.algebra();
  StarDual s = star(m);
  ProjResolution r = min_proj_resolution(s.module, n);
  Coresolution c;
  const FreeModule& p0 = r.terms[0];
  c.terms.push_back(FreeModule::make(a, p0.generators));
  std::vector<Mat> iota(a->num_vertices());
  std::vector<std::vector<Mat>> rows(a->num_vertices());
  for (std::size_t j = 0; j < p0.rank(); ++j) {
    const std::size_t v = p0.generators[j];
    ModMorphism fj = s.components[v].combination(generator_image(p0, r.augmentation, j));
    for (std::size_t w = 0; w < a->num_vertices(); ++w) rows[w].push_back(fj.maps[w]);
  }
  for (std::size_t w = 0; w < a->num_vertices(); ++w) {
    iota[w] = Mat::vstack(rows[w], a->field(), m.dim(w));
  }
  c.coaugmentation = ModMorphism(m, c.terms[0].module, std::move(iota));
  for (std::size_t i = 0; i < n; ++i) {
    if (i < r.diffs.size()) {
      DualMap d = dualize(r.terms[i + 1], r.terms[i], r.diffs[i], a);
      c.terms.push_back(d.target);
      c.diffs.push_back(ModMorphism(c.terms[i].module, d.target.module, d.map.maps));
    } else {
      c.terms.push_back(FreeModule::make(a, {}));
      c.diffs.push_back(ModMorphism::zero(c.terms[i].module, c.terms[i + 1].module));
    }
  }
  return c;
}

ComplexWindow candidate_complete_resolution(const Module& m, int w) {
  if (w < 1) throw InvalidInput("window must be at least 1");
  const AlgebraPtr& a = m.algebra();
  const std::size_t uw = static_cast<std::size_t>(w);
  ProjResolution left = min_proj_resolution(m, uw - 1);
  Coresolution right = proj_coresolution(m, uw);
  const Module zero = Module::zero(a);
  auto p = [&](std::size_t k) -> const Module& { return k < left.terms.size() ? left.terms[k].module : zero; };
  std::vector<Module> terms;
  std::vector<ModMorphism> diffs;
  for (std::size_t k = uw; k >= 1; --k) terms.push_back(p(k - 1));
  for (std::size_t k = 0; k <= uw; ++k) terms.push_back(right.terms[k].module);
  // Degrees -w .. -2: P_{k-1} -> P_{k-2}.
  for (std::size_t k = uw; k >= 2; --k) {
    if (k - 2 < left.diffs.size()) {
      diffs.push_back(left.diffs[k - 2]);
    } else {
      diffs.push_back(ModMorphism::zero(p(k - 1), p(k - 2)));
    }
  }
  diffs.push_back(right.coaugmentation * left.augmentation);
  for (std::size_t k = 0; k < uw; ++k) diffs.push_back(right.diffs[k]);
  return ComplexWindow(-w, std::move(terms), std::move(diffs));
}

ComplexWindow complete_resolution(const Module& m, int w, std::size_t bound) {
  GPVerdict v = is_gp(m, bound);
  if (v.status != Verdict::Yes) {
    throw HypothesisFailed("module " + m.dims_string() + " is not Gorenstein projective: " + v.describe());
  }
  return candidate_complete_resolution(m, w);
}

bool StableHom::is_stably_zero(const ModMorphism& f) const {
  auto c = hom.coordinates(f);
  if (!c) throw InvalidInput("morphism outside the hom space");
  return columns_in_span(factoring, *c);
}

ComplexWindow injective_coresolution(const Module& m, std::size_t n) {
  const AlgebraPtr& a = m.algebra();
  ProjResolution r = min_proj_resolution(dual_module(m), n);
  std::vector<Module> terms{m};
  std::vector<ModMorphism> diffs;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i < r.terms.size()) {
      terms.push_back(dual_module(r.terms[i].module, a));
    } else {
      terms.push_back(Module::zero(a));
    }
  }
  diffs.push_back(dual_morphism(r.augmentation, a));
  for (std::size_t i = 0; i < n; ++i) {
    if (i < r.diffs.size()) {
      diffs.push_back(dual_morphism(r.diffs[i], a));
    } else {
      diffs.push_back(ModMorphism::zero(terms[i + 1], terms[i + 2]));
    }
  }
  return ComplexWindow(-1, std::move(terms), std::move(diffs));
}

StableHom stable_hom(const Module& m, const Module& n) {
  StableHom s;
  s.hom = hom_space(m, n);
  ProjectiveCover pc = projective_cover(n);
  HomSpace through = hom_space(m, pc.free.module);
  std::vector<Mat> cols;
  for (const auto& g : through.basis) {
    auto c = s.hom.coordinates(pc.cover * g);
    if (!c) throw InternalError("stable_hom: composite outside the hom space");
    cols.push_back(std::move(*c));
  }
  Mat all = cols.empty() ? Mat(m.field(), s.hom.dim(), 0) : Mat::hstack(cols, m.field(), s.hom.dim());
  s.factoring = column_space_basis(all);
  s.stable_dim = s.hom.dim() - s.factoring.cols();
  return s;
}

bool is_projective(const Module& m) { return projective_cover(m).free.module.total_dim() == m.total_dim(); }

std::optional<std::size_t> global_dimension(const AlgebraPtr& a, std::size_t bound) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    auto p = pd(simple_module(a, v), bound);
    if (!p) return std::nullopt;
    best = std::max(best, *p);
  }
  return best;
}

namespace {

std::string rank_key(const Module& m) {
  std::string key = m.dims_string() + ":";
  for (std::size_t p = 0; p < m.alg().dim(); ++p) key += std::to_string(rank(m.path_action(p))) + ",";
  return key;
}

/// Nonzero vectors of F_q^k, or, when normalized, those whose first nonzero entry is 1.
std::vector<Mat> nonzero_vectors(Field f, std::size_t k, bool normalized) {
  const std::uint32_t q = f.characteristic();
  std::vector<Mat> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= q;
  if (total > 100000) throw BudgetExceeded("extension space of dimension " + std::to_string(k) + " is too large");
  for (std::uint64_t code = 1; code < total; ++code) {
    Mat v(f, k, 1);
    std::uint64_t c = code;
    std::optional<std::uint32_t> lead;
    for (std::size_t i = 0; i < k; ++i) {
      const auto digit = static_cast<std::uint32_t>(c % q);
      c /= q;
      if (digit && !lead) lead = digit;
      v.set(i, 0, FieldScalar::residue(f, digit));
    }
    if (normalized && lead != 1u) continue;
    out.push_back(std::move(v));
  }
  return out;
}

/// Ext^1(S(v), X) realized inside Hom(rad P(v), X): a basis of a complement to the
/// restrictions of maps P(v) -> X.
struct ExtData {
  HomSpace hom;
  Mat complement;  // columns in hom coordinates
};

}  // namespace

std::vector<Module> indecomposable_classes(const AlgebraPtr& a, std::size_t max_total_dim, std::size_t max_classes) {
  const Field f = a->field();
  if (!f.is_prime() || f.characteristic() > 3) {
    throw InvalidInput("indecomposable classification runs over F_2 or F_3");
  }
  const std::size_t nv = a->num_vertices();
  std::vector<FreeModule> pv;
  std::vector<KernelResult> rad;
  for (std::size_t v = 0; v < nv; ++v) {
    pv.push_back(FreeModule::make(a, {v}));
    rad.push_back(radical(pv.back().module));
  }
  std::vector<Module> classes;
  std::vector<std::vector<std::optional<ExtData>>> ext;  // [class][vertex]
  auto ext_of = [&](std::size_t c, std::size_t v) -> const std::optional<ExtData>& {
    auto& slot = ext[c][v];
    if (slot) return slot;
    const Module& x = classes[c];
    ExtData d{hom_space(rad[v].module, x), Mat(f, 0, 0)};
    std::vector<Mat> cols;
    for (std::size_t i = 0; i < x.dim(v); ++i) {
      ModMorphism g = morphism_from_free(pv[v], x, {Mat::unit_column(f, x.dim(v), i)}) * rad[v].inclusion;
      auto c2 = d.hom.coordinates(g);
      if (!c2) throw InternalError("restriction outside the hom space");
      cols.push_back(std::move(*c2));
    }
    Mat image = cols.empty() ? Mat(f, d.hom.dim(), 0) : Mat::hstack(cols, f, d.hom.dim());
    d.complement = complement_columns(column_space_basis(image));
    slot = std::move(d);
    return slot;
  };
  std::map<std::string, std::vector<std::size_t>> buckets;
  auto add_class = [&](Module m) -> bool {
    auto& b = buckets[rank_key(m)];
    for (auto idx : b) {
      if (isomorphic_indecomposables(classes[idx], m)) return false;
    }
    if (classes.size() >= max_classes) {
      throw BudgetExceeded("more than " + std::to_string(max_classes) + " indecomposable classes");
    }
    b.push_back(classes.size());
    classes.push_back(std::move(m));
    ext.emplace_back(nv);
    return true;
  };
  if (max_total_dim == 0) return classes;
  for (std::size_t v = 0; v < nv; ++v) add_class(simple_module(a, v));
  for (std::size_t n = 2; n <= max_total_dim; ++n) {
    const std::size_t known = classes.size();
    for (std::size_t v = 0; v < nv; ++v) {
      // Only summands with a nonzero extension component can occur in an indecomposable middle term.
      std::vector<std::size_t> usable;
      for (std::size_t c = 0; c < known; ++c) {
        if (classes[c].total_dim() <= n - 1 && ext_of(c, v)->complement.cols() > 0) usable.push_back(c);
      }
      std::vector<std::size_t> chosen;
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t remaining) {
        if (remaining == 0) {
          std::vector<Module> parts;
          std::vector<std::vector<Mat>> choices;
          for (std::size_t i = 0; i < chosen.size(); ++i) {
            const ExtData& d = *ext_of(chosen[i], v);
            parts.push_back(classes[chosen[i]]);
            std::vector<Mat> vecs;
            for (auto& c : nonzero_vectors(f, d.complement.cols(), i == 0)) vecs.push_back(d.complement * c);
            choices.push_back(std::move(vecs));
          }
          DirectSum ds = direct_sum(a, parts);
          std::vector<std::size_t> pick(chosen.size(), 0);
          while (true) {
            ModMorphism omega = ModMorphism::zero(rad[v].module, ds.sum);
            for (std::size_t i = 0; i < chosen.size(); ++i) {
              const ExtData& d = *ext_of(chosen[i], v);
              ModMorphism part = d.hom.combination(choices[i][pick[i]]);
              omega = omega + ds.injections[i] * part;
            }
            DirectSum mid = direct_sum(a, {ds.sum, pv[v].module});
            ModMorphism into = mid.injections[0] * omega - mid.injections[1] * rad[v].inclusion;
            Module e = cokernel(into).module;
            if (is_indecomposable(e)) add_class(std::move(e));
            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
            if (i == pick.size()) break;
          }
          return;
        }
        for (std::size_t k = start; k < usable.size(); ++k) {
          const std::size_t d = classes[usable[k]].total_dim();
          if (d > remaining) continue;
          chosen.push_back(usable[k]);
          rec(k, remaining - d);
          chosen.pop_back();
        }
      };
      rec(0, n - 1);
    }
  }
  std::stable_sort(classes.begin(), classes.end(),
                   [](const Module& l, const Module& r) { return l.total_dim() < r.total_dim(); });
  return classes;
}

std::string CMFreeReport::describe() const {
  if (certified_all_dimensions) {
    return "CM-free (finite global dimension " + std::to_string(global_dimension.value_or(0)) + ")";
  }
  if (!cm_free) return "not CM-free, witness " + (witness ? witness->dims_string() : std::string("?"));
  return "CM-free up to total dimension " + std::to_string(max_total_dim) + " (" + std::to_string(checked_classes) +
         " indecomposable classes checked)";
}

CMFreeReport is_cm_free(const AlgebraPtr& a, std::size_t max_total_dim, std::size_t bound) {
  CMFreeReport rep;
  rep.max_total_dim = max_total_dim;
  rep.global_dimension = global_dimension(a, bound);
  if (rep.global_dimension) {
    rep.certified_all_dimensions = true;
    return rep;
  }
  GorensteinInfo info = is_gorenstein_algebra(a, bound);
  for (const auto& m : indecomposable_classes(a, max_total_dim)) {
    ++rep.checked_classes;
    if (is_projective(m)) continue;
    if (is_gp(m, info).status == Verdict::Yes) {
      rep.cm_free = false;
      rep.witness = m;
      return rep;
    }
  }
  return rep;
}

}  // namespace gproj
