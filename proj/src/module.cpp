#include "gproj/module.hpp"

#include <algorithm>
#include <numeric>

#include "gproj/errors.hpp"

namespace gproj {

Module::Module(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Mat> maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!algebra_) throw InvalidInput("module without an algebra");
  const Quiver& q = algebra_->quiver();
  if (dims_.size() != q.num_vertices()) throw DimensionMismatch("dimension vector has the wrong length");
  if (maps_.size() != q.num_arrows()) throw DimensionMismatch("module needs one matrix per arrow");
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Mat& m = maps_[a];
    if (m.field() != algebra_->field()) {
      throw FieldMismatch("matrix for arrow " + q.arrow(a).name + " is over " + m.field().name());
    }
    if (m.rows() != dims_[q.arrow(a).target] || m.cols() != dims_[q.arrow(a).source]) {
      throw DimensionMismatch("matrix for arrow " + q.arrow(a).name + " has shape " + std::to_string(m.rows()) +
                              "x" + std::to_string(m.cols()));
    }
  }
}

Module Module::zero(AlgebraPtr algebra) {
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < algebra->num_arrows(); ++a) maps.emplace_back(algebra->field(), 0, 0);
  std::vector<std::size_t> dims(algebra->num_vertices(), 0);
  return Module(std::move(algebra), std::move(dims), std::move(maps));
}

std::size_t Module::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

Mat Module::path_action(const std::vector<std::size_t>& arrows, std::size_t source) const {
  Mat m = Mat::identity(field(), dims_.at(source));
  for (auto a : arrows) m = maps_.at(a) * m;
  return m;
}

Mat Module::path_action(std::size_t p) const {
  const Path& path = alg().path(p);
  return path_action(path.arrows, path.source);
}

std::string Module::dims_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dims_[i]);
  }
  return s + ")";
}

ValidationReport validate(const Module& m) {
  const Algebra& a = m.alg();
  for (std::size_t r = 0; r < a.relations().size(); ++r) {
    const auto& rel = a.relations()[r];
    if (!m.path_action(rel, a.quiver().arrow(rel.front()).source).is_zero()) {
      return {false, "relation '" + a.relation_label(r) + "' does not vanish"};
    }
  }
  return {};
}

void require_same_algebra(const Module& a, const Module& b, const char* op) {
  if (!a.alg().same_as(b.alg())) throw InvalidInput(std::string(op) + ": modules over different algebras");
}

ModMorphism::ModMorphism(Module src, Module tgt, std::vector<Mat> m)
    : source(std::move(src)), target(std::move(tgt)), maps(std::move(m)) {
  require_same_algebra(source, target, "morphism");
  if (maps.size() != source.dims().size()) throw DimensionMismatch("morphism needs one matrix per vertex");
  for (std::size_t v = 0; v < maps.size(); ++v) {
    if (maps[v].rows() != target.dim(v) || maps[v].cols() != source.dim(v)) {
      throw DimensionMismatch("morphism matrix at vertex " + source.alg().quiver().vertex_name(v) +
                              " has the wrong shape");
    }
  }
}

ModMorphism ModMorphism::identity(const Module& m) {
  std::vector<Mat> maps;
  for (auto d : m.dims()) maps.push_back(Mat::identity(m.field(), d));
  return ModMorphism(m, m, std::move(maps));
}

ModMorphism ModMorphism::zero(const Module& src, const Module& tgt) {
  std::vector<Mat> maps;
  for (std::size_t v = 0; v < src.dims().size(); ++v) maps.emplace_back(src.field(), tgt.dim(v), src.dim(v));
  return ModMorphism(src, tgt, std::move(maps));
}

bool ModMorphism::is_valid() const {
  const Quiver& q = source.alg().quiver();
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& arr = q.arrow(a);
    if (target.map(a) * maps[arr.source] != maps[arr.target] * source.map(a)) return false;
  }
  return true;
}

bool ModMorphism::is_zero() const {
  return std::all_of(maps.begin(), maps.end(), [](const Mat& m) { return m.is_zero(); });
}

bool ModMorphism::is_injective() const {
  for (const auto& m : maps) {
    if (gproj::rank(m) != m.cols()) return false;
  }
  return true;
}

bool ModMorphism::is_surjective() const {
  for (const auto& m : maps) {
    if (gproj::rank(m) != m.rows()) return false;
  }
  return true;
}

bool ModMorphism::is_iso() const {
  return std::all_of(maps.begin(), maps.end(), [](const Mat& m) { return is_invertible(m); });
}

std::size_t ModMorphism::rank() const {
  std::size_t r = 0;
  for (const auto& m : maps) r += gproj::rank(m);
  return r;
}

ModMorphism ModMorphism::operator*(const ModMorphism& o) const {
  if (o.target.dims() != source.dims()) throw DimensionMismatch("composition of non-composable morphisms");
  std::vector<Mat> m;
  for (std::size_t v = 0; v < maps.size(); ++v) m.push_back(maps[v] * o.maps[v]);
  return ModMorphism(o.source, target, std::move(m));
}

ModMorphism ModMorphism::operator+(const ModMorphism& o) const {
  std::vector<Mat> m;
  for (std::size_t v = 0; v < maps.size(); ++v) m.push_back(maps[v] + o.maps.at(v));
  return ModMorphism(source, target, std::move(m));
}

ModMorphism ModMorphism::operator-(const ModMorphism& o) const {
  std::vector<Mat> m;
  for (std::size_t v = 0; v < maps.size(); ++v) m.push_back(maps[v] - o.maps.at(v));
  return ModMorphism(source, target, std::move(m));
}

ModMorphism ModMorphism::operator-() const { return scaled(FieldScalar(source.field(), -1)); }

ModMorphism ModMorphism::scaled(const FieldScalar& s) const {
  std::vector<Mat> m;
  for (const auto& x : maps) m.push_back(x.scaled(s));
  return ModMorphism(source, target, std::move(m));
}

bool ModMorphism::operator==(const ModMorphism& o) const { return maps == o.maps; }

Mat ModMorphism::flatten() const {
  std::vector<Mat> parts;
  for (const auto& m : maps) parts.push_back(m.vectorize());
  return Mat::vstack(parts, source.field(), 1);
}

DirectSum direct_sum(const AlgebraPtr& algebra, const std::vector<Module>& parts) {
  const Field f = algebra->field();
  const Quiver& q = algebra->quiver();
  const std::size_t nv = q.num_vertices();
  std::vector<std::size_t> dims(nv, 0);
  for (const auto& p : parts) {
    if (!p.alg().same_as(*algebra)) throw InvalidInput("direct_sum: summand over a different algebra");
    for (std::size_t v = 0; v < nv; ++v) dims[v] += p.dim(v);
  }
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    std::vector<Mat> blocks;
    for (const auto& p : parts) blocks.push_back(p.map(a));
    maps.push_back(Mat::block_diagonal(blocks, f));
  }
  DirectSum ds;
  ds.sum = Module(algebra, dims, std::move(maps));
  std::vector<std::size_t> offset(nv, 0);
  for (const auto& p : parts) {
    std::vector<Mat> inj, proj;
    for (std::size_t v = 0; v < nv; ++v) {
      Mat i(f, dims[v], p.dim(v));
      i.set_block(offset[v], 0, Mat::identity(f, p.dim(v)));
      proj.push_back(i.transpose());
      inj.push_back(std::move(i));
      offset[v] += p.dim(v);
    }
    ds.injections.emplace_back(p, ds.sum, std::move(inj));
    ds.projections.emplace_back(ds.sum, p, std::move(proj));
  }
  return ds;
}

DirectSum direct_sum(const std::vector<Module>& parts) {
  if (parts.empty()) throw InvalidInput("direct_sum of no modules needs an algebra");
  return direct_sum(parts.front().algebra(), parts);
}

ModMorphism direct_sum_morphism(const std::vector<ModMorphism>& parts) {
  if (parts.empty()) throw InvalidInput("direct_sum_morphism of no morphisms");
  std::vector<Module> src, tgt;
  for (const auto& p : parts) {
    src.push_back(p.source);
    tgt.push_back(p.target);
  }
  const auto& alg = parts.front().source.algebra();
  Module s = direct_sum(alg, src).sum;
  Module t = direct_sum(alg, tgt).sum;
  std::vector<Mat> maps;
  for (std::size_t v = 0; v < alg->num_vertices(); ++v) {
    std::vector<Mat> blocks;
    for (const auto& p : parts) blocks.push_back(p.maps[v]);
    maps.push_back(Mat::block_diagonal(blocks, alg->field()));
  }
  return ModMorphism(s, t, std::move(maps));
}

KernelResult submodule(const Module& m, const std::vector<Mat>& bases) {
  const Quiver& q = m.alg().quiver();
  std::vector<Mat> b;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    b.push_back(column_space_basis(bases.at(v)));
    dims.push_back(b.back().cols());
  }
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& arr = q.arrow(a);
    auto x = solve(b[arr.target], m.map(a) * b[arr.source]);
    if (!x) throw InvalidInput("subspaces are not closed under arrow " + arr.name);
    maps.push_back(std::move(*x));
  }
  Module sub(m.algebra(), dims, std::move(maps));
  return {sub, ModMorphism(sub, m, std::move(b))};
}

CokernelResult quotient(const Module& m, const std::vector<Mat>& sub) {
  const Quiver& q = m.alg().quiver();
  std::vector<Quotient> qs;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    qs.push_back(quotient_by(sub.at(v), m.dim(v)));
    dims.push_back(qs.back().projection.rows());
  }
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& arr = q.arrow(a);
    if (!(qs[arr.target].projection * m.map(a) * sub[arr.source]).is_zero()) {
      throw InvalidInput("quotient by a non-invariant subspace at arrow " + arr.name);
    }
    maps.push_back(qs[arr.target].projection * m.map(a) * qs[arr.source].section);
  }
  Module quo(m.algebra(), dims, std::move(maps));
  std::vector<Mat> proj, sec;
  for (auto& x : qs) {
    proj.push_back(std::move(x.projection));
    sec.push_back(std::move(x.section));
  }
  return {quo, ModMorphism(m, quo, std::move(proj)), std::move(sec)};
}

KernelResult kernel(const ModMorphism& f) {
  std::vector<Mat> bases;
  for (const auto& m : f.maps) bases.push_back(kernel_basis(m));
  return submodule(f.source, bases);
}

CokernelResult cokernel(const ModMorphism& f) { return quotient(f.target, f.maps); }

ImageResult image(const ModMorphism& f) {
  std::vector<Mat> bases;
  for (const auto& m : f.maps) bases.push_back(column_space_basis(m));
  KernelResult sub = submodule(f.target, bases);
  std::vector<Mat> co;
  for (std::size_t v = 0; v < f.maps.size(); ++v) {
    auto x = solve(sub.inclusion.maps[v], f.maps[v]);
    if (!x) throw InternalError("image: corestriction failed");
    co.push_back(std::move(*x));
  }
  return {sub.module, sub.inclusion, ModMorphism(f.source, sub.module, std::move(co))};
}

ModMorphism HomSpace::combination(const Mat& coeffs) const {
  ModMorphism out = ModMorphism::zero(source, target);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs.is_zero_at(i, 0)) continue;
    const FieldScalar c = coeffs.at(i, 0);
    for (std::size_t v = 0; v < out.maps.size(); ++v) out.maps[v].add_scaled(basis[i].maps[v], c);
  }
  return out;
}

std::optional<Mat> HomSpace::coordinates(const ModMorphism& f) const { return solve(coords, f.flatten()); }

HomSpace hom_space(const Module& m, const Module& n) {
  require_same_algebra(m, n, "hom_space");
  const Field f = m.field();
  const Quiver& q = m.alg().quiver();
  const std::size_t nv = q.num_vertices();
  std::vector<std::size_t> off(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dim(v) * m.dim(v);
  std::size_t rows = 0;
  for (const auto& arr : q.arrows()) rows += n.dim(arr.target) * m.dim(arr.source);
  Mat eq(f, rows, off[nv]);
  std::size_t r = 0;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& arr = q.arrow(a);
    const std::size_t ns = n.dim(arr.source), nt = n.dim(arr.target);
    const std::size_t ms = m.dim(arr.source), mt = m.dim(arr.target);
    if (nt * ms == 0) continue;
    if (ns > 0 && ms > 0) eq.add_block(r, off[arr.source], Mat::kron(n.map(a), Mat::identity(f, ms)));
    if (mt > 0) eq.add_block(r, off[arr.target], -Mat::kron(Mat::identity(f, nt), m.map(a).transpose()));
    r += nt * ms;
  }
  HomSpace h;
  h.source = m;
  h.target = n;
  h.coords = kernel_basis(eq);
  for (std::size_t k = 0; k < h.coords.cols(); ++k) {
    std::vector<Mat> maps;
    for (std::size_t v = 0; v < nv; ++v) {
      maps.push_back(Mat::from_vector(h.coords.block(off[v], k, off[v + 1] - off[v], 1), n.dim(v), m.dim(v)));
    }
    h.basis.emplace_back(m, n, std::move(maps));
  }
  return h;
}

namespace {

FieldScalar random_scalar(Field f, std::mt19937_64& rng) {
  if (f.is_prime()) return FieldScalar::residue(f, static_cast<std::uint32_t>(rng() % f.characteristic()));
  return FieldScalar(f, static_cast<long long>(rng() % 7) - 3);
}

Mat random_coeffs(Field f, std::size_t n, std::mt19937_64& rng) {
  Mat c(f, n, 1);
  for (std::size_t i = 0; i < n; ++i) c.set(i, 0, random_scalar(f, rng));
  return c;
}

bool vertexwise_invertible(const std::vector<Mat>& maps) {
  return std::all_of(maps.begin(), maps.end(), [](const Mat& m) { return is_invertible(m); });
}

/// Visits every coefficient vector of F_q^d, keeping the running combination
/// of the basis maps up to date with one update per step (amortized).
template <typename Visit>
bool for_each_combination(const std::vector<ModMorphism>& basis, const Module& src, const Module& tgt,
                          Visit&& visit) {
  const Field f = src.field();
  const std::uint32_t q = f.characteristic();
  const std::size_t d = basis.size();
  std::vector<std::uint32_t> digits(d, 0);
  ModMorphism cur = ModMorphism::zero(src, tgt);
  const FieldScalar one(f, 1);
  const FieldScalar wrap(f, -static_cast<long long>(q - 1));
  while (true) {
    if (visit(cur)) return true;
    std::size_t i = 0;
    while (i < d && digits[i] == q - 1) {
      digits[i] = 0;
      for (std::size_t v = 0; v < cur.maps.size(); ++v) cur.maps[v].add_scaled(basis[i].maps[v], wrap);
      ++i;
    }
    if (i == d) return false;
    ++digits[i];
    for (std::size_t v = 0; v < cur.maps.size(); ++v) cur.maps[v].add_scaled(basis[i].maps[v], one);
  }
}

constexpr double kExhaustiveBudget = 5e6;

bool exhaustive_allowed(Field f, std::size_t d, std::size_t max_dim) {
  if (!f.is_prime() || f.characteristic() > 3 || d > max_dim) return false;
  double count = 1;
  for (std::size_t i = 0; i < d; ++i) count *= f.characteristic();
  return count <= kExhaustiveBudget;
}

bool path_rank_profile_differs(const Module& m, const Module& n) {
  const Algebra& a = m.alg();
  for (std::size_t p = 0; p < a.dim(); ++p) {
    if (rank(m.path_action(p)) != rank(n.path_action(p))) return true;
  }
  return false;
}

struct IsoSearch {
  std::optional<ModMorphism> iso;
  bool decided = false;
};

IsoSearch search_isomorphism(const Module& m, const Module& n, std::uint64_t seed) {
  require_same_algebra(m, n, "is_isomorphic");
  if (m.dims() != n.dims()) return {std::nullopt, true};
  if (m.is_zero()) return {ModMorphism::identity(m), true};
  if (path_rank_profile_differs(m, n)) return {std::nullopt, true};
  HomSpace h = hom_space(m, n);
  if (h.dim() == 0) return {std::nullopt, true};
  const Field f = m.field();
  std::mt19937_64 rng(seed);
  for (int draw = 0; draw < 200; ++draw) {
    ModMorphism g = h.combination(random_coeffs(f, h.dim(), rng));
    if (vertexwise_invertible(g.maps)) return {g, true};
  }
  HomSpace back = hom_space(n, m);
  for (const auto& fb : h.basis) {
    for (const auto& gb : back.basis) {
      if ((gb * fb).is_iso()) return {fb, true};
    }
  }
  if (hom_space(m, m).dim() != h.dim() || hom_space(n, n).dim() != h.dim()) return {std::nullopt, true};
  if (exhaustive_allowed(f, h.dim(), 12)) {
    std::optional<ModMorphism> found;
    for_each_combination(h.basis, m, n, [&](const ModMorphism& g) {
      if (vertexwise_invertible(g.maps)) {
        found = g;
        return true;
      }
      return false;
    });
    return {found, true};
  }
  return {std::nullopt, false};
}

}  // namespace

std::optional<ModMorphism> find_isomorphism(const Module& m, const Module& n, std::uint64_t seed) {
  return search_isomorphism(m, n, seed).iso;
}

bool is_isomorphic(const Module& m, const Module& n, std::uint64_t seed) {
  IsoSearch s = search_isomorphism(m, n, seed);
  if (!s.decided) {
    throw Inconclusive("isomorphism search for modules of dimension vector " + m.dims_string() +
                       " ended without a certificate");
  }
  return s.iso.has_value();
}

bool isomorphic_indecomposables(const Module& m, const Module& n) {
  require_same_algebra(m, n, "isomorphic_indecomposables");
  if (m.dims() != n.dims()) return false;
  if (path_rank_profile_differs(m, n)) return false;
  HomSpace there = hom_space(m, n);
  if (there.dim() == 0) return false;
  HomSpace back = hom_space(n, m);
  for (const auto& f : there.basis) {
    for (const auto& g : back.basis) {
      if ((g * f).is_iso()) return true;
    }
  }
  return false;
}

namespace {

bool is_nilpotent(const ModMorphism& f) {
  for (const auto& m : f.maps) {
    Mat p = m;
    for (std::size_t i = 1; i < m.rows() && !p.is_zero(); ++i) p = p * m;
    if (!p.is_zero()) return false;
  }
  return true;
}

}  // namespace

bool is_indecomposable(const Module& m, std::uint64_t seed) {
  if (m.is_zero()) return false;
  HomSpace end = hom_space(m, m);
  if (end.dim() == 1) return true;
  const Field f = m.field();
  std::mt19937_64 rng(seed);
  for (int draw = 0; draw < 200; ++draw) {
    ModMorphism g = end.combination(random_coeffs(f, end.dim(), rng));
    if (!g.is_iso() && !is_nilpotent(g)) return false;
  }
  if (!exhaustive_allowed(f, end.dim(), 14)) {
    throw BudgetExceeded("indecomposability test needs F_2 or F_3 and a small endomorphism ring; dim End = " +
                         std::to_string(end.dim()) + " over " + f.name());
  }
  std::vector<Mat> probes;
  for (auto d : m.dims()) probes.push_back(random_coeffs(f, d, rng));
  const bool split = for_each_combination(end.basis, m, m, [&](const ModMorphism& e) {
    for (std::size_t v = 0; v < e.maps.size(); ++v) {
      const Mat ex = e.maps[v] * probes[v];
      if (e.maps[v] * ex != ex) return false;
    }
    bool zero = true, ident = true;
    for (const auto& x : e.maps) {
      if (x * x != x) return false;
      zero = zero && x.is_zero();
      ident = ident && x.is_identity();
    }
    return !zero && !ident;
  });
  return !split;
}

Module indec_projective(const AlgebraPtr& a, std::size_t v) {
  if (v >= a->num_vertices()) throw InvalidInput("unknown vertex index " + std::to_string(v));
  const Quiver& q = a->quiver();
  const std::size_t nv = q.num_vertices();
  std::vector<std::vector<std::size_t>> at(nv);
  std::vector<std::size_t> pos(a->dim(), 0);
  for (auto p : a->paths_from(v)) {
    const std::size_t w = a->path(p).target;
    pos[p] = at[w].size();
    at[w].push_back(p);
  }
  std::vector<std::size_t> dims;
  for (const auto& l : at) dims.push_back(l.size());
  std::vector<Mat> maps;
  for (std::size_t x = 0; x < q.num_arrows(); ++x) {
    const auto& arr = q.arrow(x);
    Mat m(a->field(), dims[arr.target], dims[arr.source]);
    for (std::size_t j = 0; j < at[arr.source].size(); ++j) {
      if (auto e = a->extend(at[arr.source][j], x)) m.set(pos[*e], j, 1);
    }
    maps.push_back(std::move(m));
  }
  return Module(a, dims, std::move(maps));
}

Module indec_injective(const AlgebraPtr& a, std::size_t v) {
  if (v >= a->num_vertices()) throw InvalidInput("unknown vertex index " + std::to_string(v));
  const Quiver& q = a->quiver();
  const std::size_t nv = q.num_vertices();
  std::vector<std::vector<std::size_t>> at(nv);
  std::vector<std::size_t> pos(a->dim(), 0);
  for (auto p : a->paths_to(v)) {
    const std::size_t w = a->path(p).source;
    pos[p] = at[w].size();
    at[w].push_back(p);
  }
  std::vector<std::size_t> dims;
  for (const auto& l : at) dims.push_back(l.size());
  std::vector<Mat> maps;
  for (std::size_t x = 0; x < q.num_arrows(); ++x) {
    const auto& arr = q.arrow(x);
    Mat m(a->field(), dims[arr.target], dims[arr.source]);
    // The dual basis vector of p maps to the sum of the duals of all p' with p' x = p.
    for (std::size_t i = 0; i < at[arr.target].size(); ++i) {
      if (auto prod = a->multiply(at[arr.target][i], a->arrow_path(x))) m.set(i, pos[*prod], 1);
    }
    maps.push_back(std::move(m));
  }
  return Module(a, dims, std::move(maps));
}

Module simple_module(const AlgebraPtr& a, std::size_t v) {
  if (v >= a->num_vertices()) throw InvalidInput("unknown vertex index " + std::to_string(v));
  std::vector<std::size_t> dims(a->num_vertices(), 0);
  dims[v] = 1;
  std::vector<Mat> maps;
  for (const auto& arr : a->quiver().arrows()) maps.emplace_back(a->field(), dims[arr.target], dims[arr.source]);
  return Module(a, dims, std::move(maps));
}

Module regular_module(const AlgebraPtr& a) {
  std::vector<Module> parts;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) parts.push_back(indec_projective(a, v));
  return direct_sum(a, parts).sum;
}

Module dual_module(const Module& m) {
  std::vector<Mat> maps;
  for (const auto& x : m.maps()) maps.push_back(x.transpose());
  return Module(m.alg().opposite(), m.dims(), std::move(maps));
}

Module dual_module(const Module& m, const AlgebraPtr& over) {
  if (!over->same_as(*m.alg().opposite())) throw InvalidInput("dual_module: not the opposite algebra");
  std::vector<Mat> maps;
  for (const auto& x : m.maps()) maps.push_back(x.transpose());
  return Module(over, m.dims(), std::move(maps));
}

ModMorphism dual_morphism(const ModMorphism& f, const AlgebraPtr& over) {
  std::vector<Mat> maps;
  for (const auto& x : f.maps) maps.push_back(x.transpose());
  return ModMorphism(dual_module(f.target, over), dual_module(f.source, over), std::move(maps));
}

bool is_selfinjective(const AlgebraPtr& a) {
  const std::size_t n = a->num_vertices();
  std::vector<Module> inj;
  for (std::size_t v = 0; v < n; ++v) inj.push_back(indec_injective(a, v));
  std::vector<bool> used(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    Module p = indec_projective(a, v);
    bool matched = false;
    for (std::size_t w = 0; w < n && !matched; ++w) {
      if (!used[w] && isomorphic_indecomposables(p, inj[w])) {
        used[w] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

bool is_hereditary(const AlgebraPtr& a) { return a->relations().empty() && !a->has_oriented_cycle(); }

}  // namespace gproj
