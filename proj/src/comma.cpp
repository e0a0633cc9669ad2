#include "gproj/comma.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gproj/errors.hpp"
#include "gproj/free_module.hpp"

namespace gproj {

// ---------------------------------------------------------------------------
// TriangularAlgebra

TriangularPtr TriangularAlgebra::from_parts(const AlgebraPtr& lambda, const AlgebraPtr& gamma,
                                            const std::vector<ConnectingArrow>& connecting,
                                            const std::vector<std::string>& mixed_relations) {
  if (lambda->field() != gamma->field()) throw FieldMismatch("lambda and gamma use different fields");
  Quiver q;
  for (const auto& v : lambda->quiver().vertex_names()) q.add_vertex(v);
  for (const auto& v : gamma->quiver().vertex_names()) {
    if (q.find_vertex(v)) throw InvalidInput("vertex '" + v + "' appears in both lambda and gamma");
    q.add_vertex(v);
  }
  const std::size_t nl = lambda->num_vertices();
  const std::size_t al = lambda->num_arrows();
  for (const auto& a : lambda->quiver().arrows()) q.add_arrow(a.name, a.source, a.target);
  for (const auto& a : gamma->quiver().arrows()) {
    if (q.find_arrow(a.name)) throw InvalidInput("arrow '" + a.name + "' appears twice");
    q.add_arrow(a.name, a.source + nl, a.target + nl);
  }
  for (const auto& c : connecting) {
    auto s = gamma->quiver().find_vertex(c.from);
    auto t = lambda->quiver().find_vertex(c.to);
    if (!s || !t) {
      throw InvalidInput("connecting arrow '" + c.name + "' must go from a gamma vertex to a lambda vertex");
    }
    if (q.find_arrow(c.name)) throw InvalidInput("arrow '" + c.name + "' appears twice");
    q.add_arrow(c.name, *s + nl, *t);
  }
  std::vector<std::vector<std::size_t>> rels = lambda->relations();
  for (auto r : gamma->relations()) {
    for (auto& a : r) a += al;
    rels.push_back(std::move(r));
  }
  for (const auto& text : mixed_relations) rels.push_back(parse_relation(q, text));
  AlgebraPtr t = Algebra::build(std::move(q), std::move(rels), lambda->field());
  std::vector<std::size_t> lv(nl);
  for (std::size_t v = 0; v < nl; ++v) lv[v] = v;
  return from_algebra(t, lv);
}

TriangularPtr TriangularAlgebra::from_algebra(const AlgebraPtr& t, const std::vector<std::size_t>& lambda_vertices) {
  std::shared_ptr<TriangularAlgebra> out(new TriangularAlgebra());
  const std::size_t n = t->num_vertices();
  out->t_ = t;
  out->side_.assign(n, 1);
  for (auto v : lambda_vertices) {
    if (v >= n) throw InvalidInput("lambda vertex out of range");
    out->side_[v] = 0;
  }
  out->local_.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = out->side_[v] == 0 ? out->lambda_vertices_ : out->gamma_vertices_;
    out->local_[v] = list.size();
    list.push_back(v);
  }
  const Quiver& tq = t->quiver();
  Quiver lq, gq;
  for (auto v : out->lambda_vertices_) lq.add_vertex(tq.vertex_name(v));
  for (auto v : out->gamma_vertices_) gq.add_vertex(tq.vertex_name(v));
  std::vector<int> arrow_side(tq.num_arrows());
  for (std::size_t a = 0; a < tq.num_arrows(); ++a) {
    const Arrow& ar = tq.arrow(a);
    const int s = out->side_[ar.source];
    const int e = out->side_[ar.target];
    if (s == 0 && e == 1) {
      throw InvalidInput("arrow '" + ar.name + "' goes from the lambda block to the gamma block");
    }
    if (s == 0 && e == 0) {
      arrow_side[a] = 0;
      out->lambda_arrows_.push_back(a);
      lq.add_arrow(ar.name, out->local_[ar.source], out->local_[ar.target]);
    } else if (s == 1 && e == 1) {
      arrow_side[a] = 1;
      out->gamma_arrows_.push_back(a);
      gq.add_arrow(ar.name, out->local_[ar.source], out->local_[ar.target]);
    } else {
      arrow_side[a] = 2;
      out->connecting_.push_back(a);
    }
  }
  std::vector<std::size_t> arrow_local(tq.num_arrows());
  for (std::size_t i = 0; i < out->lambda_arrows_.size(); ++i) arrow_local[out->lambda_arrows_[i]] = i;
  for (std::size_t i = 0; i < out->gamma_arrows_.size(); ++i) arrow_local[out->gamma_arrows_[i]] = i;
  std::vector<std::vector<std::size_t>> lrels, grels;
  for (const auto& r : t->relations()) {
    const int s = arrow_side[r.front()];
    bool uniform = s != 2;
    for (auto a : r) uniform = uniform && arrow_side[a] == s;
    if (!uniform) continue;
    std::vector<std::size_t> local;
    for (auto a : r) local.push_back(arrow_local[a]);
    (s == 0 ? lrels : grels).push_back(std::move(local));
  }
  out->lambda_ = Algebra::build(std::move(lq), std::move(lrels), t->field());
  out->gamma_ = Algebra::build(std::move(gq), std::move(grels), t->field());

  auto map_paths = [&](const AlgebraPtr& b, const std::vector<std::size_t>& verts, const std::vector<std::size_t>& arrows,
                       std::vector<std::size_t>& dst) {
    for (const auto& p : b->basis()) {
      std::vector<std::size_t> ta;
      for (auto a : p.arrows) ta.push_back(arrows[a]);
      auto idx = t->find_path(verts[p.source], ta);
      if (!idx) throw InvalidInput("a path of a diagonal block is killed by a mixed relation");
      dst.push_back(*idx);
    }
  };
  map_paths(out->lambda_, out->lambda_vertices_, out->lambda_arrows_, out->lambda_paths_);
  map_paths(out->gamma_, out->gamma_vertices_, out->gamma_arrows_, out->gamma_paths_);

  std::size_t in_lambda = 0, in_gamma = 0;
  out->m_to_.assign(out->lambda_vertices_.size(), {});
  for (std::size_t p = 0; p < t->dim(); ++p) {
    const Path& path = t->path(p);
    const int s = out->side_[path.source];
    const int e = out->side_[path.target];
    if (s == 0 && e == 0) ++in_lambda;
    if (s == 1 && e == 1) ++in_gamma;
    if (s == 1 && e == 0) {
      out->m_basis_.push_back(p);
      out->m_to_[out->local_[path.target]].push_back(p);
    }
  }
  if (in_lambda != out->lambda_->dim() || in_gamma != out->gamma_->dim()) {
    throw InvalidInput("diagonal blocks of T do not match the extracted algebras");
  }
  return out;
}

TriangularPtr TriangularAlgebra::with_field(Field f) const { return from_algebra(t_->with_field(f), lambda_vertices_); }

std::size_t TriangularAlgebra::bimodule_source(std::size_t t_path) const {
  return local_.at(t_->path(t_path).source);
}

std::size_t TriangularAlgebra::bimodule_target(std::size_t t_path) const {
  return local_.at(t_->path(t_path).target);
}

Module TriangularAlgebra::bimodule_left() const { return apply_F(*this, regular_module(gamma_)); }

Module TriangularAlgebra::bimodule_right() const {
  AlgebraPtr op = gamma_->opposite();
  const std::size_t ng = gamma_vertices_.size();
  std::vector<std::vector<std::size_t>> from(ng);
  std::map<std::size_t, std::size_t> pos;
  for (auto p : m_basis_) {
    const std::size_t w = bimodule_source(p);
    pos[p] = from[w].size();
    from[w].push_back(p);
  }
  std::vector<std::size_t> dims(ng);
  for (std::size_t w = 0; w < ng; ++w) dims[w] = from[w].size();
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < gamma_->num_arrows(); ++a) {
    const Arrow& ar = gamma_->quiver().arrow(a);
    // m . a lands in the paths starting at the source of a.
    Mat m(field(), dims[ar.source], dims[ar.target]);
    const std::size_t ap = t_->arrow_path(gamma_arrows_[a]);
    for (std::size_t j = 0; j < from[ar.target].size(); ++j) {
      auto prod = t_->multiply(from[ar.target][j], ap);
      if (prod) m.set(pos.at(*prod), j, FieldScalar(field(), 1));
    }
    maps.push_back(std::move(m));
  }
  return Module(op, dims, std::move(maps));
}

// ---------------------------------------------------------------------------
// The tensor functor

namespace {

struct Tensor {
  Module module;
  /// Per Lambda-vertex: offset of the block of each bimodule path into the product space.
  std::vector<std::vector<std::size_t>> offsets;
  std::vector<std::size_t> product_dim;
  std::vector<Quotient> quotients;
};

std::size_t position_in(const std::vector<std::size_t>& list, std::size_t p) {
  auto it = std::find(list.begin(), list.end(), p);
  if (it == list.end()) throw InternalError("bimodule path lookup failed");
  return static_cast<std::size_t>(it - list.begin());
}

Tensor tensor(const TriangularAlgebra& t, const Module& y) {
  if (!y.alg().same_as(*t.gamma())) throw InvalidInput("apply_F: module is not over gamma");
  const Algebra& ta = *t.t();
  const Algebra& g = *t.gamma();
  const Field f = t.field();
  const FieldScalar one(f, 1);
  const std::size_t nl = t.lambda()->num_vertices();
  Tensor out;
  out.offsets.resize(nl);
  std::vector<std::size_t> fdims(nl);
  for (std::size_t u = 0; u < nl; ++u) {
    const auto& paths = t.bimodule_paths_to(u);
    std::size_t total = 0;
    for (auto m : paths) {
      out.offsets[u].push_back(total);
      total += y.dim(t.bimodule_source(m));
    }
    out.product_dim.push_back(total);
    std::vector<Mat> cols;
    for (std::size_t k = 0; k < paths.size(); ++k) {
      const std::size_t m = paths[k];
      const std::size_t w0 = t.bimodule_source(m);
      for (auto gp : g.paths_to(w0)) {
        if (g.path(gp).is_trivial()) continue;
        const std::size_t w = g.path(gp).source;
        if (y.dim(w) == 0) continue;
        auto mg = ta.multiply(m, t.t_path_of_gamma(gp));
        const Mat act = y.path_action(gp);
        for (std::size_t j = 0; j < y.dim(w); ++j) {
          Mat col(f, total, 1);
          if (mg) {
            const std::size_t k2 = position_in(paths, *mg);
            col.set(out.offsets[u][k2] + j, 0, col.at(out.offsets[u][k2] + j, 0) + one);
          }
          for (std::size_t i = 0; i < y.dim(w0); ++i) {
            const std::size_t r = out.offsets[u][k] + i;
            col.set(r, 0, col.at(r, 0) - act.at(i, j));
          }
          cols.push_back(std::move(col));
        }
      }
    }
    Mat rel = Mat::hstack(cols, f, total);
    out.quotients.push_back(quotient_by(rel, total));
    fdims[u] = out.quotients.back().projection.rows();
  }
  std::vector<Mat> maps;
  const Algebra& l = *t.lambda();
  for (std::size_t a = 0; a < l.num_arrows(); ++a) {
    const Arrow& ar = l.quiver().arrow(a);
    const auto& src = t.bimodule_paths_to(ar.source);
    const auto& dst = t.bimodule_paths_to(ar.target);
    Mat v(f, out.product_dim[ar.target], out.product_dim[ar.source]);
    const std::size_t ap = ta.arrow_path(t.lambda_arrow_to_t(a));
    for (std::size_t k = 0; k < src.size(); ++k) {
      auto am = ta.multiply(ap, src[k]);
      if (!am) continue;
      const std::size_t k2 = position_in(dst, *am);
      const std::size_t d = y.dim(t.bimodule_source(src[k]));
      for (std::size_t i = 0; i < d; ++i) v.set(out.offsets[ar.target][k2] + i, out.offsets[ar.source][k] + i, one);
    }
    maps.push_back(out.quotients[ar.target].projection * v * out.quotients[ar.source].section);
  }
  out.module = Module(t.lambda(), fdims, std::move(maps));
  return out;
}

}  // namespace

Module apply_F(const TriangularAlgebra& t, const Module& y) { return tensor(t, y).module; }

ModMorphism apply_F_mor(const TriangularAlgebra& t, const ModMorphism& g) {
  Tensor a = tensor(t, g.source);
  Tensor b = tensor(t, g.target);
  const std::size_t nl = t.lambda()->num_vertices();
  std::vector<Mat> maps;
  for (std::size_t u = 0; u < nl; ++u) {
    const auto& paths = t.bimodule_paths_to(u);
    Mat v(t.field(), b.product_dim[u], a.product_dim[u]);
    for (std::size_t k = 0; k < paths.size(); ++k) {
      const std::size_t w = t.bimodule_source(paths[k]);
      v.set_block(b.offsets[u][k], a.offsets[u][k], g.maps[w]);
    }
    maps.push_back(b.quotients[u].projection * v * a.quotients[u].section);
  }
  return ModMorphism(a.module, b.module, std::move(maps));
}

// ---------------------------------------------------------------------------
// Comma objects

Module restrict_to_lambda(const TriangularAlgebra& t, const Module& m) {
  std::vector<std::size_t> dims;
  for (auto v : t.lambda_vertices()) dims.push_back(m.dim(v));
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < t.lambda()->num_arrows(); ++a) maps.push_back(m.map(t.lambda_arrow_to_t(a)));
  return Module(t.lambda(), dims, std::move(maps));
}

Module restrict_to_gamma(const TriangularAlgebra& t, const Module& m) {
  std::vector<std::size_t> dims;
  for (auto v : t.gamma_vertices()) dims.push_back(m.dim(v));
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < t.gamma()->num_arrows(); ++a) maps.push_back(m.map(t.gamma_arrow_to_t(a)));
  return Module(t.gamma(), dims, std::move(maps));
}

CommaObject split(const TriangularAlgebra& t, const Module& m) {
  if (!m.alg().same_as(*t.t())) throw InvalidInput("split: module is not over T");
  CommaObject c;
  c.y = restrict_to_gamma(t, m);
  c.x = restrict_to_lambda(t, m);
  Tensor ty = tensor(t, c.y);
  std::vector<Mat> phi;
  for (std::size_t u = 0; u < t.lambda()->num_vertices(); ++u) {
    const auto& paths = t.bimodule_paths_to(u);
    Mat big(t.field(), c.x.dim(u), ty.product_dim[u]);
    for (std::size_t k = 0; k < paths.size(); ++k) big.set_block(0, ty.offsets[u][k], m.path_action(paths[k]));
    phi.push_back(big * ty.quotients[u].section);
  }
  c.phi = ModMorphism(ty.module, c.x, std::move(phi));
  return c;
}

Module merge(const TriangularAlgebra& t, const CommaObject& c) {
  Tensor ty = tensor(t, c.y);
  if (!c.x.alg().same_as(*t.lambda())) throw InvalidInput("merge: x is not over lambda");
  if (!(c.phi.source.dims() == ty.module.dims()) || !(c.phi.target.dims() == c.x.dims())) {
    throw DimensionMismatch("merge: phi does not go from F y to x");
  }
  if (!ModMorphism(ty.module, c.x, c.phi.maps).is_valid()) throw InvalidInput("merge: phi is not a morphism");
  const Algebra& ta = *t.t();
  std::vector<std::size_t> dims(ta.num_vertices());
  for (std::size_t v = 0; v < t.lambda_vertices().size(); ++v) dims[t.lambda_to_t(v)] = c.x.dim(v);
  for (std::size_t v = 0; v < t.gamma_vertices().size(); ++v) dims[t.gamma_to_t(v)] = c.y.dim(v);
  std::vector<Mat> maps(ta.num_arrows());
  for (std::size_t a = 0; a < t.lambda()->num_arrows(); ++a) maps[t.lambda_arrow_to_t(a)] = c.x.map(a);
  for (std::size_t a = 0; a < t.gamma()->num_arrows(); ++a) maps[t.gamma_arrow_to_t(a)] = c.y.map(a);
  for (auto a : t.connecting_arrows()) {
    const std::size_t p = ta.arrow_path(a);
    const std::size_t u = t.bimodule_target(p);
    const std::size_t w = t.bimodule_source(p);
    const std::size_t k = position_in(t.bimodule_paths_to(u), p);
    Mat incl(t.field(), ty.product_dim[u], c.y.dim(w));
    incl.set_block(ty.offsets[u][k], 0, Mat::identity(t.field(), c.y.dim(w)));
    maps[a] = c.phi.maps[u] * ty.quotients[u].projection * incl;
  }
  return Module(t.t(), dims, std::move(maps));
}

CommaObject comma_free_part(const TriangularAlgebra& t, const Module& y) {
  Module fy = apply_F(t, y);
  return {y, fy, ModMorphism::identity(fy)};
}

CommaObject comma_lambda_part(const TriangularAlgebra& t, const Module& x) {
  Module zero = Module::zero(t.gamma());
  return {zero, x, ModMorphism::zero(apply_F(t, zero), x)};
}

Module extend_from_lambda(const TriangularAlgebra& t, const Module& x) { return merge(t, comma_lambda_part(t, x)); }

Module extend_from_gamma(const TriangularAlgebra& t, const Module& y) {
  Module zero = Module::zero(t.lambda());
  return merge(t, {y, zero, ModMorphism::zero(apply_F(t, y), zero)});
}

CommaMorphism split_morphism(const TriangularAlgebra& t, const ModMorphism& f) {
  CommaMorphism out;
  std::vector<Mat> a, b;
  for (auto v : t.gamma_vertices()) a.push_back(f.maps[v]);
  for (auto v : t.lambda_vertices()) b.push_back(f.maps[v]);
  out.a = ModMorphism(restrict_to_gamma(t, f.source), restrict_to_gamma(t, f.target), std::move(a));
  out.b = ModMorphism(restrict_to_lambda(t, f.source), restrict_to_lambda(t, f.target), std::move(b));
  return out;
}

ModMorphism merge_morphism(const TriangularAlgebra& t, const Module& source, const Module& target,
                           const CommaMorphism& f) {
  std::vector<Mat> maps(t.t()->num_vertices());
  for (std::size_t v = 0; v < t.gamma_vertices().size(); ++v) maps[t.gamma_to_t(v)] = f.a.maps[v];
  for (std::size_t v = 0; v < t.lambda_vertices().size(); ++v) maps[t.lambda_to_t(v)] = f.b.maps[v];
  return ModMorphism(source, target, std::move(maps));
}

// ---------------------------------------------------------------------------
// Projectives

std::string ProjectiveShape::describe(const TriangularAlgebra& t) const {
  std::ostringstream os;
  os << (projective ? "projective" : "not projective");
  if (shape_matches) {
    os << "; (Q, FQ) + (0, P) with Q =";
    if (gamma_summands.empty()) os << " 0";
    for (auto w : gamma_summands) os << " P(" << t.gamma()->quiver().vertex_name(w) << ")";
    os << ", P =";
    if (lambda_summands.empty()) os << " 0";
    for (auto v : lambda_summands) os << " P(" << t.lambda()->quiver().vertex_name(v) << ")";
  }
  return os.str();
}

ProjectiveShape is_projective_T(const TriangularAlgebra& t, const Module& m) {
  ProjectiveShape s;
  s.projective = is_projective(m);
  CommaObject c = split(t, m);
  if (!is_projective(c.y) || !c.phi.is_injective()) return s;
  Module coker = cokernel(c.phi).module;
  if (!is_projective(coker)) return s;
  s.shape_matches = true;
  s.gamma_summands = projective_cover(c.y).free.generators;
  s.lambda_summands = projective_cover(coker).free.generators;
  return s;
}

std::vector<Module> comma_projectives(const TriangularAlgebra& t) {
  std::vector<Module> out;
  for (std::size_t v = 0; v < t.lambda()->num_vertices(); ++v) {
    out.push_back(extend_from_lambda(t, indec_projective(t.lambda(), v)));
  }
  for (std::size_t w = 0; w < t.gamma()->num_vertices(); ++w) {
    out.push_back(merge(t, comma_free_part(t, indec_projective(t.gamma(), w))));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Gorenstein projectivity through the components

ComponentContext make_context(const TriangularPtr& t, std::size_t bound) {
  return {t, is_gorenstein_algebra(t->lambda(), bound), is_gorenstein_algebra(t->gamma(), bound), bound};
}

std::string ComponentVerdict::describe() const {
  switch (verdict.status) {
    case Verdict::Yes:
      return "yes";
    case Verdict::Unknown:
      return "unknown up to bound " + std::to_string(verdict.bound);
    case Verdict::No:
      break;
  }
  switch (failed_clause) {
    case 1:
      return "no (phi is not injective)";
    case 2:
      return "no (Coker phi is not GP: " + cokernel->describe() + ")";
    default:
      return "no (Y is not GP: " + gamma_part->describe() + ")";
  }
}

ComponentVerdict gp_via_components(const ComponentContext& ctx, const CommaObject& c) {
  ComponentVerdict out;
  out.verdict.bound = ctx.bound;
  out.phi_injective = c.phi.is_injective();
  if (!out.phi_injective) {
    out.verdict.status = Verdict::No;
    out.failed_clause = 1;
    return out;
  }
  out.cokernel = is_gp(cokernel(c.phi).module, ctx.lambda);
  out.gamma_part = is_gp(c.y, ctx.gamma);
  if (out.cokernel->status == Verdict::No) {
    out.verdict = *out.cokernel;
    out.failed_clause = 2;
  } else if (out.gamma_part->status == Verdict::No) {
    out.verdict = *out.gamma_part;
    out.failed_clause = 3;
  } else if (out.cokernel->status == Verdict::Yes && out.gamma_part->status == Verdict::Yes) {
    out.verdict.status = Verdict::Yes;
  } else {
    out.verdict.status = Verdict::Unknown;
  }
  if (out.verdict.status == Verdict::Yes) {
    out.x_gp = is_gp(c.x, ctx.lambda).status;
    out.fy_gp = is_gp(c.phi.source, ctx.lambda).status;
    out.final_clause_holds = *out.x_gp == *out.fy_gp;
  }
  return out;
}

ComponentVerdict gp_via_components(const ComponentContext& ctx, const Module& m) {
  return gp_via_components(ctx, split(*ctx.t, m));
}

// ---------------------------------------------------------------------------
// Perfectness and finite projective dimension

std::string to_string(Certification c) {
  switch (c) {
    case Certification::Certified:
      return "certified";
    case Certification::SampleVerified:
      return "sample-verified";
    case Certification::Refuted:
      return "refuted";
    case Certification::Unknown:
      break;
  }
  return "unknown";
}

bool PerfectReport::perfect() const {
  return p1 == Certification::Certified &&
         (p2 == Certification::Certified || p2 == Certification::SampleVerified);
}

std::string PerfectReport::describe() const {
  auto num = [](const std::optional<std::size_t>& x) { return x ? std::to_string(*x) : std::string("inf"); };
  std::ostringstream os;
  os << "perfect: " << (perfect() ? "certified" : "not certified") << " (pd M_Gamma = " << num(pd_right)
     << ", pd _Lambda M = " << num(pd_left) << ")\n";
  os << "P1: " << to_string(p1) << " (pd M_Gamma = " << num(pd_right) << ")\n";
  os << "P2: " << to_string(p2) << " (pd _Lambda M = " << num(pd_left) << ")";
  if (samples > 0) {
    os << "\nsampled Ext^i(G, F Q), 1 <= i <= " << max_degree << ": " << samples << " modules, "
       << ext_values_checked << " values, " << nonzero_ext << " nonzero";
    if (!witness.empty()) os << "\nwitness: " << witness;
  }
  return os.str();
}

PerfectReport check_perfect(const TriangularAlgebra& t, std::size_t bound, const std::vector<Module>& gp_samples,
                            std::size_t max_degree) {
  PerfectReport r;
  r.pd_right = pd(t.bimodule_right(), bound);
  r.pd_left = pd(t.bimodule_left(), bound);
  r.p1 = r.pd_right ? Certification::Certified : Certification::Unknown;
  r.p2 = r.pd_left ? Certification::Certified : Certification::Unknown;
  if (gp_samples.empty()) return r;
  r.max_degree = max_degree == 0 ? bound : max_degree;
  std::vector<Module> fq;
  for (std::size_t w = 0; w < t.gamma()->num_vertices(); ++w) fq.push_back(apply_F(t, indec_projective(t.gamma(), w)));
  for (std::size_t s = 0; s < gp_samples.size(); ++s) {
    ProjResolution res = min_proj_resolution(gp_samples[s], r.max_degree + 1);
    ++r.samples;
    for (std::size_t w = 0; w < fq.size(); ++w) {
      auto e = ext_dims(res, fq[w], r.max_degree);
      for (std::size_t i = 1; i < e.size(); ++i) {
        ++r.ext_values_checked;
        if (e[i] == 0) continue;
        ++r.nonzero_ext;
        if (r.witness.empty()) {
          r.witness = "Ext^" + std::to_string(i) + "(G" + gp_samples[s].dims_string() + ", F P(" +
                      t.gamma()->quiver().vertex_name(w) + ")) has dimension " + std::to_string(e[i]);
        }
      }
    }
  }
  if (r.nonzero_ext > 0) {
    r.p2 = Certification::Refuted;
  } else if (r.p2 == Certification::Unknown) {
    r.p2 = Certification::SampleVerified;
  }
  return r;
}

std::string PdTransferReport::describe() const {
  auto num = [](const std::optional<std::size_t>& x) { return x ? std::to_string(*x) : std::string("inf"); };
  std::ostringstream os;
  if (!hypothesis_holds) os << "hypothesis fails: " << hypothesis_witness << "; ";
  os << "pd_T = " << num(pd_t) << ", pd_Gamma Y = " << num(pd_gamma) << ", pd_Lambda X = " << num(pd_lambda)
     << (consistent ? " (consistent)" : " (INCONSISTENT)");
  return os.str();
}

PdTransferReport finite_pd_transfer(const TriangularAlgebra& t, const CommaObject& c, std::size_t bound) {
  PdTransferReport r;
  r.hypothesis_holds = true;
  for (std::size_t w = 0; w < t.gamma()->num_vertices() && r.hypothesis_holds; ++w) {
    if (!pd(apply_F(t, indec_projective(t.gamma(), w)), bound)) {
      r.hypothesis_holds = false;
      r.hypothesis_witness = "pd F P(" + t.gamma()->quiver().vertex_name(w) + ") exceeds the bound";
    }
  }
  r.pd_t = pd(merge(t, c), bound);
  r.pd_gamma = pd(c.y, bound);
  r.pd_lambda = pd(c.x, bound);
  r.consistent = r.pd_t.has_value() == (r.pd_gamma.has_value() && r.pd_lambda.has_value());
  return r;
}

// ---------------------------------------------------------------------------
// Enumeration

void sort_by_dimension(std::vector<Module>& modules) {
  std::stable_sort(modules.begin(), modules.end(), [](const Module& a, const Module& b) {
    if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
    return a.dims() > b.dims();
  });
}

std::vector<Module> indecomposable_gp(const AlgebraPtr& a, std::size_t max_total_dim, std::size_t bound) {
  GorensteinInfo info = is_gorenstein_algebra(a, bound);
  std::vector<Module> out;
  for (auto& m : indecomposable_classes(a, max_total_dim)) {
    if (is_gp(m, info).status == Verdict::Yes) out.push_back(std::move(m));
  }
  return out;
}

namespace {

void add_unique(std::vector<Module>& list, Module m) {
  for (const auto& x : list) {
    if (x.dims() == m.dims() && isomorphic_indecomposables(x, m)) return;
  }
  list.push_back(std::move(m));
}

}  // namespace

GPListing enumerate_indec_gp(const TriangularPtr& t, std::size_t max_total_dim, std::size_t bound) {
  GPListing out;
  out.max_total_dim = max_total_dim;
  PerfectReport perf = check_perfect(*t, bound);
  const bool perfect = perf.perfect();
  std::optional<CMFreeReport> gam, lam;
  if (perfect) {
    gam = is_cm_free(t->gamma(), max_total_dim, bound);
    if (!gam->cm_free) lam = is_cm_free(t->lambda(), max_total_dim, bound);
  }
  const std::string bound_note = "total dimension <= " + std::to_string(max_total_dim);
  if (perfect && gam->cm_free) {
    out.method = "gamma-cm-free";
    out.certified = gam->certified_all_dimensions;
    for (auto& x : indecomposable_gp(t->lambda(), max_total_dim, bound)) add_unique(out.modules, extend_from_lambda(*t, x));
    for (std::size_t w = 0; w < t->gamma()->num_vertices(); ++w) {
      Module p = merge(*t, comma_free_part(*t, indec_projective(t->gamma(), w)));
      if (p.total_dim() <= max_total_dim) add_unique(out.modules, std::move(p));
    }
    out.note = "objects (0, X) with X indecomposable GP over Lambda and (Q, FQ) with Q indecomposable projective "
               "over Gamma; " + bound_note;
  } else if (perfect && lam->cm_free) {
    out.method = "lambda-cm-free";
    out.certified = lam->certified_all_dimensions;
    for (std::size_t v = 0; v < t->lambda()->num_vertices(); ++v) {
      Module p = extend_from_lambda(*t, indec_projective(t->lambda(), v));
      if (p.total_dim() <= max_total_dim) add_unique(out.modules, std::move(p));
    }
    for (auto& y : indecomposable_gp(t->gamma(), max_total_dim, bound)) {
      Module m = merge(*t, comma_free_part(*t, y));
      if (m.total_dim() <= max_total_dim) add_unique(out.modules, std::move(m));
    }
    out.note = "objects (0, P) with P indecomposable projective over Lambda and (Y, FY) with Y indecomposable GP "
               "over Gamma; " + bound_note;
  } else {
    out.method = "bounded-search";
    ComponentContext ctx = make_context(t, bound);
    GorensteinInfo tinfo = is_gorenstein_algebra(t->t(), bound);
    for (auto& m : indecomposable_classes(t->t(), max_total_dim)) {
      const Verdict v = perfect ? gp_via_components(ctx, m).verdict.status : is_gp(m, tinfo).status;
      if (v == Verdict::Yes) add_unique(out.modules, std::move(m));
    }
    out.note = "bounded search over all indecomposables; complete only up to " + bound_note;
  }
  if (!out.certified && out.method != "bounded-search") {
    out.note += "; one side is CM-free only up to the dimension bound";
  }
  sort_by_dimension(out.modules);
  return out;
}

}  // namespace gproj
