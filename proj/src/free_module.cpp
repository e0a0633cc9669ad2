#include "gproj/free_module.hpp"

#include <algorithm>

#include "gproj/errors.hpp"

namespace gproj {

FreeModule FreeModule::make(const AlgebraPtr& a, std::vector<std::size_t> generators) {
  FreeModule f;
  f.algebra = a;
  f.generators = std::move(generators);
  const std::size_t nv = a->num_vertices();
  std::vector<Module> parts;
  std::vector<std::size_t> running(nv, 0);
  for (auto v : f.generators) {
    Module p = indec_projective(a, v);
    f.offset_.push_back(running);
    for (std::size_t w = 0; w < nv; ++w) running[w] += p.dim(w);
    parts.push_back(std::move(p));
  }
  f.module = direct_sum(a, parts).sum;
  f.path_pos_.assign(a->dim(), 0);
  for (std::size_t v = 0; v < nv; ++v) {
    std::vector<std::size_t> count(nv, 0);
    for (auto p : a->paths_from(v)) f.path_pos_[p] = count[a->path(p).target]++;
  }
  return f;
}

std::size_t FreeModule::position(std::size_t j, std::size_t p) const {
  const Path& path = algebra->path(p);
  if (path.source != generators.at(j)) throw InvalidInput("path does not start at the generator vertex");
  return offset_[j][path.target] + path_pos_[p];
}

ModMorphism morphism_from_free(const FreeModule& f, const Module& n, const std::vector<Mat>& images) {
  const Algebra& a = *f.algebra;
  const std::size_t nv = a.num_vertices();
  if (images.size() != f.rank()) throw DimensionMismatch("one image per generator is required");
  std::vector<Mat> maps;
  for (std::size_t w = 0; w < nv; ++w) maps.emplace_back(a.field(), n.dim(w), f.module.dim(w));
  for (std::size_t j = 0; j < f.rank(); ++j) {
    const std::size_t v = f.generators[j];
    if (images[j].rows() != n.dim(v) || images[j].cols() != 1) {
      throw DimensionMismatch("generator image has the wrong length");
    }
    for (auto p : a.paths_from(v)) {
      maps[a.path(p).target].set_block(0, f.position(j, p), n.path_action(p) * images[j]);
    }
  }
  return ModMorphism(f.module, n, std::move(maps));
}

Mat generator_image(const FreeModule& source, const ModMorphism& d, std::size_t g) {
  const std::size_t u = source.generators.at(g);
  return d.maps[u].column(source.position(g, source.algebra->trivial_path(u)));
}

std::vector<FreeCoefficient> free_coefficients(const FreeModule& source, const FreeModule& target,
                                               const ModMorphism& d) {
  const Algebra& a = *source.algebra;
  std::vector<FreeCoefficient> out;
  for (std::size_t g = 0; g < source.rank(); ++g) {
    const std::size_t u = source.generators[g];
    const Mat col = generator_image(source, d, g);
    for (std::size_t j = 0; j < target.rank(); ++j) {
      for (auto p : a.paths_between(target.generators[j], u)) {
        const std::size_t pos = target.position(j, p);
        if (!col.is_zero_at(pos, 0)) out.push_back({g, j, p, col.at(pos, 0)});
      }
    }
  }
  return out;
}

std::size_t opposite_index(const Algebra& b, std::size_t p, const Algebra& b_op) {
  const Path& path = b.path(p);
  std::vector<std::size_t> rev(path.arrows.rbegin(), path.arrows.rend());
  auto idx = b_op.find_path(path.target, rev);
  if (!idx) throw InternalError("opposite path lookup failed");
  return *idx;
}

DualMap dualize(const FreeModule& source, const FreeModule& target, const ModMorphism& d, const AlgebraPtr& op) {
  DualMap out;
  out.source = FreeModule::make(op, target.generators);
  out.target = FreeModule::make(op, source.generators);
  std::vector<Mat> images;
  for (auto v : target.generators) images.emplace_back(op->field(), out.target.module.dim(v), 1);
  for (const auto& c : free_coefficients(source, target, d)) {
    const std::size_t q = opposite_index(*source.algebra, c.path, *op);
    Mat& col = images[c.j];
    const std::size_t pos = out.target.position(c.g, q);
    col.set(pos, 0, col.at(pos, 0) + c.value);
  }
  out.map = morphism_from_free(out.source, out.target.module, images);
  return out;
}

}  // namespace gproj
