#include "gproj/quiver.hpp"

#include <algorithm>
#include <sstream>

#include "gproj/errors.hpp"

namespace gproj {

std::size_t Quiver::add_vertex(const std::string& name) {
  if (find_vertex(name)) throw InvalidInput("duplicate vertex '" + name + "'");
  vertices_.push_back(name);
  return vertices_.size() - 1;
}

std::size_t Quiver::add_arrow(const std::string& name, std::size_t source, std::size_t target) {
  if (find_arrow(name)) throw InvalidInput("duplicate arrow '" + name + "'");
  if (source >= vertices_.size() || target >= vertices_.size()) {
    throw InvalidInput("arrow '" + name + "' references an undeclared vertex");
  }
  arrows_.push_back({name, source, target});
  return arrows_.size() - 1;
}

std::optional<std::size_t> Quiver::find_vertex(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].name == name) return i;
  }
  return std::nullopt;
}

bool Quiver::operator==(const Quiver& o) const {
  if (vertices_ != o.vertices_ || arrows_.size() != o.arrows_.size()) return false;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    const Arrow& b = o.arrows_[i];
    if (a.name != b.name || a.source != b.source || a.target != b.target) return false;
  }
  return true;
}

AlgebraPtr Algebra::build(Quiver quiver, std::vector<std::vector<std::size_t>> relations, Field field,
                          std::size_t cap) {
  std::shared_ptr<Algebra> a(new Algebra());
  a->quiver_ = std::move(quiver);
  a->field_ = field;
  a->cap_ = cap;
  const Quiver& q = a->quiver_;
  for (const auto& r : relations) {
    if (r.size() < 2) throw InvalidInput("relation of length " + std::to_string(r.size()) + " is not admissible");
    for (auto x : r) {
      if (x >= q.num_arrows()) throw InvalidInput("relation uses an unknown arrow");
    }
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
      if (q.arrow(r[i]).target != q.arrow(r[i + 1]).source) {
        throw InvalidInput("relation is not composable: " + q.arrow(r[i + 1]).name + " cannot follow " +
                           q.arrow(r[i]).name);
      }
    }
  }
  std::sort(relations.begin(), relations.end());
  relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
  a->relations_ = std::move(relations);

  const std::size_t nv = q.num_vertices();
  auto add = [&](Path p) {
    a->index_.emplace(std::make_pair(p.source, p.arrows), a->basis_.size());
    a->basis_.push_back(std::move(p));
  };
  for (std::size_t v = 0; v < nv; ++v) add(Path{v, v, {}});
  std::vector<std::size_t> level;
  for (std::size_t v = 0; v < nv; ++v) level.push_back(v);
  while (!level.empty()) {
    std::vector<Path> next;
    for (auto idx : level) {
      const Path& p = a->basis_[idx];
      for (std::size_t x = 0; x < q.num_arrows(); ++x) {
        if (q.arrow(x).source != p.target) continue;
        Path e{p.source, q.arrow(x).target, p.arrows};
        e.arrows.push_back(x);
        bool dead = false;
        for (const auto& r : a->relations_) {
          if (r.size() <= e.arrows.size() && std::equal(r.begin(), r.end(), e.arrows.end() - r.size())) {
            dead = true;
            break;
          }
        }
        if (!dead) next.push_back(std::move(e));
      }
    }
    std::sort(next.begin(), next.end(), [](const Path& l, const Path& r) { return l.arrows < r.arrows; });
    if (a->basis_.size() + next.size() > cap) {
      throw InfiniteDimensional("path basis exceeds " + std::to_string(cap) +
                                " elements; the relations do not bound the algebra");
    }
    level.clear();
    for (auto& p : next) {
      level.push_back(a->basis_.size());
      add(std::move(p));
    }
  }
  a->trivial_.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) a->trivial_[v] = v;
  a->arrow_path_.resize(q.num_arrows());
  for (std::size_t x = 0; x < q.num_arrows(); ++x) {
    auto idx = a->find_path(q.arrow(x).source, {x});
    if (!idx) throw InvalidInput("arrow '" + q.arrow(x).name + "' is itself killed by the relations");
    a->arrow_path_[x] = *idx;
  }
  a->from_.assign(nv, {});
  a->to_.assign(nv, {});
  for (std::size_t i = 0; i < a->basis_.size(); ++i) {
    a->from_[a->basis_[i].source].push_back(i);
    a->to_[a->basis_[i].target].push_back(i);
  }
  a->extend_.assign(a->basis_.size(), std::vector<std::optional<std::size_t>>(q.num_arrows()));
  for (std::size_t i = 0; i < a->basis_.size(); ++i) {
    const Path& p = a->basis_[i];
    for (std::size_t x = 0; x < q.num_arrows(); ++x) {
      if (q.arrow(x).source != p.target) continue;
      auto seq = p.arrows;
      seq.push_back(x);
      a->extend_[i][x] = a->find_path(p.source, seq);
    }
  }
  return a;
}

std::optional<std::size_t> Algebra::find_path(std::size_t source, const std::vector<std::size_t>& arrows) const {
  auto it = index_.find({source, arrows});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Algebra::paths_between(std::size_t source, std::size_t target) const {
  std::vector<std::size_t> out;
  for (auto p : from_.at(source)) {
    if (basis_[p].target == target) out.push_back(p);
  }
  return out;
}

std::optional<std::size_t> Algebra::extend(std::size_t p, std::size_t a) const { return extend_.at(p).at(a); }

std::optional<std::size_t> Algebra::multiply(std::size_t p, std::size_t q) const {
  const Path& pp = basis_.at(p);
  const Path& qq = basis_.at(q);
  if (qq.target != pp.source) return std::nullopt;
  auto seq = qq.arrows;
  seq.insert(seq.end(), pp.arrows.begin(), pp.arrows.end());
  return find_path(qq.source, seq);
}

std::string Algebra::path_label(std::size_t p) const {
  const Path& path = basis_.at(p);
  if (path.is_trivial()) return "e" + quiver_.vertex_name(path.source);
  std::string s;
  for (auto it = path.arrows.rbegin(); it != path.arrows.rend(); ++it) {
    if (!s.empty()) s += ' ';
    s += quiver_.arrow(*it).name;
  }
  return s;
}

std::string Algebra::relation_label(std::size_t r) const {
  std::string s;
  const auto& rel = relations_.at(r);
  for (auto it = rel.rbegin(); it != rel.rend(); ++it) {
    if (!s.empty()) s += ' ';
    s += quiver_.arrow(*it).name;
  }
  return s;
}

AlgebraPtr Algebra::opposite() const {
  std::call_once(opposite_once_, [this] {
    Quiver q;
    for (const auto& v : quiver_.vertex_names()) q.add_vertex(v);
    for (const auto& a : quiver_.arrows()) q.add_arrow(a.name, a.target, a.source);
    std::vector<std::vector<std::size_t>> rels;
    for (const auto& r : relations_) rels.emplace_back(r.rbegin(), r.rend());
    opposite_ = build(std::move(q), std::move(rels), field_, cap_);
  });
  return opposite_;
}

std::size_t Algebra::opposite_path(std::size_t p) const {
  const Path& path = basis_.at(p);
  std::vector<std::size_t> rev(path.arrows.rbegin(), path.arrows.rend());
  auto idx = opposite()->find_path(path.target, rev);
  if (!idx) throw InternalError("opposite path lookup failed");
  return *idx;
}

AlgebraPtr Algebra::with_field(Field f) const { return build(quiver_, relations_, f, cap_); }

bool Algebra::has_oriented_cycle() const {
  // Kahn's algorithm on the underlying quiver.
  const std::size_t n = num_vertices();
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& a : quiver_.arrows()) ++indeg[a.target];
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < n; ++v) {
    if (indeg[v] == 0) stack.push_back(v);
  }
  std::size_t seen = 0;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    ++seen;
    for (const auto& a : quiver_.arrows()) {
      if (a.source == v && --indeg[a.target] == 0) stack.push_back(a.target);
    }
  }
  return seen != n;
}

bool Algebra::same_as(const Algebra& o) const {
  return this == &o || (field_ == o.field_ && quiver_ == o.quiver_ && relations_ == o.relations_);
}

std::vector<std::size_t> parse_relation(const Quiver& q, const std::string& text) {
  std::istringstream in(text);
  std::vector<std::size_t> seq;
  std::string tok;
  while (in >> tok) {
    auto a = q.find_arrow(tok);
    if (!a) throw InvalidInput("unknown arrow '" + tok + "' in relation '" + text + "'");
    seq.push_back(*a);
  }
  std::reverse(seq.begin(), seq.end());
  return seq;
}

}  // namespace gproj
