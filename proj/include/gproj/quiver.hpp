#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gproj/field.hpp"

namespace gproj {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

class Quiver {
 public:
  std::size_t add_vertex(const std::string& name);
  std::size_t add_arrow(const std::string& name, std::size_t source, std::size_t target);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::string& vertex_name(std::size_t v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::optional<std::size_t> find_vertex(const std::string& name) const;
  std::optional<std::size_t> find_arrow(const std::string& name) const;

  bool operator==(const Quiver& o) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// A path stored in application order: arrows[0] is applied first.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;
  std::size_t length() const { return arrows.size(); }
  bool is_trivial() const { return arrows.empty(); }
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// kQ/I for a monomial admissible ideal I, with its basis of surviving paths.
class Algebra {
 public:
  static constexpr std::size_t kDefaultCap = 10000;

  /// Relations are arrow sequences in application order. Throws InvalidInput for
  /// non-composable or short relations and InfiniteDimensional when the cap is exceeded.
  static AlgebraPtr build(Quiver quiver, std::vector<std::vector<std::size_t>> relations,
                          Field field = Field::prime(2), std::size_t cap = kDefaultCap);

  const Quiver& quiver() const { return quiver_; }
  Field field() const { return field_; }
  std::size_t num_vertices() const { return quiver_.num_vertices(); }
  std::size_t num_arrows() const { return quiver_.num_arrows(); }
  const std::vector<std::vector<std::size_t>>& relations() const { return relations_; }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Path>& basis() const { return basis_; }
  const Path& path(std::size_t i) const { return basis_.at(i); }
  std::optional<std::size_t> find_path(std::size_t source, const std::vector<std::size_t>& arrows) const;
  std::size_t trivial_path(std::size_t v) const { return trivial_.at(v); }
  std::size_t arrow_path(std::size_t a) const { return arrow_path_.at(a); }

  /// Basis paths with the given source / target / both, in basis order.
  const std::vector<std::size_t>& paths_from(std::size_t v) const { return from_.at(v); }
  const std::vector<std::size_t>& paths_to(std::size_t v) const { return to_.at(v); }
  std::vector<std::size_t> paths_between(std::size_t source, std::size_t target) const;

  /// Path p followed by arrow a, when it survives.
  std::optional<std::size_t> extend(std::size_t p, std::size_t a) const;
  /// The product p * q (apply q, then p), when composable and nonzero.
  std::optional<std::size_t> multiply(std::size_t p, std::size_t q) const;

  /// Written in composition order, e.g. "a2 a1"; trivial paths are "e<vertex>".
  std::string path_label(std::size_t p) const;
  std::string relation_label(std::size_t r) const;

  /// Same vertices, reversed arrows (same indices and names), reversed relations. Cached.
  AlgebraPtr opposite() const;
  /// Index in opposite() of the element given by basis path p.
  std::size_t opposite_path(std::size_t p) const;
  AlgebraPtr with_field(Field f) const;

  bool has_oriented_cycle() const;
  bool same_as(const Algebra& o) const;

 private:
  Algebra() = default;

  Quiver quiver_;
  Field field_;
  std::size_t cap_ = kDefaultCap;
  std::vector<std::vector<std::size_t>> relations_;
  std::vector<Path> basis_;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index_;
  std::vector<std::size_t> trivial_;
  std::vector<std::size_t> arrow_path_;
  std::vector<std::vector<std::size_t>> from_;
  std::vector<std::vector<std::size_t>> to_;
  std::vector<std::vector<std::optional<std::size_t>>> extend_;

  mutable std::once_flag opposite_once_;
  mutable AlgebraPtr opposite_;
};

/// Parses "a2 a1" (composition order) into an application-order arrow sequence.
std::vector<std::size_t> parse_relation(const Quiver& q, const std::string& text);

}  // namespace gproj
