#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "gproj/comma.hpp"
#include "gproj/errors.hpp"
#include "gproj/module.hpp"

namespace gproj {

/// Parse failure; line and column are 1-based, column 0 when unknown.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Algebra file:
///   field: F_2
///   vertices: 1 2 3
///   arrows:
///     a1: 1 -> 2
///   relations:
///     a2 a1
/// Relations compose right to left: "a2 a1" applies a1 first.
AlgebraPtr parse_algebra(const std::string& text, std::optional<Field> field = std::nullopt);

/// Triangular file: an optional top-level field line, then blocks [lambda] and [gamma] in
/// the algebra format, [connecting] with lines "c: gamma-vertex -> lambda-vertex" and an
/// optional [relations] block of mixed relations over the arrows of T.
TriangularPtr parse_triangular(const std::string& text, std::optional<Field> field = std::nullopt);

/// Module file:
///   dims: 1:3 2:1
///   g:
///     0 0 0
///     1 0 0
///     0 1 0
/// One row per basis vector of the target; omitted vertices have dimension 0 and omitted
/// arrows act by zero. Entries are integers (or p/q over Q), reduced into the field.
Module parse_module(const std::string& text, const AlgebraPtr& a);

/// Module in the format read by parse_module.
std::string format_module(const Module& m);

std::string read_file(const std::string& path);
AlgebraPtr load_algebra(const std::string& path, std::optional<Field> field = std::nullopt);
TriangularPtr load_triangular(const std::string& path, std::optional<Field> field = std::nullopt);
Module load_module(const std::string& path, const AlgebraPtr& a);

}  // namespace gproj
