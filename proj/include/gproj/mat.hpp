#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gproj/field.hpp"

namespace gproj {

/// Dense exact matrix over a single field. Entries are row-major.
class Mat {
 public:
  Mat() : Mat(Field::prime(2), 0, 0) {}
  Mat(Field field, std::size_t rows, std::size_t cols);

  static Mat identity(Field field, std::size_t n);
  /// Integer entries reduced into the field, row-major.
  static Mat from_ints(Field field, std::size_t rows, std::size_t cols, const std::vector<long long>& entries);
  static Mat column_vector(Field field, const std::vector<long long>& entries);
  /// Standard basis vector e_i of length n as a column.
  static Mat unit_column(Field field, std::size_t n, std::size_t i);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  FieldScalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const FieldScalar& v);
  void set(std::size_t r, std::size_t c, long long v);
  bool is_zero_at(std::size_t r, std::size_t c) const;

  bool is_zero() const;
  bool is_identity() const;

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const FieldScalar& s) const;
  /// Adds s * o into this matrix in place.
  void add_scaled(const Mat& o, const FieldScalar& s);
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& m);
  /// Adds m into the block starting at (r0, c0).
  void add_block(std::size_t r0, std::size_t c0, const Mat& m);
  Mat select_columns(const std::vector<std::size_t>& cols) const;
  Mat select_rows(const std::vector<std::size_t>& rows) const;
  Mat column(std::size_t c) const { return select_columns({c}); }

  /// Row-major flattening into a single column.
  Mat vectorize() const;
  /// Inverse of vectorize.
  static Mat from_vector(const Mat& column, std::size_t rows, std::size_t cols);

  static Mat hstack(const Mat& a, const Mat& b);
  static Mat vstack(const Mat& a, const Mat& b);
  static Mat hstack(const std::vector<Mat>& parts, Field field, std::size_t rows);
  static Mat vstack(const std::vector<Mat>& parts, Field field, std::size_t cols);
  static Mat block_diagonal(const std::vector<Mat>& parts, Field field);
  static Mat kron(const Mat& a, const Mat& b);

  /// Compact, totally ordered description of the entries; used for canonical sorting.
  std::string key() const;
  std::string to_string() const;

  // Raw access for the elimination kernels.
  const std::vector<std::uint32_t>& residues() const { return mod_; }
  const std::vector<mpq_class>& rationals() const { return rat_; }

 private:
  friend struct MatAccess;
  void check_same_field(const Mat& o, const char* op) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> mod_;
  std::vector<mpq_class> rat_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form. Over Q the elimination is fraction free (Bareiss) on
/// integer-scaled rows, normalised at the end.
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
/// Columns form a basis of the right null space.
Mat kernel_basis(const Mat& m);
/// Some X with a * X = b, or nullopt when no solution exists.
std::optional<Mat> solve(const Mat& a, const Mat& b);
std::optional<Mat> inverse(const Mat& m);
bool is_invertible(const Mat& m);
/// The pivot columns of m: a basis of its column space taken from m itself.
Mat column_space_basis(const Mat& m);
/// Standard basis vectors completing the column space of m to the whole ambient space.
Mat complement_columns(const Mat& m);
Mat intersect_columnspaces(const Mat& a, const Mat& b);
Mat sum_columnspaces(const Mat& a, const Mat& b);
/// True when every column of b lies in the column space of a.
bool columns_in_span(const Mat& a, const Mat& b);

/// Quotient of F^n by the column space of `sub`: projection (dim quotient x n) with
/// kernel exactly colspace(sub), and a section with projection * section = I.
struct Quotient {
  Mat projection;
  Mat section;
};
Quotient quotient_by(const Mat& sub, std::size_t n);

}  // namespace gproj
