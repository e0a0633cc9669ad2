#include "gproj/mat.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "gproj/errors.hpp"

namespace gproj {

struct MatAccess {
  static std::vector<std::uint32_t>& mod(Mat& m) { return m.mod_; }
  static std::vector<mpq_class>& rat(Mat& m) { return m.rat_; }
};

namespace {

std::string shape(const Mat& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

Mat::Mat(Field field, std::size_t rows, std::size_t cols) : field_(field), rows_(rows), cols_(cols) {
  if (field.is_prime()) {
    mod_.assign(rows * cols, 0);
  } else {
    rat_.assign(rows * cols, mpq_class(0));
  }
}

Mat Mat::identity(Field field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::from_ints(Field field, std::size_t rows, std::size_t cols, const std::vector<long long>& entries) {
  if (entries.size() != rows * cols) {
    throw DimensionMismatch("from_ints: " + std::to_string(entries.size()) + " entries for a " +
                            std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  }
  Mat m(field, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i / std::max<std::size_t>(cols, 1), i % cols, entries[i]);
  return m;
}

Mat Mat::column_vector(Field field, const std::vector<long long>& entries) {
  return from_ints(field, entries.size(), 1, entries);
}

Mat Mat::unit_column(Field field, std::size_t n, std::size_t i) {
  Mat m(field, n, 1);
  m.set(i, 0, 1);
  return m;
}

FieldScalar Mat::at(std::size_t r, std::size_t c) const {
  if (field_.is_prime()) return FieldScalar::residue(field_, mod_[r * cols_ + c]);
  return FieldScalar(field_, rat_[r * cols_ + c]);
}

void Mat::set(std::size_t r, std::size_t c, const FieldScalar& v) {
  if (v.field() != field_) throw FieldMismatch("set: scalar from " + v.field().name() + " into " + field_.name());
  if (field_.is_prime()) {
    mod_[r * cols_ + c] = v.residue();
  } else {
    rat_[r * cols_ + c] = v.rational();
  }
}

void Mat::set(std::size_t r, std::size_t c, long long v) {
  if (field_.is_prime()) {
    FieldScalar s(field_, v);
    mod_[r * cols_ + c] = s.residue();
  } else {
    rat_[r * cols_ + c] = mpq_class(mpz_class(std::to_string(v)));
  }
}

bool Mat::is_zero_at(std::size_t r, std::size_t c) const {
  return field_.is_prime() ? mod_[r * cols_ + c] == 0 : rat_[r * cols_ + c] == 0;
}

bool Mat::is_zero() const {
  if (field_.is_prime()) return std::all_of(mod_.begin(), mod_.end(), [](auto x) { return x == 0; });
  return std::all_of(rat_.begin(), rat_.end(), [](const mpq_class& x) { return x == 0; });
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      bool one = field_.is_prime() ? mod_[i * cols_ + j] == 1 : rat_[i * cols_ + j] == 1;
      if (i == j ? !one : !is_zero_at(i, j)) return false;
    }
  }
  return true;
}

void Mat::check_same_field(const Mat& o, const char* op) const {
  if (field_ != o.field_) {
    throw FieldMismatch(std::string(op) + ": matrices over " + field_.name() + " and " + o.field_.name());
  }
}

Mat Mat::operator*(const Mat& o) const {
  check_same_field(o, "multiply");
  if (cols_ != o.rows_) throw DimensionMismatch("multiply: " + shape(*this) + " * " + shape(o));
  Mat r(field_, rows_, o.cols_);
  if (field_.is_prime()) {
    const std::uint64_t p = field_.characteristic();
    std::vector<std::uint64_t> acc(o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < cols_; ++k) {
        std::uint64_t a = mod_[i * cols_ + k];
        if (a == 0) continue;
        const std::uint32_t* orow = &o.mod_[k * o.cols_];
        for (std::size_t j = 0; j < o.cols_; ++j) acc[j] = (acc[j] + a * orow[j]) % p;
      }
      for (std::size_t j = 0; j < o.cols_; ++j) r.mod_[i * o.cols_ + j] = static_cast<std::uint32_t>(acc[j]);
    }
  } else {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const mpq_class& a = rat_[i * cols_ + k];
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          if (o.rat_[k * o.cols_ + j] != 0) r.rat_[i * o.cols_ + j] += a * o.rat_[k * o.cols_ + j];
        }
      }
    }
  }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r = *this;
  r.add_scaled(o, FieldScalar(field_, 1));
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r = *this;
  r.add_scaled(o, FieldScalar(field_, -1));
  return r;
}

Mat Mat::operator-() const { return scaled(FieldScalar(field_, -1)); }

Mat Mat::scaled(const FieldScalar& s) const {
  if (s.field() != field_) throw FieldMismatch("scale: scalar from " + s.field().name());
  Mat r = *this;
  if (field_.is_prime()) {
    const std::uint64_t p = field_.characteristic();
    for (auto& x : r.mod_) x = static_cast<std::uint32_t>(x * std::uint64_t{s.residue()} % p);
  } else {
    for (auto& x : r.rat_) x *= s.rational();
  }
  return r;
}

void Mat::add_scaled(const Mat& o, const FieldScalar& s) {
  check_same_field(o, "add");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("add: " + shape(*this) + " + " + shape(o));
  if (field_.is_prime()) {
    const std::uint64_t p = field_.characteristic();
    const std::uint64_t f = s.residue();
    for (std::size_t i = 0; i < mod_.size(); ++i) {
      mod_[i] = static_cast<std::uint32_t>((mod_[i] + f * o.mod_[i]) % p);
    }
  } else {
    for (std::size_t i = 0; i < rat_.size(); ++i) {
      if (o.rat_[i] != 0) rat_[i] += s.rational() * o.rat_[i];
    }
  }
}

bool Mat::operator==(const Mat& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && mod_ == o.mod_ && rat_ == o.rat_;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_prime()) {
        r.mod_[j * rows_ + i] = mod_[i * cols_ + j];
      } else {
        r.rat_[j * rows_ + i] = rat_[i * cols_ + j];
      }
    }
  }
  return r;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) throw DimensionMismatch("block out of range of " + shape(*this));
  Mat r(field_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) {
      if (field_.is_prime()) {
        r.mod_[i * ncols + j] = mod_[(r0 + i) * cols_ + c0 + j];
      } else {
        r.rat_[i * ncols + j] = rat_[(r0 + i) * cols_ + c0 + j];
      }
    }
  }
  return r;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& m) {
  check_same_field(m, "set_block");
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw DimensionMismatch("set_block out of range");
  for (std::size_t i = 0; i < m.rows_; ++i) {
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (field_.is_prime()) {
        mod_[(r0 + i) * cols_ + c0 + j] = m.mod_[i * m.cols_ + j];
      } else {
        rat_[(r0 + i) * cols_ + c0 + j] = m.rat_[i * m.cols_ + j];
      }
    }
  }
}

void Mat::add_block(std::size_t r0, std::size_t c0, const Mat& m) {
  check_same_field(m, "add_block");
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw DimensionMismatch("add_block out of range");
  const std::uint64_t p = field_.characteristic();
  for (std::size_t i = 0; i < m.rows_; ++i) {
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (field_.is_prime()) {
        auto& x = mod_[(r0 + i) * cols_ + c0 + j];
        x = static_cast<std::uint32_t>((x + std::uint64_t{m.mod_[i * m.cols_ + j]}) % p);
      } else {
        rat_[(r0 + i) * cols_ + c0 + j] += m.rat_[i * m.cols_ + j];
      }
    }
  }
}

Mat Mat::select_columns(const std::vector<std::size_t>& cols) const {
  Mat r(field_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (field_.is_prime()) {
        r.mod_[i * cols.size() + j] = mod_[i * cols_ + cols[j]];
      } else {
        r.rat_[i * cols.size() + j] = rat_[i * cols_ + cols[j]];
      }
    }
  }
  return r;
}

Mat Mat::select_rows(const std::vector<std::size_t>& rows) const {
  Mat r(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_prime()) {
        r.mod_[i * cols_ + j] = mod_[rows[i] * cols_ + j];
      } else {
        r.rat_[i * cols_ + j] = rat_[rows[i] * cols_ + j];
      }
    }
  }
  return r;
}

Mat Mat::vectorize() const {
  Mat r(field_, rows_ * cols_, 1);
  r.mod_ = mod_;
  r.rat_ = rat_;
  return r;
}

Mat Mat::from_vector(const Mat& column, std::size_t rows, std::size_t cols) {
  if (column.cols_ != 1 || column.rows_ != rows * cols) throw DimensionMismatch("from_vector: wrong length");
  Mat r(column.field_, rows, cols);
  r.mod_ = column.mod_;
  r.rat_ = column.rat_;
  return r;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
  a.check_same_field(b, "hstack");
  if (a.rows_ != b.rows_) throw DimensionMismatch("hstack: " + shape(a) + " | " + shape(b));
  Mat r(a.field_, a.rows_, a.cols_ + b.cols_);
  r.set_block(0, 0, a);
  r.set_block(0, a.cols_, b);
  return r;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
  a.check_same_field(b, "vstack");
  if (a.cols_ != b.cols_) throw DimensionMismatch("vstack: " + shape(a) + " / " + shape(b));
  Mat r(a.field_, a.rows_ + b.rows_, a.cols_);
  r.set_block(0, 0, a);
  r.set_block(a.rows_, 0, b);
  return r;
}

Mat Mat::hstack(const std::vector<Mat>& parts, Field field, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows_ != rows) throw DimensionMismatch("hstack: part with " + std::to_string(p.rows_) + " rows");
    cols += p.cols_;
  }
  Mat r(field, rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    r.set_block(0, c, p);
    c += p.cols_;
  }
  return r;
}

Mat Mat::vstack(const std::vector<Mat>& parts, Field field, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols_ != cols) throw DimensionMismatch("vstack: part with " + std::to_string(p.cols_) + " columns");
    rows += p.rows_;
  }
  Mat r(field, rows, cols);
  std::size_t row = 0;
  for (const auto& p : parts) {
    r.set_block(row, 0, p);
    row += p.rows_;
  }
  return r;
}

Mat Mat::block_diagonal(const std::vector<Mat>& parts, Field field) {
  std::size_t rows = 0, cols = 0;
  for (const auto& p : parts) {
    rows += p.rows_;
    cols += p.cols_;
  }
  Mat r(field, rows, cols);
  std::size_t i = 0, j = 0;
  for (const auto& p : parts) {
    r.set_block(i, j, p);
    i += p.rows_;
    j += p.cols_;
  }
  return r;
}

Mat Mat::kron(const Mat& a, const Mat& b) {
  a.check_same_field(b, "kron");
  Mat r(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (a.is_zero_at(i, j)) continue;
      r.set_block(i * b.rows_, j * b.cols_, b.scaled(a.at(i, j)));
    }
  }
  return r;
}

std::string Mat::key() const {
  std::string k = std::to_string(rows_) + "x" + std::to_string(cols_) + ":";
  for (std::size_t i = 0; i < rows_ * cols_; ++i) {
    k += field_.is_prime() ? std::to_string(mod_[i]) : rat_[i].get_str();
    k += ',';
  }
  return k;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << m.at(i, j).to_string();
    }
  }
  return os << "]";
}

namespace {

std::vector<std::size_t> rref_prime(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols,
                                    std::uint32_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i * cols + c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    if (piv != r) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    std::uint32_t* prow = &a[r * cols];
    if (p != 2 && prow[c] != 1) {
      const std::uint64_t inv = mod_inverse(prow[c], p);
      for (std::size_t j = c; j < cols; ++j) prow[j] = static_cast<std::uint32_t>(prow[j] * inv % p);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      std::uint32_t* row = &a[i * cols];
      const std::uint32_t f = row[c];
      if (f == 0) continue;
      if (p == 2) {
        for (std::size_t j = c; j < cols; ++j) row[j] ^= prow[j];
      } else {
        const std::uint64_t g = p - f;
        for (std::size_t j = c; j < cols; ++j) {
          if (prow[j] != 0) row[j] = static_cast<std::uint32_t>((row[j] + g * prow[j]) % p);
        }
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Fraction-free (Bareiss) elimination on integer rows, then normalisation to RREF.
std::vector<std::size_t> rref_rational(std::vector<mpq_class>& a, std::size_t rows, std::size_t cols) {
  std::vector<mpz_class> z(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a[i * cols + j].get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& q = a[i * cols + j];
      z[i * cols + j] = q.get_num() * (l / q.get_den());
    }
  }
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (z[i * cols + c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(z[piv * cols + j], z[r * cols + j]);
    }
    const mpz_class pv = z[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const mpz_class f = z[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = pv * z[i * cols + j] - f * z[r * cols + j];
        mpz_divexact(z[i * cols + j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      z[i * cols + c] = 0;
    }
    prev = pv;
    pivots.push_back(c);
    ++r;
  }
  // Back substitution over Q on the echelon rows.
  for (std::size_t i = 0; i < rows * cols; ++i) a[i] = i < r * cols ? mpq_class(z[i]) : mpq_class(0);
  for (std::size_t k = r; k-- > 0;) {
    const std::size_t c = pivots[k];
    const mpq_class inv = 1 / a[k * cols + c];
    for (std::size_t j = c; j < cols; ++j) {
      if (a[k * cols + j] != 0) a[k * cols + j] *= inv;
    }
    for (std::size_t i = 0; i < k; ++i) {
      const mpq_class f = a[i * cols + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        if (a[k * cols + j] != 0) a[i * cols + j] -= f * a[k * cols + j];
      }
    }
  }
  return pivots;
}

}  // namespace

RrefResult rref(const Mat& m) {
  RrefResult res{m, {}};
  if (m.field().is_prime()) {
    res.pivots = rref_prime(MatAccess::mod(res.reduced), m.rows(), m.cols(), m.field().characteristic());
  } else {
    res.pivots = rref_rational(MatAccess::rat(res.reduced), m.rows(), m.cols());
  }
  return res;
}

std::size_t rank(const Mat& m) { return rref(m).rank(); }

Mat kernel_basis(const Mat& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Mat k(m.field(), m.cols(), free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k.set(free_cols[f], f, 1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      if (!r.reduced.is_zero_at(i, free_cols[f])) k.set(r.pivots[i], f, -r.reduced.at(i, free_cols[f]));
    }
  }
  return k;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.field() != b.field()) throw FieldMismatch("solve: " + a.field().name() + " vs " + b.field().name());
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: " + shape(a) + " against " + shape(b));
  const RrefResult r = rref(Mat::hstack(a, b));
  for (auto c : r.pivots) {
    if (c >= a.cols()) return std::nullopt;
  }
  Mat x(a.field(), a.cols(), b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (!r.reduced.is_zero_at(i, a.cols() + j)) x.set(r.pivots[i], j, r.reduced.at(i, a.cols() + j));
    }
  }
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Mat::identity(m.field(), m.rows()));
}

bool is_invertible(const Mat& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Mat column_space_basis(const Mat& m) { return m.select_columns(rref(m).pivots); }

Mat complement_columns(const Mat& m) {
  const std::size_t n = m.rows();
  const RrefResult r = rref(Mat::hstack(m, Mat::identity(m.field(), n)));
  std::vector<std::size_t> picks;
  for (auto c : r.pivots) {
    if (c >= m.cols()) picks.push_back(c - m.cols());
  }
  return Mat::identity(m.field(), n).select_columns(picks);
}

Mat intersect_columnspaces(const Mat& a, const Mat& b) {
  if (a.field() != b.field()) throw FieldMismatch("intersect_columnspaces: mixed fields");
  if (a.rows() != b.rows()) throw DimensionMismatch("intersect_columnspaces: " + shape(a) + " vs " + shape(b));
  const Mat k = kernel_basis(Mat::hstack(a, -b));
  const Mat u = k.block(0, 0, a.cols(), k.cols());
  return column_space_basis(a * u);
}

Mat sum_columnspaces(const Mat& a, const Mat& b) {
  if (a.field() != b.field()) throw FieldMismatch("sum_columnspaces: mixed fields");
  if (a.rows() != b.rows()) throw DimensionMismatch("sum_columnspaces: " + shape(a) + " vs " + shape(b));
  return column_space_basis(Mat::hstack(a, b));
}

bool columns_in_span(const Mat& a, const Mat& b) { return solve(a, b).has_value(); }

Quotient quotient_by(const Mat& sub, std::size_t n) {
  const Field f = sub.field();
  const Mat basis = column_space_basis(sub);
  const Mat comp = complement_columns(basis);
  const Mat full = Mat::hstack(basis, comp);
  const auto inv = inverse(full);
  if (!inv) throw InternalError("quotient_by: completed basis is singular");
  Quotient q;
  q.projection = inv->block(basis.cols(), 0, comp.cols(), n);
  q.section = comp;
  if (full.rows() != n) throw DimensionMismatch("quotient_by: ambient dimension mismatch");
  (void)f;
  return q;
}

}  // namespace gproj
