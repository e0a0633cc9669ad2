#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace gproj {

/// Descriptor of the ground field: a prime field F_p (p <= 2^31) or the rationals.
class Field {
 public:
  Field() = default;

  static Field prime(std::uint32_t p);
  static Field rationals() { return Field(0); }

  bool is_prime() const { return p_ != 0; }
  bool is_rational() const { return p_ == 0; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  /// Parses "Q", "QQ", "F_p", "GF(p)" or a bare prime.
  static Field parse(const std::string& text);

  friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }
  friend bool operator!=(Field a, Field b) { return a.p_ != b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 2;
};

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

/// Exact element of a field. Rationals are kept reduced with positive denominator,
/// residues lie in [0, p).
class FieldScalar {
 public:
  explicit FieldScalar(Field f) : field_(f) {}
  FieldScalar(Field f, long long value);
  FieldScalar(Field f, const mpq_class& value);

  static FieldScalar residue(Field f, std::uint32_t r);

  Field field() const { return field_; }
  bool is_zero() const;
  std::uint32_t residue() const { return residue_; }
  const mpq_class& rational() const { return rational_; }

  FieldScalar operator+(const FieldScalar& o) const;
  FieldScalar operator-(const FieldScalar& o) const;
  FieldScalar operator*(const FieldScalar& o) const;
  FieldScalar operator/(const FieldScalar& o) const;
  FieldScalar operator-() const;
  FieldScalar inverse() const;
  bool operator==(const FieldScalar& o) const;
  bool operator!=(const FieldScalar& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check(const FieldScalar& o) const;

  Field field_;
  std::uint32_t residue_ = 0;
  mpq_class rational_;
};

}  // namespace gproj
