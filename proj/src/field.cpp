#include "gproj/field.hpp"

#include <cctype>
#include <charconv>

#include "gproj/errors.hpp"

namespace gproj {

namespace {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p > (1u << 31) || !is_prime_number(p)) {
    throw InvalidInput("field characteristic " + std::to_string(p) + " is not a prime <= 2^31");
  }
  return Field(p);
}

std::string Field::name() const { return is_rational() ? "Q" : "F_" + std::to_string(p_); }

Field Field::parse(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t == "Q" || t == "QQ" || t == "q") return rationals();
  std::string digits = t;
  if (t.rfind("F_", 0) == 0) {
    digits = t.substr(2);
  } else if (t.rfind("GF(", 0) == 0 && t.back() == ')') {
    digits = t.substr(3, t.size() - 4);
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty() || p > (1ull << 31)) {
    throw InvalidInput("cannot parse field '" + text + "'");
  }
  return prime(static_cast<std::uint32_t>(p));
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on signed 64-bit values.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error("division by zero in " + Field::prime(p).name());
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

FieldScalar::FieldScalar(Field f, long long value) : field_(f) {
  if (f.is_prime()) {
    long long p = f.characteristic();
    long long r = value % p;
    if (r < 0) r += p;
    residue_ = static_cast<std::uint32_t>(r);
  } else {
    rational_ = mpq_class(mpz_class(std::to_string(value)));
  }
}

FieldScalar::FieldScalar(Field f, const mpq_class& value) : field_(f) {
  if (f.is_prime()) {
    mpz_class p = f.characteristic();
    mpz_class num = value.get_num() % p;
    mpz_class den = value.get_den() % p;
    if (num < 0) num += p;
    if (den < 0) den += p;
    if (den == 0) throw Error("rational " + value.get_str() + " has no image in " + f.name());
    std::uint64_t n = num.get_ui();
    std::uint64_t d = den.get_ui();
    residue_ = static_cast<std::uint32_t>(n * mod_inverse(static_cast<std::uint32_t>(d), f.characteristic()) %
                                          f.characteristic());
  } else {
    rational_ = value;
    rational_.canonicalize();
  }
}

FieldScalar FieldScalar::residue(Field f, std::uint32_t r) {
  FieldScalar s(f);
  s.residue_ = r % f.characteristic();
  return s;
}

void FieldScalar::check(const FieldScalar& o) const {
  if (field_ != o.field_) {
    throw FieldMismatch("scalar arithmetic mixes " + field_.name() + " and " + o.field_.name());
  }
}

bool FieldScalar::is_zero() const { return field_.is_prime() ? residue_ == 0 : rational_ == 0; }

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
  check(o);
  FieldScalar r(field_);
  if (field_.is_prime()) {
    r.residue_ = static_cast<std::uint32_t>((std::uint64_t{residue_} + o.residue_) % field_.characteristic());
  } else {
    r.rational_ = rational_ + o.rational_;
  }
  return r;
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const { return *this + (-o); }

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  check(o);
  FieldScalar r(field_);
  if (field_.is_prime()) {
    r.residue_ = static_cast<std::uint32_t>(std::uint64_t{residue_} * o.residue_ % field_.characteristic());
  } else {
    r.rational_ = rational_ * o.rational_;
  }
  return r;
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const { return *this * o.inverse(); }

FieldScalar FieldScalar::operator-() const {
  FieldScalar r(field_);
  if (field_.is_prime()) {
    r.residue_ = residue_ == 0 ? 0 : field_.characteristic() - residue_;
  } else {
    r.rational_ = -rational_;
  }
  return r;
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw Error("division by zero in " + field_.name());
  FieldScalar r(field_);
  if (field_.is_prime()) {
    r.residue_ = mod_inverse(residue_, field_.characteristic());
  } else {
    r.rational_ = 1 / rational_;
  }
  return r;
}

bool FieldScalar::operator==(const FieldScalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_prime() ? residue_ == o.residue_ : rational_ == o.rational_;
}

std::string FieldScalar::to_string() const {
  return field_.is_prime() ? std::to_string(residue_) : rational_.get_str();
}

}  // namespace gproj
