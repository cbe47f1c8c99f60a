// SPDX-License-Identifier: Apache-2.0
#include "gcdchain/scalar.hpp"

#include <ostream>

#include "gcdchain/error.hpp"

namespace gcdchain {

namespace {

using u128 = unsigned __int128;

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

std::uint64_t reduce_signed(const mpz_class& v, std::uint64_t q) {
  mpz_class r = v % mpz_class(static_cast<unsigned long>(q));
  if (r < 0) r += static_cast<unsigned long>(q);
  return r.get_ui();
}

}  // namespace

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "division by zero";
    case ErrorKind::NotInvertible: return "not invertible";
    case ErrorKind::NotDivisible: return "not divisible";
    case ErrorKind::NonMonic: return "non-monic";
    case ErrorKind::ModulusMismatch: return "modulus mismatch";
    case ErrorKind::FieldMismatch: return "field mismatch";
    case ErrorKind::NotCoprime: return "not coprime";
    case ErrorKind::Precondition: return "precondition violated";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Invariant: return "internal invariant violated";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

Field Field::prime_field(std::uint64_t q) {
  if (q >= (std::uint64_t{1} << 32) || !is_prime(q)) {
    fail(ErrorKind::Precondition,
         "field characteristic must be a prime below 2^32, got " + std::to_string(q));
  }
  return Field{q};
}

std::string Field::name() const {
  return is_rational() ? "QQ" : "GF(" + std::to_string(prime) + ")";
}

Scalar::Scalar(Field field) : field_(field) {
  if (field_.is_rational()) value_ = mpq_class(0);
}

Scalar::Scalar(Field field, long value) : Scalar(field, mpz_class(value)) {}

Scalar::Scalar(Field field, const mpz_class& value) : field_(field) {
  if (field_.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = reduce_signed(value, field_.prime);
  }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field_.is_rational()) {
    mpq_class v = value;
    v.canonicalize();
    value_ = v;
    return;
  }
  std::uint64_t num = reduce_signed(value.get_num(), field_.prime);
  std::uint64_t den = reduce_signed(value.get_den(), field_.prime);
  if (den == 0) fail(ErrorKind::DivisionByZero, "denominator vanishes in " + field_.name());
  value_ = num;
  if (den != 1) {
    Scalar d(field_);
    d.value_ = den;
    *this /= d;
  }
}

Scalar Scalar::parse(Field field, const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    fail(ErrorKind::Parse, "malformed number '" + text + "'");
  }
  if (q.get_den() == 0) fail(ErrorKind::Parse, "zero denominator in '" + text + "'");
  q.canonicalize();
  return Scalar(field, q);
}

void Scalar::check_field(const Scalar& rhs) const {
  if (field_ != rhs.field_) {
    fail(ErrorKind::FieldMismatch, field_.name() + " vs " + rhs.field_.name());
  }
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

Scalar Scalar::operator-() const {
  Scalar r(field_);
  if (field_.is_rational()) {
    r.value_ = mpq_class(-std::get<mpq_class>(value_));
  } else {
    std::uint64_t v = std::get<std::uint64_t>(value_);
    r.value_ = v == 0 ? 0 : field_.prime - v;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_field(rhs);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  } else {
    std::uint64_t s = std::get<std::uint64_t>(value_) + std::get<std::uint64_t>(rhs.value_);
    if (s >= field_.prime) s -= field_.prime;
    value_ = s;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_field(rhs);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  } else {
    value_ = static_cast<std::uint64_t>(
        static_cast<u128>(std::get<std::uint64_t>(value_)) *
        std::get<std::uint64_t>(rhs.value_) % field_.prime);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  return lhs.field_ == rhs.field_ && lhs.value_ == rhs.value_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero scalar");
  Scalar r(field_);
  if (field_.is_rational()) {
    r.value_ = mpq_class(1 / std::get<mpq_class>(value_));
    return r;
  }
  // Fermat: a^(q-2).
  std::uint64_t base = std::get<std::uint64_t>(value_);
  std::uint64_t e = field_.prime - 2;
  std::uint64_t acc = 1;
  while (e != 0) {
    if (e & 1) acc = static_cast<std::uint64_t>(static_cast<u128>(acc) * base % field_.prime);
    base = static_cast<std::uint64_t>(static_cast<u128>(base) * base % field_.prime);
    e >>= 1;
  }
  r.value_ = acc;
  return r;
}

bool Scalar::is_negative() const {
  return field_.is_rational() && std::get<mpq_class>(value_) < 0;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) fail(ErrorKind::FieldMismatch, "residue() on a rational scalar");
  return std::get<std::uint64_t>(value_);
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) fail(ErrorKind::FieldMismatch, "rational() on a residue");
  return std::get<mpq_class>(value_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace gcdchain
