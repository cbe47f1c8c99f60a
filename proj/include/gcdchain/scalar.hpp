// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace gcdchain {

/// Base field descriptor: the rationals, or GF(q) for a prime q < 2^32.
struct Field {
  std::uint64_t prime = 0;  // 0 means rationals

  static Field rationals() { return Field{0}; }
  static Field prime_field(std::uint64_t q);

  bool is_rational() const noexcept { return prime == 0; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;
};

/// Exact element of a Field. Rationals are kept canonical by GMP (reduced,
/// positive denominator); residues live in [0, q).
class Scalar {
 public:
  explicit Scalar(Field field = Field::rationals());
  Scalar(Field field, long value);
  Scalar(Field field, const mpz_class& value);
  Scalar(Field field, const mpq_class& value);

  /// Parses "n", "-n" or "n/d".
  static Scalar parse(Field field, const std::string& text);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  Scalar inverse() const;

  /// True when the printed form starts with a minus sign. Residues never do.
  bool is_negative() const;

  /// "n/d" or "n" for rationals, the residue for prime fields.
  std::string to_string() const;

  /// Residue value; only meaningful for prime fields.
  std::uint64_t residue() const;
  const mpq_class& rational() const;

 private:
  void check_field(const Scalar& rhs) const;

  Field field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace gcdchain
