// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gcdchain/scalar.hpp"

namespace gcdchain {

/// Dense univariate polynomial over a Field, ascending coefficients, no
/// trailing zeros. The zero polynomial has degree -1.
class XPoly {
 public:
  explicit XPoly(Field field = Field::rationals()) : field_(field) {}
  XPoly(Field field, std::vector<Scalar> coeffs);
  XPoly(Field field, std::initializer_list<long> coeffs);

  static XPoly constant(const Scalar& c);
  static XPoly monomial(const Scalar& c, int degree);
  static XPoly one(Field field) { return constant(Scalar(field, 1)); }
  static XPoly x_power(Field field, int degree) {
    return monomial(Scalar(field, 1), degree);
  }

  const Field& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const;
  bool is_monic() const;

  /// Coefficient of x^i, zero outside the stored range.
  Scalar coeff(int i) const;
  Scalar lc() const;
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }

  XPoly monic() const;
  XPoly derivative() const;
  XPoly pow(unsigned n) const;

  XPoly operator-() const;
  XPoly& operator+=(const XPoly& rhs);
  XPoly& operator-=(const XPoly& rhs);
  XPoly& operator*=(const XPoly& rhs);
  XPoly& operator*=(const Scalar& rhs);

  friend XPoly operator+(XPoly lhs, const XPoly& rhs) { return lhs += rhs; }
  friend XPoly operator-(XPoly lhs, const XPoly& rhs) { return lhs -= rhs; }
  friend XPoly operator*(XPoly lhs, const XPoly& rhs) { return lhs *= rhs; }
  friend XPoly operator*(XPoly lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend bool operator==(const XPoly& lhs, const XPoly& rhs) = default;

  /// Sage-style rendering, descending degree: "2*x^3 - x + 1".
  std::string to_string(const std::string& var = "x") const;

  /// Rendered terms with explicit signs, used when flattening into a larger sum.
  std::vector<std::pair<bool, std::string>> signed_terms(const std::string& var = "x") const;

 private:
  void normalize();

  Field field_;
  std::vector<Scalar> coeffs_;
};

struct XDivRem {
  XPoly quotient;
  XPoly remainder;
};

/// Euclidean division in k[x]: a = q*b + r, deg r < deg b.
XDivRem xpoly_divrem(const XPoly& a, const XPoly& b);

/// Monic gcd; throws Precondition when both inputs are zero.
XPoly xpoly_gcd(const XPoly& a, const XPoly& b);

struct XGcd {
  XPoly gcd;  // monic
  XPoly u;
  XPoly v;    // u*a + v*b == gcd
};

XGcd xpoly_xgcd(const XPoly& a, const XPoly& b);

/// Exact quotient a / b; throws NotDivisible on a nonzero remainder.
XPoly xpoly_exact_div(const XPoly& a, const XPoly& b);

bool xpoly_divides(const XPoly& divisor, const XPoly& a);

/// The defining polynomial T of R = k[x]/<T>. Always monic of degree >= 1.
class Modulus {
 public:
  explicit Modulus(XPoly t);

  const XPoly& poly() const noexcept { return t_; }
  const Field& field() const noexcept { return t_.field(); }
  int degree() const noexcept { return t_.degree(); }

  /// Canonical residue of a preimage.
  XPoly reduce(const XPoly& a) const;

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  XPoly t_;
};

XPoly relem_mul(const XPoly& a, const XPoly& b, const Modulus& t);

bool relem_is_invertible(const XPoly& a, const Modulus& t);

/// Inverse of a in k[x]/<T>; throws NotInvertible when gcd(a, T) != 1.
XPoly relem_inverse(const XPoly& a, const Modulus& t);

}  // namespace gcdchain
