// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "gcdchain/xpoly.hpp"

namespace gcdchain {

/// Dense polynomial in y over R = k[x]/<T>. Coefficients are canonical
/// residues modulo the carried Modulus; there are no trailing zeros.
///
/// Arithmetic between polynomials over different moduli is an error. Moving
/// to another modulus is explicit: reduce_to() for a divisor of the current
/// modulus, with_modulus() to reinterpret the representatives verbatim.
class YPoly {
 public:
  explicit YPoly(Modulus modulus) : mod_(std::move(modulus)) {}
  YPoly(Modulus modulus, std::vector<XPoly> coeffs);

  static YPoly constant(const Modulus& m, const XPoly& c);
  static YPoly one(const Modulus& m) { return constant(m, XPoly::one(m.field())); }
  /// c * y^k
  static YPoly monomial(const Modulus& m, const XPoly& c, int k);
  static YPoly y_power(const Modulus& m, int k) {
    return monomial(m, XPoly::one(m.field()), k);
  }

  const Modulus& modulus() const noexcept { return mod_; }
  const Field& field() const noexcept { return mod_.field(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const;
  bool is_monic() const;

  XPoly coeff(int j) const;
  XPoly lc() const { return coeff(degree()); }
  const std::vector<XPoly>& coeffs() const noexcept { return c_; }

  /// Reduce modulo a divisor of the current modulus.
  YPoly reduce_to(const Modulus& coarser) const;
  /// Re-read the coefficient representatives modulo another polynomial.
  YPoly with_modulus(const Modulus& other) const;
  /// Drop every term of degree >= m.
  YPoly truncate(int m) const;

  YPoly operator-() const;
  YPoly& operator+=(const YPoly& rhs);
  YPoly& operator-=(const YPoly& rhs);
  YPoly& operator*=(const YPoly& rhs);
  YPoly& operator*=(const XPoly& rhs);

  friend YPoly operator+(YPoly lhs, const YPoly& rhs) { return lhs += rhs; }
  friend YPoly operator-(YPoly lhs, const YPoly& rhs) { return lhs -= rhs; }
  friend YPoly operator*(YPoly lhs, const YPoly& rhs) { return lhs *= rhs; }
  friend YPoly operator*(YPoly lhs, const XPoly& rhs) { return lhs *= rhs; }
  friend bool operator==(const YPoly&, const YPoly&) = default;

  YPoly pow(unsigned n) const;

  /// Sage-style rendering: "y^2 + (x^3 + 1)*y - 2*x".
  std::string to_string() const;

 private:
  void normalize();
  void check_modulus(const YPoly& rhs) const;

  Modulus mod_;
  std::vector<XPoly> c_;
};

YPoly ypoly_mul(const YPoly& a, const YPoly& b);

struct YDivRem {
  YPoly quotient;
  YPoly remainder;
};

/// Division by a monic divisor: a = q*c + r mod T with deg r < deg c.
/// Throws NonMonic when lc(c) != 1.
YDivRem ypoly_divrem_monic(const YPoly& a, const YPoly& c);

/// Coefficient-wise exact quotient S / P, returned modulo T / P.
/// Throws NotDivisible if P fails to divide some coefficient representative.
YPoly ypoly_exact_div_xpoly(const YPoly& s, const XPoly& p);

/// True when every coefficient is nilpotent, tested as F^deg(T) == 0.
bool ypoly_is_nilpotent(const YPoly& f);

}  // namespace gcdchain
