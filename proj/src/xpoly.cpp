// SPDX-License-Identifier: Apache-2.0
#include "gcdchain/xpoly.hpp"

#include "gcdchain/error.hpp"

namespace gcdchain {

XPoly::XPoly(Field field, std::vector<Scalar> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.field() != field_) fail(ErrorKind::FieldMismatch, "coefficient field differs");
  }
  normalize();
}

XPoly::XPoly(Field field, std::initializer_list<long> coeffs) : field_(field) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(field, c);
  normalize();
}

XPoly XPoly::constant(const Scalar& c) { return XPoly(c.field(), {c}); }

XPoly XPoly::monomial(const Scalar& c, int degree) {
  std::vector<Scalar> coeffs(static_cast<std::size_t>(degree) + 1, Scalar(c.field()));
  coeffs.back() = c;
  return XPoly(c.field(), std::move(coeffs));
}

void XPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool XPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

bool XPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

Scalar XPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Scalar(field_);
  return coeffs_[static_cast<std::size_t>(i)];
}

Scalar XPoly::lc() const { return coeff(degree()); }

XPoly XPoly::monic() const {
  if (is_zero()) return *this;
  return *this * lc().inverse();
}

XPoly XPoly::derivative() const {
  std::vector<Scalar> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(coeffs_[i] * Scalar(field_, i));
  return XPoly(field_, std::move(d));
}

XPoly XPoly::pow(unsigned n) const {
  XPoly acc = one(field_);
  XPoly base = *this;
  while (n != 0) {
    if (n & 1u) acc *= base;
    n >>= 1;
    if (n != 0) base *= base;
  }
  return acc;
}

XPoly XPoly::operator-() const {
  XPoly r(field_);
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
  return r;
}

XPoly& XPoly::operator+=(const XPoly& rhs) {
  if (field_ != rhs.field_) fail(ErrorKind::FieldMismatch, "XPoly addition");
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(field_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& rhs) { return *this += -rhs; }

XPoly& XPoly::operator*=(const XPoly& rhs) {
  if (field_ != rhs.field_) fail(ErrorKind::FieldMismatch, "XPoly multiplication");
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Scalar> out(coeffs_.size() + rhs.coeffs_.size() - 1, Scalar(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

XPoly& XPoly::operator*=(const Scalar& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  normalize();
  return *this;
}

std::vector<std::pair<bool, std::string>> XPoly::signed_terms(const std::string& var) const {
  std::vector<std::pair<bool, std::string>> terms;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    bool negative = c.is_negative();
    Scalar mag = negative ? -c : c;
    std::string monomial = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string text;
    if (monomial.empty()) {
      text = mag.to_string();
    } else if (mag.is_one()) {
      text = monomial;
    } else {
      text = mag.to_string() + "*" + monomial;
    }
    terms.emplace_back(negative, std::move(text));
  }
  return terms;
}

std::string XPoly::to_string(const std::string& var) const {
  auto terms = signed_terms(var);
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [negative, text] = terms[i];
    if (i == 0) {
      out += negative ? "-" + text : text;
    } else {
      out += negative ? " - " : " + ";
      out += text;
    }
  }
  return out;
}

XDivRem xpoly_divrem(const XPoly& a, const XPoly& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "xpoly_divrem by the zero polynomial");
  if (a.field() != b.field()) fail(ErrorKind::FieldMismatch, "xpoly_divrem");
  const Field f = a.field();
  if (a.degree() < b.degree()) return {XPoly(f), a};
  std::vector<Scalar> rem = a.coeffs();
  std::vector<Scalar> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Scalar(f));
  const Scalar lc_inv = b.lc().inverse();
  const auto& bc = b.coeffs();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    const Scalar c = rem[static_cast<std::size_t>(i + b.degree())] * lc_inv;
    quo[static_cast<std::size_t>(i)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j) {
      rem[static_cast<std::size_t>(i + j)] -= c * bc[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(b.degree()), Scalar(f));
  return {XPoly(f, std::move(quo)), XPoly(f, std::move(rem))};
}

XPoly xpoly_gcd(const XPoly& a, const XPoly& b) { return xpoly_xgcd(a, b).gcd; }

XGcd xpoly_xgcd(const XPoly& a, const XPoly& b) {
  if (a.is_zero() && b.is_zero()) fail(ErrorKind::Precondition, "gcd of two zero polynomials");
  const Field f = a.field();
  XPoly r0 = a, r1 = b;
  XPoly s0 = XPoly::one(f), s1(f);
  XPoly t0(f), t1 = XPoly::one(f);
  while (!r1.is_zero()) {
    auto [q, r] = xpoly_divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    XPoly s2 = s0 - q * s1;
    XPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Scalar inv = r0.lc().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

XPoly xpoly_exact_div(const XPoly& a, const XPoly& b) {
  auto [q, r] = xpoly_divrem(a, b);
  if (!r.is_zero()) {
    fail(ErrorKind::NotDivisible, b.to_string() + " does not divide " + a.to_string());
  }
  return q;
}

bool xpoly_divides(const XPoly& divisor, const XPoly& a) {
  return xpoly_divrem(a, divisor).remainder.is_zero();
}

Modulus::Modulus(XPoly t) : t_(std::move(t)) {
  if (t_.degree() < 1 || !t_.is_monic()) {
    fail(ErrorKind::NonMonic, "modulus must be monic of degree >= 1, got " + t_.to_string());
  }
}

XPoly Modulus::reduce(const XPoly& a) const {
  if (a.degree() < t_.degree()) return a;
  return xpoly_divrem(a, t_).remainder;
}

XPoly relem_mul(const XPoly& a, const XPoly& b, const Modulus& t) { return t.reduce(a * b); }

bool relem_is_invertible(const XPoly& a, const Modulus& t) {
  if (a.is_zero()) return false;
  return xpoly_gcd(a, t.poly()).degree() == 0;
}

XPoly relem_inverse(const XPoly& a, const Modulus& t) {
  if (a.is_zero()) fail(ErrorKind::NotInvertible, "0 modulo " + t.poly().to_string());
  XGcd g = xpoly_xgcd(a, t.poly());
  if (g.gcd.degree() != 0) {
    fail(ErrorKind::NotInvertible,
         a.to_string() + " shares " + g.gcd.to_string() + " with " + t.poly().to_string());
  }
  return t.reduce(g.u);
}

}  // namespace gcdchain
