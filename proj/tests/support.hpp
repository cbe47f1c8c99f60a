// SPDX-License-Identifier: Apache-2.0
// Test helpers: a tiny expression reader for bivariate polynomials.
#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "gcdchain/ypoly.hpp"

namespace testsupport {

using gcdchain::Field;
using gcdchain::Modulus;
using gcdchain::Scalar;
using gcdchain::XPoly;
using gcdchain::YPoly;

/// Dense bivariate polynomial keyed by (deg_y, deg_x).
class Biv {
 public:
  explicit Biv(Field f) : field_(f) {}

  static Biv constant(Field f, const Scalar& c) {
    Biv b(f);
    b.add({0, 0}, c);
    return b;
  }

  void add(std::pair<int, int> key, const Scalar& c) {
    auto it = terms_.try_emplace(key, Scalar(field_)).first;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Biv operator+(const Biv& o) const {
    Biv r = *this;
    for (const auto& [k, v] : o.terms_) r.add(k, v);
    return r;
  }
  Biv operator-() const {
    Biv r(field_);
    for (const auto& [k, v] : terms_) r.add(k, -v);
    return r;
  }
  Biv operator-(const Biv& o) const { return *this + (-o); }
  Biv operator*(const Biv& o) const {
    Biv r(field_);
    for (const auto& [k1, v1] : terms_) {
      for (const auto& [k2, v2] : o.terms_) r.add({k1.first + k2.first, k1.second + k2.second}, v1 * v2);
    }
    return r;
  }

  const std::map<std::pair<int, int>, Scalar>& terms() const { return terms_; }
  Field field() const { return field_; }

  XPoly as_x() const {
    XPoly out(field_);
    for (const auto& [k, v] : terms_) {
      if (k.first != 0) throw std::invalid_argument("expected a polynomial in x only");
      out += XPoly::monomial(v, k.second);
    }
    return out;
  }

  YPoly as_y(const Modulus& m) const {
    int dy = -1;
    for (const auto& [k, v] : terms_) dy = std::max(dy, k.first);
    std::vector<XPoly> c(static_cast<std::size_t>(dy + 1), XPoly(field_));
    for (const auto& [k, v] : terms_) c[static_cast<std::size_t>(k.first)] += XPoly::monomial(v, k.second);
    return YPoly(m, std::move(c));
  }

 private:
  Field field_;
  std::map<std::pair<int, int>, Scalar> terms_;
};

class Reader {
 public:
  Reader(Field f, std::string text) : field_(f), s_(std::move(text)) {}

  Biv parse() {
    Biv r = expr();
    skip();
    if (pos_ != s_.size()) throw std::invalid_argument("trailing input in: " + s_);
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Biv expr() {
    Biv acc(field_);
    bool neg = eat('-');
    if (!neg) eat('+');
    acc = neg ? -term() : term();
    for (;;) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }
  Biv term() {
    Biv acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }
  Biv power() {
    Biv base = atom();
    if (!eat('^')) return base;
    long n = integer();
    Biv out = Biv::constant(field_, Scalar(field_, 1));
    for (long k = 0; k < n; ++k) out = out * base;
    return out;
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw std::invalid_argument("expected integer in: " + s_);
    return std::stol(s_.substr(start, pos_ - start));
  }
  Biv atom() {
    skip();
    if (eat('(')) {
      Biv r = expr();
      if (!eat(')')) throw std::invalid_argument("missing ) in: " + s_);
      return r;
    }
    if (eat('x')) {
      Biv b(field_);
      b.add({0, 1}, Scalar(field_, 1));
      return b;
    }
    if (eat('y')) {
      Biv b(field_);
      b.add({1, 0}, Scalar(field_, 1));
      return b;
    }
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) {
      ++pos_;
    }
    if (start == pos_) throw std::invalid_argument("unexpected token in: " + s_);
    return Biv::constant(field_, Scalar::parse(field_, s_.substr(start, pos_ - start)));
  }

  Field field_;
  std::string s_;
  std::size_t pos_ = 0;
};

inline XPoly xp(const std::string& text, Field f = Field::rationals()) {
  return Reader(f, text).parse().as_x();
}

inline YPoly yp(const std::string& text, const Modulus& m) {
  return Reader(m.field(), text).parse().as_y(m);
}

}  // namespace testsupport
