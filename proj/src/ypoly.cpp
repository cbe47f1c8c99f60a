// SPDX-License-Identifier: Apache-2.0
#include "gcdchain/ypoly.hpp"

#include "gcdchain/error.hpp"

namespace gcdchain {

YPoly::YPoly(Modulus modulus, std::vector<XPoly> coeffs)
    : mod_(std::move(modulus)), c_(std::move(coeffs)) {
  for (auto& c : c_) {
    if (c.field() != mod_.field()) fail(ErrorKind::FieldMismatch, "YPoly coefficient");
    c = mod_.reduce(c);
  }
  normalize();
}

YPoly YPoly::constant(const Modulus& m, const XPoly& c) { return YPoly(m, {c}); }

YPoly YPoly::monomial(const Modulus& m, const XPoly& c, int k) {
  std::vector<XPoly> coeffs(static_cast<std::size_t>(k) + 1, XPoly(m.field()));
  coeffs.back() = c;
  return YPoly(m, std::move(coeffs));
}

void YPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void YPoly::check_modulus(const YPoly& rhs) const {
  if (mod_ != rhs.mod_) {
    fail(ErrorKind::ModulusMismatch,
         mod_.poly().to_string() + " vs " + rhs.mod_.poly().to_string());
  }
}

bool YPoly::is_one() const { return c_.size() == 1 && c_[0].is_one(); }

bool YPoly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

XPoly YPoly::coeff(int j) const {
  if (j < 0 || j > degree()) return XPoly(field());
  return c_[static_cast<std::size_t>(j)];
}

YPoly YPoly::reduce_to(const Modulus& coarser) const {
  if (!xpoly_divides(coarser.poly(), mod_.poly())) {
    fail(ErrorKind::ModulusMismatch,
         coarser.poly().to_string() + " does not divide " + mod_.poly().to_string());
  }
  return YPoly(coarser, c_);
}

YPoly YPoly::with_modulus(const Modulus& other) const { return YPoly(other, c_); }

YPoly YPoly::truncate(int m) const {
  if (m > degree()) return *this;
  if (m <= 0) return YPoly(mod_);
  return YPoly(mod_, std::vector<XPoly>(c_.begin(), c_.begin() + m));
}

YPoly YPoly::operator-() const {
  YPoly r(mod_);
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(-c);
  return r;
}

YPoly& YPoly::operator+=(const YPoly& rhs) {
  check_modulus(rhs);
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), XPoly(field()));
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  normalize();
  return *this;
}

YPoly& YPoly::operator-=(const YPoly& rhs) { return *this += -rhs; }

YPoly& YPoly::operator*=(const YPoly& rhs) {
  check_modulus(rhs);
  if (is_zero() || rhs.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<XPoly> out(c_.size() + rhs.c_.size() - 1, XPoly(field()));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
  }
  for (auto& c : out) c = mod_.reduce(c);
  c_ = std::move(out);
  normalize();
  return *this;
}

YPoly& YPoly::operator*=(const XPoly& rhs) {
  for (auto& c : c_) c = mod_.reduce(c * rhs);
  normalize();
  return *this;
}

YPoly YPoly::pow(unsigned n) const {
  YPoly acc = one(mod_);
  YPoly base = *this;
  while (n != 0) {
    if (n & 1u) acc *= base;
    n >>= 1;
    if (n != 0) base *= base;
  }
  return acc;
}

std::string YPoly::to_string() const {
  if (c_.empty()) return "0";
  std::vector<std::pair<bool, std::string>> terms;
  for (int j = degree(); j >= 0; --j) {
    const XPoly& c = c_[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    if (j == 0) {
      auto flat = c.signed_terms();
      terms.insert(terms.end(), flat.begin(), flat.end());
      continue;
    }
    std::string ypow = j == 1 ? "y" : "y^" + std::to_string(j);
    auto inner = c.signed_terms();
    if (c.is_one()) {
      terms.emplace_back(false, ypow);
    } else if (inner.size() == 1) {
      // Unit magnitude: -y rather than -1*y.
      const bool unit = inner[0].second == "1";
      terms.emplace_back(inner[0].first, unit ? ypow : inner[0].second + "*" + ypow);
    } else {
      terms.emplace_back(false, "(" + c.to_string() + ")*" + ypow);
    }
  }
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

YPoly ypoly_mul(const YPoly& a, const YPoly& b) { return a * b; }

YDivRem ypoly_divrem_monic(const YPoly& a, const YPoly& c) {
  if (a.modulus() != c.modulus()) {
    fail(ErrorKind::ModulusMismatch, "ypoly_divrem_monic");
  }
  if (!c.is_monic()) fail(ErrorKind::NonMonic, "divisor " + c.to_string());
  const Modulus& m = c.modulus();
  if (a.degree() < c.degree()) return {YPoly(m), a};
  std::vector<XPoly> rem = a.coeffs();
  std::vector<XPoly> quo(static_cast<std::size_t>(a.degree() - c.degree()) + 1,
                         XPoly(m.field()));
  for (int i = a.degree() - c.degree(); i >= 0; --i) {
    XPoly q = rem[static_cast<std::size_t>(i + c.degree())];
    quo[static_cast<std::size_t>(i)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= c.degree(); ++j) {
      auto& slot = rem[static_cast<std::size_t>(i + j)];
      slot = m.reduce(slot - q * c.coeffs()[static_cast<std::size_t>(j)]);
    }
  }
  rem.resize(static_cast<std::size_t>(c.degree()), XPoly(m.field()));
  return {YPoly(m, std::move(quo)), YPoly(m, std::move(rem))};
}

YPoly ypoly_exact_div_xpoly(const YPoly& s, const XPoly& p) {
  const Modulus coarser(xpoly_exact_div(s.modulus().poly(), p.monic()));
  std::vector<XPoly> out;
  out.reserve(s.coeffs().size());
  for (const auto& c : s.coeffs()) out.push_back(xpoly_exact_div(c, p));
  return YPoly(coarser, std::move(out));
}

bool ypoly_is_nilpotent(const YPoly& f) {
  return f.pow(static_cast<unsigned>(f.modulus().degree())).is_zero();
}

}  // namespace gcdchain
