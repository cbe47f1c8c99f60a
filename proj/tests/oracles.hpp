// SPDX-License-Identifier: Apache-2.0
// Reference computations used only by the tests. They share the scalar and
// polynomial containers with the library but none of its algorithms.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gcdchain/ypoly.hpp"

namespace oracle {

using gcdchain::Field;
using gcdchain::Modulus;
using gcdchain::Scalar;
using gcdchain::XPoly;
using gcdchain::YPoly;

/// Determinant over k[x] by expansion over column subsets.
inline XPoly determinant(const std::vector<std::vector<XPoly>>& m, const Field& f) {
  const std::size_t n = m.size();
  if (n == 0) return XPoly::one(f);
  std::vector<XPoly> dp(std::size_t{1} << n, XPoly(f));
  dp[0] = XPoly::one(f);
  for (std::uint32_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask].is_zero()) continue;
    const auto row = static_cast<std::size_t>(__builtin_popcount(mask));
    if (row == n) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (1u << c)) continue;
      if (m[row][c].is_zero()) continue;
      const int above = __builtin_popcount(mask >> (c + 1));
      XPoly term = dp[mask] * m[row][c];
      if (above % 2) term = -term;
      dp[mask | (1u << c)] += term;
    }
  }
  return dp.back();
}

/// j-th subresultant of a and b from minors of the Sylvester matrix, computed
/// on representatives in k[x] and reduced modulo T at the end.
inline YPoly sylvester_subresultant(const YPoly& a, const YPoly& b, int j) {
  const Modulus& t = a.modulus();
  const Field f = t.field();
  const int m = a.degree(), n = b.degree();
  const int rows = m + n - 2 * j;
  const int cols = m + n - j;  // column c holds y^(cols - 1 - c)
  std::vector<std::vector<XPoly>> full(static_cast<std::size_t>(rows),
                                       std::vector<XPoly>(static_cast<std::size_t>(cols), XPoly(f)));
  int r = 0;
  for (int s = n - j - 1; s >= 0; --s, ++r) {
    for (int k = 0; k <= m; ++k) full[r][static_cast<std::size_t>(cols - 1 - (k + s))] = a.coeff(k);
  }
  for (int s = m - j - 1; s >= 0; --s, ++r) {
    for (int k = 0; k <= n; ++k) full[r][static_cast<std::size_t>(cols - 1 - (k + s))] = b.coeff(k);
  }
  std::vector<XPoly> out;
  for (int i = 0; i <= j; ++i) {
    std::vector<std::vector<XPoly>> minor(static_cast<std::size_t>(rows));
    for (int rr = 0; rr < rows; ++rr) {
      auto& row = minor[static_cast<std::size_t>(rr)];
      for (int c = 0; c < rows - 1; ++c) row.push_back(full[rr][static_cast<std::size_t>(c)]);
      row.push_back(full[rr][static_cast<std::size_t>(cols - 1 - i)]);
    }
    out.push_back(t.reduce(determinant(minor, f)));
  }
  return YPoly(t, std::move(out));
}

/// Truncated power series over k[x]/T, lowest degree first.
class Series {
 public:
  Series(const Modulus& t, int n) : t_(t), c_(static_cast<std::size_t>(n), XPoly(t.field())) {}

  static Series of(const YPoly& p, int n) {
    Series s(p.modulus(), n);
    for (int i = 0; i <= p.degree() && i < n; ++i) s.c_[static_cast<std::size_t>(i)] = p.coeff(i);
    return s;
  }

  int size() const { return static_cast<int>(c_.size()); }
  XPoly& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const XPoly& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

  Series operator*(const Series& o) const {
    Series r(t_, size());
    for (int i = 0; i < size(); ++i) {
      if ((*this)[i].is_zero()) continue;
      for (int j = 0; i + j < size(); ++j) r[i + j] = t_.reduce(r[i + j] + (*this)[i] * o[j]);
    }
    return r;
  }
  Series operator-(const Series& o) const {
    Series r(t_, size());
    for (int i = 0; i < size(); ++i) r[i] = t_.reduce((*this)[i] - o[i]);
    return r;
  }
  bool operator==(const Series& o) const { return c_ == o.c_; }

  /// Coefficients from degree k on, shifted down.
  Series tau(int k) const {
    Series r(t_, size());
    for (int i = k; i < size(); ++i) r[i - k] = (*this)[i];
    return r;
  }
  /// Coefficients below degree k.
  Series alpha(int k) const {
    Series r(t_, size());
    for (int i = 0; i < k && i < size(); ++i) r[i] = (*this)[i];
    return r;
  }
  /// Inverse by the coefficient recurrence; s[0] must be a unit mod T.
  Series inverse() const {
    Series r(t_, size());
    const XPoly inv0 = gcdchain::relem_inverse((*this)[0], t_);
    r[0] = inv0;
    for (int n = 1; n < size(); ++n) {
      XPoly acc(t_.field());
      for (int i = 1; i <= n; ++i) acc += (*this)[i] * r[n - i];
      r[n] = t_.reduce(-(acc * inv0));
    }
    return r;
  }
  YPoly truncated(int n) const {
    std::vector<XPoly> c(c_.begin(), c_.begin() + std::min(n, size()));
    return YPoly(t_, std::move(c));
  }

 private:
  Modulus t_;
  std::vector<XPoly> c_;
};

struct FixedPointWeierstrass {
  YPoly h;  // y^k - r
  YPoly u;  // f = u h, deg u <= deg f - k
  int iterations = 0;
};

/// Weierstrass division of y^k by f through the contraction
/// Z = tau(y^k) - tau(Z alpha(f) / tau(f)), iterated to its fixed point.
inline FixedPointWeierstrass weierstrass_fixed_point(const YPoly& f, int k) {
  const Modulus& t = f.modulus();
  const int d = f.degree();
  // Every application of the contraction lands in p * A[[y]] and drops k
  // coefficients at the top, so deg T + 1 rounds and that much headroom suffice.
  const int rounds = t.degree() + 1;
  const int n = d + 2 + (rounds + 1) * (k + 1);
  const Series fs = Series::of(f, n);
  const Series tau_f_inv = fs.tau(k).inverse();
  const Series contraction = fs.alpha(k) * tau_f_inv;
  Series target(t, n);
  target[0] = XPoly::one(t.field());  // tau(y^k)
  Series z = target;
  FixedPointWeierstrass out{YPoly(t), YPoly(t), 0};
  for (int it = 0; it < rounds + 2; ++it) {
    Series next = target - (z * contraction).tau(k);
    ++out.iterations;
    if (next == z) break;
    z = std::move(next);
  }
  const Series q = z * tau_f_inv;
  Series yk(t, n);
  yk[k] = XPoly::one(t.field());
  const Series r = (yk - q * fs).alpha(k);
  out.h = YPoly::y_power(t, k) - r.truncated(k);
  out.u = q.inverse().truncated(d - k + 1);
  return out;
}

}  // namespace oracle
