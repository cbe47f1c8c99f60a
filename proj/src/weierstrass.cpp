// SPDX-License-Identifier: Apache-2.0
#include "gcdchain/weierstrass.hpp"

#include "gcdchain/error.hpp"

namespace gcdchain {

namespace {

bool relem_is_nilpotent(const XPoly& c, const Modulus& m) {
  XPoly acc = XPoly::one(m.field());
  for (int i = 0; i < m.degree(); ++i) acc = relem_mul(acc, c, m);
  return acc.is_zero();
}

void check_division_shape(const YPoly& f, int k) {
  const Modulus& m = f.modulus();
  if (k < 0 || k > f.degree()) {
    fail(ErrorKind::Precondition,
         "Weierstrass index " + std::to_string(k) + " out of range for " + f.to_string());
  }
  if (!relem_is_invertible(f.coeff(k), m)) {
    fail(ErrorKind::Precondition,
         "coefficient of y^" + std::to_string(k) + " in " + f.to_string() + " is not invertible");
  }
  for (int j = k + 1; j <= f.degree(); ++j) {
    if (!relem_is_nilpotent(f.coeff(j), m)) {
      fail(ErrorKind::Precondition,
           "coefficient of y^" + std::to_string(j) + " in " + f.to_string() +
               " is not nilpotent");
    }
  }
}

}  // namespace

YPoly series_inverse_trunc(const YPoly& u, int m) {
  const Modulus& mod = u.modulus();
  if (m <= 0) return YPoly(mod);
  const XPoly v0 = relem_inverse(u.coeff(0), mod);
  std::vector<XPoly> v{v0};
  for (int n = 1; n < m; ++n) {
    XPoly acc(mod.field());
    for (int j = 1; j <= n; ++j) acc += u.coeff(j) * v[static_cast<std::size_t>(n - j)];
    v.push_back(mod.reduce(-(mod.reduce(acc) * v0)));
  }
  return YPoly(mod, std::move(v));
}

WeierstrassDivision weierstrass_divide(const YPoly& f, int k) {
  check_division_shape(f, k);
  const Modulus& mod = f.modulus();
  const Field field = mod.field();
  const XPoly pivot_inv = relem_inverse(f.coeff(k), mod);

  std::vector<XPoly> rem(static_cast<std::size_t>(k) + 1, XPoly(field));
  rem.back() = XPoly::one(field);
  std::vector<XPoly> quo;

  // Every pass either pushes a term below k or multiplies it by a nilpotent
  // coefficient, so the loop ends once those products vanish mod T.
  constexpr long kMaxSteps = 1L << 20;
  for (long step = 0;; ++step) {
    if (step == kMaxSteps) fail(ErrorKind::Invariant, "Weierstrass division did not settle");
    int m = k;
    while (m < static_cast<int>(rem.size()) && rem[static_cast<std::size_t>(m)].is_zero()) ++m;
    if (m >= static_cast<int>(rem.size())) break;

    const XPoly c = relem_mul(rem[static_cast<std::size_t>(m)], pivot_inv, mod);
    const auto shift = static_cast<std::size_t>(m - k);
    if (quo.size() <= shift) quo.resize(shift + 1, XPoly(field));
    quo[shift] = mod.reduce(quo[shift] + c);
    if (rem.size() < shift + f.coeffs().size()) rem.resize(shift + f.coeffs().size(), XPoly(field));
    for (std::size_t j = 0; j < f.coeffs().size(); ++j) {
      auto& slot = rem[shift + j];
      slot = mod.reduce(slot - c * f.coeffs()[j]);
    }
  }
  rem.resize(static_cast<std::size_t>(k), XPoly(field));
  YPoly g = YPoly(mod, std::move(quo)).truncate(f.degree() - k + 1);
  return {std::move(g), YPoly(mod, std::move(rem))};
}

YPoly weierstrass_monic(const YPoly& f, int k) {
  const Modulus& mod = f.modulus();
  if (k == 0) {
    check_division_shape(f, 0);
    return YPoly::one(mod);
  }
  auto division = weierstrass_divide(f, k);
  return YPoly::y_power(mod, k) - division.r;
}

WeierstrassFactorization weierstrass_factor(const YPoly& f, int k) {
  const Modulus& mod = f.modulus();
  if (k == 0) {
    check_division_shape(f, 0);
    return {YPoly::one(mod), f};
  }
  auto division = weierstrass_divide(f, k);
  YPoly q = YPoly::y_power(mod, k) - division.r;
  YPoly u = series_inverse_trunc(division.g, f.degree() - k + 1);
  return {std::move(q), std::move(u)};
}

}  // namespace gcdchain
