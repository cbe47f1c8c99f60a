// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "gcdchain/ypoly.hpp"

namespace gcdchain {

/// f = u * q mod T, q monic of degree k, u0 invertible and u_i nilpotent for
/// i >= 1.
struct WeierstrassFactorization {
  YPoly q;
  YPoly u;
};

/// Power-series inverse of u modulo y^m. Requires u(0) invertible mod T.
YPoly series_inverse_trunc(const YPoly& u, int m);

struct WeierstrassDivision {
  YPoly g;  // series quotient, truncated mod y^(deg f - k + 1)
  YPoly r;  // deg r < k
};

/// Division of y^k by f, eliminating from the lowest degree >= k with the
/// invertible coefficient f_k as pivot: y^k = g*f + r. Requires f_k
/// invertible and every coefficient above k nilpotent.
WeierstrassDivision weierstrass_divide(const YPoly& f, int k);

/// The monic factor h = y^k - r of f, so that <f, T> = <h, T>. k = 0 gives 1.
YPoly weierstrass_monic(const YPoly& f, int k);

/// Both factors; u is the truncated inverse of the division quotient.
WeierstrassFactorization weierstrass_factor(const YPoly& f, int k);

}  // namespace gcdchain
