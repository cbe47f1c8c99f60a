// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "gcdchain/ypoly.hpp"

namespace gcdchain {

struct NilpotentFactor {
  XPoly power;  // P = gcd(F_r, ..., F_i, T), the largest p^l dividing F
  int index;    // largest degree with an invertible coefficient, or -1
};

/// Scans the coefficients of F from the top, folding gcds with T, and stops
/// as soon as the running gcd becomes 1. Exactly one of deg(power) > 0 and
/// index >= 0 holds. F == 0 gives (T, -1).
NilpotentFactor nilpotent_factor(const YPoly& f);

}  // namespace gcdchain
