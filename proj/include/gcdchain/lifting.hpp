// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "gcdchain/trace.hpp"
#include "gcdchain/ypoly.hpp"

namespace gcdchain {

/// alpha*G + beta*g == 1 over the carried modulus, with deg alpha < deg g
/// and deg beta < deg G.
struct BezoutPair {
  YPoly alpha;
  YPoly beta;
};

/// Bezout cofactors of two monic polynomials modulo Tp (their common
/// modulus). Extended Euclid runs directly over k[x]/<Tp>; when a pivot is a
/// zero divisor c, the pair is computed modulo gcd(c, Tp) and lifted back
/// to Tp. Throws NotCoprime when G and g share a factor modulo the radical.
BezoutPair bezout_mod(const YPoly& G, const YPoly& g);

struct HenselLift {
  YPoly G;  // G* == G mod Tp, monic
  YPoly h;  // h* == h mod Tp, monic
};

/// Quadratic Hensel lifting of gi == G*h mod Tp. The working modulus is
/// squared until the target divides it, then both factors are reduced to
/// the target. Tp and target are expected to be powers of the same
/// irreducible; gi is read through its representatives.
HenselLift hensel_lift(const YPoly& gi, const YPoly& G, const YPoly& h,
                       const BezoutPair& bezout, const Modulus& target,
                       Trace* trace = nullptr);

}  // namespace gcdchain
