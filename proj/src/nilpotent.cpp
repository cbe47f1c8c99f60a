// SPDX-License-Identifier: Apache-2.0
#include "gcdchain/nilpotent.hpp"

namespace gcdchain {

NilpotentFactor nilpotent_factor(const YPoly& f) {
  XPoly p = f.modulus().poly();
  int i = f.degree();
  while (i > -1 && p.degree() > 0) {
    p = xpoly_gcd(f.coeff(i), p);
    --i;
  }
  // The loop decremented past the coefficient that made the gcd trivial.
  if (p.degree() == 0) return {std::move(p), i + 1};
  return {std::move(p), -1};
}

}  // namespace gcdchain
