// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "gcdchain/chain.hpp"

namespace gcdchain {

/// T / gcd(T, T'). For a primary modulus this is the irreducible p.
XPoly squarefree_part(const XPoly& t);

/// Irreducibility of a monic p. Exact over prime fields (Rabin's test) and
/// over the rationals up to degree 3; for higher degrees over the rationals
/// only linear factors are ruled out.
bool xpoly_is_irreducible(const XPoly& p);

/// Largest l with p^l | r, capped at the multiplicity of p in T. r is read
/// as a residue modulo T; the zero residue has the full multiplicity.
int xpoly_valuation(const XPoly& r, const XPoly& p, const Modulus& t);

/// Largest l <= e such that c divides a and b modulo p^l. 0 means c is not
/// a common factor even modulo p.
int common_factor_precision(const YPoly& c, const YPoly& a, const YPoly& b);

/// dim_k k[x,y]/<T, a, b> by row reduction over k. a must be monic.
long quotient_dimension(const YPoly& a, const YPoly& b);

/// Monic gcd over the residue field k[x]/<p>; p must be irreducible.
YPoly gcd_mod_prime(const YPoly& a, const YPoly& b, const XPoly& p);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ChainReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  const CheckResult* find(const std::string& name) const;
  std::string to_string() const;
};

/// Checks a candidate chain of (a, b) against the gcd chain axioms and the
/// dimension counts of the block decompositions. Never throws on a bad
/// chain; malformed input is reported through the "structure" check.
ChainReport verify_chain(const GcdChain& chain, const YPoly& a, const YPoly& b);

}  // namespace gcdchain
