// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "gcdchain/trace.hpp"
#include "gcdchain/ypoly.hpp"

namespace gcdchain {

/// lc(B)^(deg A - deg B + 1) * A mod B, computed with exactly that many
/// elimination steps so it is defined even when lc(B) is a zero divisor.
YPoly prem(const YPoly& a, const YPoly& b);

/// Complete sequence [a, b, S_2, ..., 0].
struct PrsChain {
  std::vector<YPoly> chain;
};

/// The next element needed division by a non-invertible leading coefficient
/// of prefix[t]. prefix ends with S_{t+1}, the last element computed.
struct PrsFailure {
  int t;
  std::vector<YPoly> prefix;
};

using PrsOutcome = std::variant<PrsChain, PrsFailure>;

/// Subresultant pseudo-remainder sequence over R = k[x]/<T> with the
/// classical beta/psi normalisation:
///   S_{i+1} = prem(S_{i-1}, S_i) / beta_i,
///   beta_1 = (-1)^(delta_1 + 1), psi_1 = -1,
///   psi_i  = (-lc S_{i-1})^delta_{i-1} * psi_{i-1}^(1 - delta_{i-1}),
///   beta_i = -lc(S_{i-1}) * psi_i^delta_i.
/// a and b must be monic with deg a >= deg b.
PrsOutcome subres_prs_mod(const YPoly& a, const YPoly& b);

struct SubresOutcome {
  std::vector<YPoly> chain;  // sequence the indices refer to
  int j;                     // chain[j] not nilpotent, chain[j+1] nilpotent or zero
  int i;                     // largest degree of an invertible coefficient of chain[j]
  std::optional<XPoly> p;    // largest p^l dividing chain[j+1]; empty when it is zero
  int restarts = 0;          // Weierstrass renormalisations performed
};

/// Modified sequence: on failure, both last computed elements are replaced by
/// their Weierstrass monic factors and the sequence restarts; afterwards the
/// chain is scanned bottom-up for the last non-nilpotent element. The larger
/// degree input seeds the sequence.
SubresOutcome subres_modified(const YPoly& a, const YPoly& b, Trace* trace = nullptr);

}  // namespace gcdchain
