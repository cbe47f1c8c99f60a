// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "gcdchain/trace.hpp"
#include "gcdchain/ypoly.hpp"

namespace gcdchain {

/// Result of one largest-common-factor step over modulus T.
///
/// <g, precision> = <f, A, precision>. When next is present it is monic,
/// deg g >= deg next, and precision * remaining == T. An empty next is the
/// terminal "end" outcome.
struct LargestFactorOutcome {
  YPoly g;
  XPoly precision;
  std::optional<YPoly> next;
  std::optional<XPoly> remaining;

  bool is_end() const noexcept { return !next.has_value(); }
};

/// f monic; A monic or zero; deg f >= deg A; both over the same modulus.
LargestFactorOutcome largest_factor(const YPoly& f, const YPoly& a, Trace* trace = nullptr);

struct ChainStats {
  int largest_factor_calls = 0;
  int hensel_lifts = 0;
  int subres_restarts = 0;
};

struct ChainBlock {
  YPoly G;       // G_i, or g_s for the last block
  XPoly modulus; // p^{e_i}
};

/// C = [g_1..g_s], D = [G_1..G_{s-1}], tree = [p^{e_1}..p^{e_s}]. Each C[i]
/// and D[i] is reduced modulo tree[i].
struct GcdChain {
  std::vector<YPoly> C;
  std::vector<YPoly> D;
  std::vector<XPoly> tree;
  ChainStats stats;

  std::size_t size() const noexcept { return C.size(); }
  std::vector<ChainBlock> blocks() const;
};

/// gcd chain of monic a, b over R = k[x]/<T> with deg a >= deg b. b may be
/// zero. Hensel lifting runs to the full modulus T so that later levels are
/// lifted from fully determined factors.
GcdChain gcd_chain(const YPoly& a, const YPoly& b, Trace* trace = nullptr);

}  // namespace gcdchain
