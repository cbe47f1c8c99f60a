// SPDX-License-Identifier: Apache-2.0
#include "gcdchain/chain.hpp"

#include "gcdchain/error.hpp"
#include "gcdchain/lifting.hpp"
#include "gcdchain/nilpotent.hpp"
#include "gcdchain/subresultant.hpp"
#include "gcdchain/weierstrass.hpp"

namespace gcdchain {

namespace {

std::string list_string(const std::vector<YPoly>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + "]";
}

std::string list_string(const std::vector<XPoly>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + "]";
}

LargestFactorOutcome largest_factor_impl(const YPoly& f, const YPoly& a, Trace* trace,
                                         ChainStats& stats) {
  const Modulus& t = f.modulus();
  if (a.modulus() != t) fail(ErrorKind::ModulusMismatch, "largest_factor");
  if (!f.is_monic()) fail(ErrorKind::NonMonic, "largest_factor: f = " + f.to_string());
  if (!a.is_zero() && !a.is_monic()) {
    fail(ErrorKind::NonMonic, "largest_factor: A = " + a.to_string());
  }
  ++stats.largest_factor_calls;

  trace_line(trace, "largestFactor(" + f.to_string() + ", " + a.to_string() + ", " +
                        t.poly().to_string() + ") ==");
  Trace::Scope scope(trace);
  if (a.is_zero()) {
    trace_line(trace, "A = 0: return f, T, end");
    return {f, t.poly(), std::nullopt, std::nullopt};
  }
  if (a.degree() == 0) {
    trace_line(trace, "deg(A) = 0: return A, T, end");
    return {a, t.poly(), std::nullopt, std::nullopt};
  }

  SubresOutcome sr = subres_modified(f, a, trace);
  stats.subres_restarts += sr.restarts;
  const YPoly& sj = sr.chain[static_cast<std::size_t>(sr.j)];
  YPoly g = weierstrass_monic(sj, sr.i);
  trace_line(trace, "WeierstrassMonic(S[" + std::to_string(sr.j + 1) + "], " +
                        t.poly().to_string() + ", " + std::to_string(sr.i) + ") == " +
                        g.to_string());

  if (!sr.p || *sr.p == t.poly()) {
    trace_line(trace, "p^e1 = T: return g, T, end");
    return {std::move(g), t.poly(), std::nullopt, std::nullopt};
  }
  const XPoly& p = *sr.p;
  YPoly s = ypoly_exact_div_xpoly(sr.chain[static_cast<std::size_t>(sr.j + 1)], p);
  trace_line(trace, "S = S[" + std::to_string(sr.j + 2) + "]/" + p.to_string() + " = " +
                        s.to_string());
  const XPoly remaining = s.modulus().poly();
  auto nf = nilpotent_factor(s);
  trace_line(trace, "p^l = T/" + p.to_string() + " = " + remaining.to_string() +
                        ", nilpotentFactor(S, " + remaining.to_string() + ") == " +
                        nf.power.to_string() + ", " + std::to_string(nf.index));
  if (nf.index < 0) fail(ErrorKind::Invariant, "S/p^e1 is still nilpotent");
  YPoly next = weierstrass_monic(s, nf.index);
  trace_line(trace, "B = " + next.to_string());
  trace_line(trace, "return " + g.to_string() + ", " + p.to_string() + ", " +
                        next.to_string() + ", " + remaining.to_string());
  return {std::move(g), p, std::move(next), remaining};
}

}  // namespace

std::vector<ChainBlock> GcdChain::blocks() const {
  std::vector<ChainBlock> out;
  for (std::size_t i = 0; i < C.size(); ++i) {
    out.push_back({i + 1 < C.size() ? D[i] : C[i], tree[i]});
  }
  return out;
}

LargestFactorOutcome largest_factor(const YPoly& f, const YPoly& a, Trace* trace) {
  ChainStats stats;
  return largest_factor_impl(f, a, trace, stats);
}

GcdChain gcd_chain(const YPoly& a, const YPoly& b, Trace* trace) {
  const Modulus& t = a.modulus();
  if (b.modulus() != t) fail(ErrorKind::ModulusMismatch, "gcd_chain inputs");
  if (!a.is_monic()) fail(ErrorKind::NonMonic, "a = " + a.to_string());
  if (!b.is_zero() && !b.is_monic()) fail(ErrorKind::NonMonic, "b = " + b.to_string());
  if (a.degree() < b.degree()) fail(ErrorKind::Precondition, "gcd_chain needs deg a >= deg b");

  GcdChain out;
  trace_line(trace, "gcdChain(" + a.to_string() + ", " + b.to_string() + ", " +
                        t.poly().to_string() + ") ==");
  Trace::Scope scope(trace);

  // g_full is g_i known modulo T; next/remaining are B_i and S_i.
  YPoly g_full = a;
  std::optional<YPoly> next = b;
  XPoly remaining = t.poly();
  XPoly precision_so_far = XPoly::one(t.field());  // T_i

  for (int i = 0; next && !next->is_one(); ++i) {
    trace_line(trace, "iteration " + std::to_string(i) + ":");
    Trace::Scope iteration(trace);
    const Modulus work(remaining);
    const YPoly f = g_full.with_modulus(work);
    LargestFactorOutcome lf = largest_factor_impl(f, *next, trace, out.stats);
    const XPoly& tp_poly = lf.precision;

    if (i == 0) {
      precision_so_far = tp_poly;
      g_full = lf.g;
    } else if (lf.g.is_one()) {
      // g_{i+1} = 1 adds an empty block; the chain already ends at g_i.
      trace_line(trace, "g_" + std::to_string(i + 1) + " = 1: chain ends");
      break;
    } else {
      const Modulus tp(tp_poly);
      const YPoly gi_tp = g_full.reduce_to(tp);
      const YPoly gnext_tp = lf.g.reduce_to(tp);
      auto [quotient, rem] = ypoly_divrem_monic(gi_tp, gnext_tp);
      if (!rem.is_zero()) {
        fail(ErrorKind::Invariant, "g_{i+1} does not divide g_i modulo " + tp_poly.to_string());
      }
      trace_line(trace, "G_" + std::to_string(i) + " = g_" + std::to_string(i) + "/g_" +
                            std::to_string(i + 1) + " = " + quotient.to_string() + " mod " +
                            tp_poly.to_string());
      BezoutPair bez = bezout_mod(quotient, gnext_tp);
      trace_line(trace, "alpha = " + bez.alpha.to_string() + ", beta = " + bez.beta.to_string());
      const XPoly next_precision = precision_so_far * tp_poly;
      trace_line(trace, "T_" + std::to_string(i + 1) + " = " + next_precision.to_string() +
                            ", precision = " + std::to_string(next_precision.degree()));
      HenselLift lifted = hensel_lift(g_full, quotient, gnext_tp, bez, t, trace);
      ++out.stats.hensel_lifts;
      out.D.push_back(lifted.G.reduce_to(Modulus(precision_so_far)));
      precision_so_far = next_precision;
      g_full = std::move(lifted.h);
    }
    const Modulus block(precision_so_far);
    out.C.push_back(g_full.reduce_to(block));
    out.tree.push_back(precision_so_far);
    trace_line(trace, "g_" + std::to_string(i + 1) + " = " + out.C.back().to_string() +
                          " mod " + precision_so_far.to_string());
    trace_line(trace, "C = " + list_string(out.C) + ", D = " + list_string(out.D) +
                          ", Tree = " + list_string(out.tree));
    next = std::move(lf.next);
    if (lf.remaining) remaining = *lf.remaining;
  }
  trace_line(trace, "return C = " + list_string(out.C) + ", D = " + list_string(out.D) +
                        ", Tree = " + list_string(out.tree));
  return out;
}

}  // namespace gcdchain
