// SPDX-License-Identifier: Apache-2.0
#include "gcdchain/subresultant.hpp"

#include "gcdchain/error.hpp"
#include "gcdchain/nilpotent.hpp"
#include "gcdchain/weierstrass.hpp"

namespace gcdchain {

namespace {

XPoly relem_pow(const XPoly& base, int n, const Modulus& m) {
  XPoly acc = XPoly::one(m.field());
  for (int k = 0; k < n; ++k) acc = relem_mul(acc, base, m);
  return acc;
}

void trace_chain(Trace* trace, const std::vector<YPoly>& chain) {
  if (!trace) return;
  trace->line("S = [");
  for (std::size_t n = 0; n < chain.size(); ++n) {
    trace->line("  " + chain[n].to_string() + (n + 1 < chain.size() ? "," : ""));
  }
  trace->line("]");
}

SubresOutcome scan_bottom_up(std::vector<YPoly> chain, int start, Trace* trace) {
  for (int m = start; m >= 0; --m) {
    auto nf = nilpotent_factor(chain[static_cast<std::size_t>(m)]);
    trace_line(trace, "nilpotentFactor(S[" + std::to_string(m + 1) + "]) == " +
                          nf.power.to_string() + ", " + std::to_string(nf.index));
    if (nf.index < 0) continue;
    std::optional<XPoly> p;
    const auto next = static_cast<std::size_t>(m + 1);
    if (next < chain.size() && !chain[next].is_zero()) p = nilpotent_factor(chain[next]).power;
    trace_line(trace, "return S, j = " + std::to_string(m + 1) + ", i = " +
                          std::to_string(nf.index) + ", P = " + (p ? p->to_string() : "none"));
    return {std::move(chain), m, nf.index, std::move(p)};
  }
  fail(ErrorKind::Invariant, "subresultant sequence has no non-nilpotent element");
}

SubresOutcome subres_modified_impl(const YPoly& a, const YPoly& b, int depth, int max_depth,
                                   Trace* trace) {
  if (depth > max_depth) fail(ErrorKind::Invariant, "subres renormalisation did not terminate");
  const bool swap = b.degree() > a.degree();
  const YPoly& first = swap ? b : a;
  const YPoly& second = swap ? a : b;
  trace_line(trace, "subres(" + first.to_string() + ", " + second.to_string() + ", " +
                        first.modulus().poly().to_string() + ") ==");
  Trace::Scope scope(trace);

  PrsOutcome outcome = subres_prs_mod(first, second);
  if (auto* ok = std::get_if<PrsChain>(&outcome)) {
    trace_line(trace, "subresultant sequence does not fail:");
    trace_chain(trace, ok->chain);
    const int start = static_cast<int>(ok->chain.size()) - 2;
    return scan_bottom_up(std::move(ok->chain), start, trace);
  }

  auto& failure = std::get<PrsFailure>(outcome);
  trace_line(trace, "subresultant sequence fails at S[" + std::to_string(failure.t + 2) +
                        "]: a leading coefficient is not invertible");
  trace_chain(trace, failure.prefix);
  const int j = failure.t + 1;
  const YPoly& last = failure.prefix[static_cast<std::size_t>(j)];
  auto nf = nilpotent_factor(last);
  if (nf.index > -1) {
    const YPoly& before = failure.prefix[static_cast<std::size_t>(j - 1)];
    const int i_before = nilpotent_factor(before).index;
    if (i_before < 0) {
      fail(ErrorKind::Invariant, "element preceding a non-nilpotent subresultant is nilpotent");
    }
    YPoly renorm_a = weierstrass_monic(last, nf.index);
    YPoly renorm_b = weierstrass_monic(before, i_before);
    trace_line(trace, "renormalise: A = " + renorm_a.to_string() + ", B = " +
                          renorm_b.to_string());
    SubresOutcome inner =
        subres_modified_impl(renorm_a, renorm_b, depth + 1, max_depth, trace);
    ++inner.restarts;
    return inner;
  }
  return scan_bottom_up(std::move(failure.prefix), j, trace);
}

}  // namespace

YPoly prem(const YPoly& a, const YPoly& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "prem by the zero polynomial");
  if (a.modulus() != b.modulus()) fail(ErrorKind::ModulusMismatch, "prem");
  const Modulus& m = b.modulus();
  if (a.degree() < b.degree()) return a;
  const XPoly lead = b.lc();
  std::vector<XPoly> r = a.coeffs();
  for (int pos = a.degree(); pos >= b.degree(); --pos) {
    const XPoly c = r[static_cast<std::size_t>(pos)];
    for (auto& slot : r) slot = relem_mul(slot, lead, m);
    const int shift = pos - b.degree();
    for (int k = 0; k <= b.degree(); ++k) {
      auto& slot = r[static_cast<std::size_t>(shift + k)];
      slot = m.reduce(slot - c * b.coeffs()[static_cast<std::size_t>(k)]);
    }
  }
  return YPoly(m, std::move(r));
}

PrsOutcome subres_prs_mod(const YPoly& a, const YPoly& b) {
  if (a.modulus() != b.modulus()) fail(ErrorKind::ModulusMismatch, "subres_prs_mod");
  if (!a.is_monic() || !b.is_monic()) {
    fail(ErrorKind::NonMonic, "subresultant inputs must be monic");
  }
  if (a.degree() < b.degree()) {
    fail(ErrorKind::Precondition, "subres_prs_mod requires deg a >= deg b");
  }
  const Modulus& m = a.modulus();
  const Field field = m.field();
  const XPoly minus_one = XPoly::constant(Scalar(field, -1));

  std::vector<YPoly> s{a, b};
  // psi and delta for the step that computes s[i + 1].
  XPoly psi = minus_one;
  int delta = a.degree() - b.degree();

  for (std::size_t i = 1;; ++i) {
    YPoly numerator = prem(s[i - 1], s[i]);
    if (numerator.is_zero()) {
      s.push_back(std::move(numerator));
      return PrsChain{std::move(s)};
    }
    XPoly beta(field);
    if (i == 1) {
      beta = (delta % 2 == 0) ? minus_one : XPoly::one(field);
    } else {
      const XPoly lead = s[i - 1].lc();
      if (!relem_is_invertible(lead, m)) {
        return PrsFailure{static_cast<int>(i) - 1, std::move(s)};
      }
      beta = m.reduce(-relem_mul(lead, relem_pow(psi, delta, m), m));
    }
    YPoly next = numerator * relem_inverse(beta, m);
    // Advance psi and delta to the step that computes s[i + 2].
    const XPoly lead = s[i].lc();
    const int prev_delta = delta;
    delta = s[i].degree() - next.degree();
    // A non-nilpotent element with a zero-divisor leading coefficient would
    // act as the next pseudo-divisor and lose part of the ideal; stop here
    // so the caller renormalises it together with its predecessor.
    const bool degenerate = !relem_is_invertible(next.lc(), m) && !ypoly_is_nilpotent(next);
    s.push_back(std::move(next));
    if (degenerate) return PrsFailure{static_cast<int>(i), std::move(s)};
    if (relem_is_invertible(lead, m)) {
      const XPoly neg_lead = m.reduce(-lead);
      if (prev_delta >= 1) {
        psi = relem_mul(relem_pow(neg_lead, prev_delta, m),
                        relem_pow(relem_inverse(psi, m), prev_delta - 1, m), m);
      }
    }
  }
}

SubresOutcome subres_modified(const YPoly& a, const YPoly& b, Trace* trace) {
  const int max_depth = a.degree() + b.degree() + 1;
  return subres_modified_impl(a, b, 0, max_depth, trace);
}

}  // namespace gcdchain
