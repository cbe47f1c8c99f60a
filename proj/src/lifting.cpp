// SPDX-License-Identifier: Apache-2.0
#include "gcdchain/lifting.hpp"

#include <optional>

#include "gcdchain/error.hpp"

namespace gcdchain {

namespace {

/// Quotient-and-remainder by a polynomial whose leading coefficient is a
/// unit; q is scaled back so that a = q*b + r.
YDivRem divrem_unit_lc(const YPoly& a, const YPoly& b) {
  const XPoly inv = relem_inverse(b.lc(), b.modulus());
  auto [q, r] = ypoly_divrem_monic(a, b * inv);
  return {q * inv, r};
}

/// Bring (alpha, beta) to deg alpha < deg g by moving multiples of g*G.
BezoutPair normalize_pair(YPoly alpha, YPoly beta, const YPoly& G, const YPoly& g) {
  auto [q, r] = ypoly_divrem_monic(alpha, g);
  return {std::move(r), beta + q * G};
}

struct EuclidAttempt {
  std::optional<BezoutPair> pair;
  XPoly obstruction;  // non-invertible pivot when pair is empty
};

EuclidAttempt try_euclid(const YPoly& G, const YPoly& g) {
  const Modulus& m = G.modulus();
  YPoly r0 = G, r1 = g;
  YPoly s0 = YPoly::one(m), s1(m);
  YPoly t0(m), t1 = YPoly::one(m);
  while (!r1.is_zero()) {
    if (!relem_is_invertible(r1.lc(), m)) return {std::nullopt, r1.lc()};
    auto [q, r] = divrem_unit_lc(r0, r1);
    YPoly s2 = s0 - q * s1;
    YPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() > 0) {
    fail(ErrorKind::NotCoprime, G.to_string() + " and " + g.to_string() + " share " +
                                    r0.to_string());
  }
  if (!relem_is_invertible(r0.lc(), m)) return {std::nullopt, r0.lc()};
  const XPoly inv = relem_inverse(r0.lc(), m);
  return {normalize_pair(s0 * inv, t0 * inv, G, g), XPoly(m.field())};
}

}  // namespace

BezoutPair bezout_mod(const YPoly& G, const YPoly& g) {
  if (G.modulus() != g.modulus()) fail(ErrorKind::ModulusMismatch, "bezout_mod");
  if (!G.is_monic() || !g.is_monic()) fail(ErrorKind::NonMonic, "bezout_mod inputs");
  const Modulus& tp = G.modulus();

  EuclidAttempt attempt = try_euclid(G, g);
  if (attempt.pair) return *attempt.pair;

  // A zero-divisor pivot exposes a proper factor d of Tp. Solve modulo d,
  // then lift the identity: (1 + e)(1 - e) = 1 - e^2.
  const XPoly d = xpoly_gcd(attempt.obstruction, tp.poly());
  if (d.degree() == 0 || d.degree() >= tp.degree()) {
    fail(ErrorKind::Invariant, "Bezout fallback found no proper factor of the modulus");
  }
  Modulus current(d);
  BezoutPair pair = bezout_mod(G.reduce_to(current), g.reduce_to(current));
  while (current != tp) {
    const Modulus next(xpoly_gcd(current.poly() * current.poly(), tp.poly()));
    if (next == current) {
      fail(ErrorKind::NotCoprime, "Bezout identity cannot be lifted to " + tp.poly().to_string());
    }
    const YPoly Gn = G.reduce_to(next), gn = g.reduce_to(next);
    YPoly alpha = pair.alpha.with_modulus(next), beta = pair.beta.with_modulus(next);
    const YPoly one = YPoly::one(next);
    const YPoly err = alpha * Gn + beta * gn - one;
    const YPoly corr = one - err;
    pair = normalize_pair(alpha * corr, beta * corr, Gn, gn);
    current = next;
  }
  return pair;
}

HenselLift hensel_lift(const YPoly& gi, const YPoly& G, const YPoly& h,
                       const BezoutPair& bezout, const Modulus& target, Trace* trace) {
  const Modulus& tp = G.modulus();
  if (h.modulus() != tp || bezout.alpha.modulus() != tp || bezout.beta.modulus() != tp) {
    fail(ErrorKind::ModulusMismatch, "hensel_lift factors and cofactors must share Tp");
  }
  if (!G.is_monic() || !h.is_monic()) fail(ErrorKind::NonMonic, "hensel_lift factors");
  if (!(gi.with_modulus(tp) - G * h).is_zero()) {
    fail(ErrorKind::Precondition, "gi != G*h modulo " + tp.poly().to_string());
  }
  if (!xpoly_divides(tp.poly(), target.poly())) {
    fail(ErrorKind::Precondition, "Tp must divide the target modulus");
  }

  YPoly g_cur = G, h_cur = h, s = bezout.alpha, t = bezout.beta;
  Modulus m = tp;
  for (int step = 1; !xpoly_divides(target.poly(), m.poly()); ++step) {
    if (m.degree() > target.degree()) {
      fail(ErrorKind::Precondition, "target is not reached by squaring " + tp.poly().to_string());
    }
    const Modulus m2(m.poly() * m.poly());
    const YPoly f = gi.with_modulus(m2);
    YPoly g2 = g_cur.with_modulus(m2), h2 = h_cur.with_modulus(m2);
    YPoly s2 = s.with_modulus(m2), t2 = t.with_modulus(m2);

    const YPoly e = f - g2 * h2;
    auto [q, r] = ypoly_divrem_monic(s2 * e, h2);
    YPoly g_new = g2 + t2 * e + q * g2;
    YPoly h_new = h2 + r;
    const YPoly b = s2 * g_new + t2 * h_new - YPoly::one(m2);
    auto [c, d] = ypoly_divrem_monic(s2 * b, h_new);
    s = s2 - d;
    t = t2 - t2 * b - c * g_new;
    g_cur = std::move(g_new);
    h_cur = std::move(h_new);
    m = m2;
    trace_line(trace, "Step " + std::to_string(step) + ": lift to " + m.poly().to_string() +
                          ": G* = " + g_cur.to_string() + ", g* = " + h_cur.to_string());
  }

  HenselLift out{g_cur.reduce_to(target), h_cur.reduce_to(target)};
  if (!out.G.is_monic() || !out.h.is_monic() ||
      !(gi.with_modulus(target) - out.G * out.h).is_zero() || out.G.reduce_to(tp) != G ||
      out.h.reduce_to(tp) != h) {
    fail(ErrorKind::Invariant, "Hensel lifting contract violated");
  }
  return out;
}

}  // namespace gcdchain
