// SPDX-License-Identifier: Apache-2.0
#include "gcdchain/plant.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "gcdchain/error.hpp"
#include "gcdchain/verify.hpp"

namespace gcdchain {

namespace {

constexpr int kMaxAttempts = 10000;
constexpr int kPieceAttempts = 200;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  long between(long lo, long hi) {
    return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Scalar scalar(const Field& f) {
    if (f.is_rational()) return Scalar(f, between(-3, 3));
    return Scalar(f, static_cast<long>(eng_() % f.prime));
  }

 private:
  std::mt19937_64 eng_;
};

XPoly random_xpoly(Rng& rng, const Field& f, int terms) {
  std::vector<Scalar> c;
  for (int i = 0; i < terms; ++i) c.push_back(rng.scalar(f));
  return XPoly(f, std::move(c));
}

bool has_root_mod(const XPoly& p) {
  const std::uint64_t q = p.field().prime;
  for (std::uint64_t v = 0; v < q; ++v) {
    Scalar acc(p.field());
    const Scalar x(p.field(), static_cast<long>(v));
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(i);
    if (acc.is_zero()) return true;
  }
  return false;
}

XPoly random_irreducible(Rng& rng, const Field& f, int deg) {
  if (f.is_rational()) {
    // x + c, or x^2 + c with c > 0.
    if (deg == 1) return XPoly(f, {rng.between(-3, 3), 1});
    return XPoly(f, {rng.between(1, 5), 0, 1});
  }
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    XPoly p = random_xpoly(rng, f, deg) + XPoly::x_power(f, deg);
    if (deg == 1 || !has_root_mod(p)) return p;
  }
  fail(ErrorKind::Invariant, "no irreducible polynomial found");
}

YPoly random_monic(Rng& rng, const Modulus& t, int deg) {
  std::vector<XPoly> c;
  for (int j = 0; j < deg; ++j) c.push_back(random_xpoly(rng, t.field(), t.degree()));
  c.push_back(XPoly::one(t.field()));
  return YPoly(t, std::move(c));
}

YPoly random_below(Rng& rng, const Modulus& t, int deg) {
  std::vector<XPoly> c;
  for (int j = 0; j < deg; ++j) c.push_back(random_xpoly(rng, t.field(), t.degree()));
  return YPoly(t, std::move(c));
}

bool coprime_mod(const YPoly& u, const YPoly& v, const XPoly& p) {
  if (u.degree() == 0 && !u.reduce_to(Modulus(p)).is_zero()) return true;
  const YPoly g = gcd_mod_prime(u, v, p);
  return !g.is_zero() && g.degree() == 0;
}

/// Random monic piece of degree deg coprime modulo p to every earlier piece.
std::optional<YPoly> fresh_piece(Rng& rng, const Modulus& t, const XPoly& p, int deg,
                                 const std::vector<YPoly>& earlier) {
  if (deg == 0) return YPoly::one(t);
  for (int attempt = 0; attempt < kPieceAttempts; ++attempt) {
    YPoly cand = random_monic(rng, t, deg);
    bool ok = true;
    for (const auto& other : earlier) ok = ok && coprime_mod(cand, other, p);
    if (ok) return cand;
  }
  return std::nullopt;
}

/// Blocks followed by the two private cofactors, pairwise coprime modulo p.
/// Greedy draws can paint themselves into a corner, so whole sets are redrawn.
std::vector<YPoly> draw_pieces(Rng& rng, const Modulus& t, const XPoly& p,
                               const PlantShape& shape) {
  std::vector<int> degrees = shape.block_degrees;
  degrees.push_back(shape.extra_a);
  degrees.push_back(shape.extra_b);
  for (int round = 0; round < kPieceAttempts; ++round) {
    std::vector<YPoly> pieces, nontrivial;
    for (int d : degrees) {
      auto piece = fresh_piece(rng, t, p, d, nontrivial);
      if (!piece) break;
      if (d > 0) nontrivial.push_back(*piece);
      pieces.push_back(std::move(*piece));
    }
    if (pieces.size() == degrees.size()) return pieces;
  }
  fail(ErrorKind::Invariant, "could not draw pairwise coprime factors; shape too crowded");
}

}  // namespace

std::string PlantShape::describe() const {
  std::string out = field.name() + ", deg p = " + std::to_string(deg_p) + ", e = " +
                    std::to_string(e) + ", blocks [";
  for (std::size_t i = 0; i < precisions.size(); ++i) {
    out += (i ? ", " : "") + std::to_string(block_degrees[i]) + "@" + std::to_string(precisions[i]);
  }
  return out + "], extra " + std::to_string(extra_a) + "/" + std::to_string(extra_b);
}

void validate_shape(const PlantShape& shape) {
  auto bad = [](const std::string& why) { fail(ErrorKind::Precondition, "plant shape: " + why); };
  if (shape.deg_p < 1 || shape.deg_p > 3) bad("deg p must be in [1, 3]");
  if (shape.field.is_rational() && shape.deg_p > 2) bad("deg p over the rationals must be <= 2");
  if (shape.e < 1) bad("e must be positive");
  if (shape.precisions.size() != shape.block_degrees.size()) bad("precisions and degrees differ in length");
  for (std::size_t i = 0; i < shape.precisions.size(); ++i) {
    if (shape.precisions[i] < 1 || shape.precisions[i] > shape.e) bad("precision outside [1, e]");
    if (i > 0 && shape.precisions[i] <= shape.precisions[i - 1]) bad("precisions must increase");
    if (shape.block_degrees[i] < 1) bad("block degrees must be positive");
  }
  if (shape.extra_a < 0 || shape.extra_b < 0) bad("negative cofactor degree");
}

PlantedInstance plant_instance(std::uint64_t seed, const PlantShape& shape) {
  validate_shape(shape);
  Rng rng(seed);
  const Field f = shape.field;
  const XPoly p = random_irreducible(rng, f, shape.deg_p);
  const Modulus t(p.pow(static_cast<unsigned>(shape.e)));

  std::vector<YPoly> blocks = draw_pieces(rng, t, p, shape);
  const YPoly extra_b = blocks.back();
  blocks.pop_back();
  const YPoly extra_a = blocks.back();
  blocks.pop_back();

  // Block i enters a and b as G + p^k u_a and G + p^k u_b with u_a - u_b a
  // unit modulo <G, p>; the two then agree exactly to precision k.
  YPoly a = extra_a, b = extra_b;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const YPoly& g = blocks[i];
    const XPoly pk = p.pow(static_cast<unsigned>(shape.precisions[i]));
    YPoly ua(t), ub(t);
    for (int attempt = 0;; ++attempt) {
      if (attempt == kMaxAttempts) fail(ErrorKind::Invariant, "no unit perturbation found");
      ua = random_below(rng, t, g.degree());
      ub = random_below(rng, t, g.degree());
      if (coprime_mod(ua - ub, g, p)) break;
    }
    a *= g + ua * pk;
    b *= g + ub * pk;
  }

  PlantedInstance out{a, b, p, {}, {}};
  if (a.degree() < b.degree()) std::swap(out.a, out.b);
  if (blocks.empty()) {
    out.tree.push_back(t.poly());
    out.C.push_back(YPoly::one(t));
    return out;
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Modulus m(p.pow(static_cast<unsigned>(shape.precisions[i])));
    YPoly prod = YPoly::one(t);
    for (std::size_t j = i; j < blocks.size(); ++j) prod *= blocks[j];
    out.tree.push_back(m.poly());
    out.C.push_back(prod.reduce_to(m));
  }
  return out;
}

namespace {

/// Pairwise coprime linear pieces need distinct roots in k[x]/<p>.
bool roomy(const PlantShape& s) {
  std::uint64_t residues = 1;
  for (int k = 0; k < s.deg_p; ++k) residues *= s.field.prime;
  std::uint64_t linear = 0;
  for (int d : s.block_degrees) linear += d == 1 ? 1 : 0;
  linear += s.extra_a == 1 ? 1 : 0;
  linear += s.extra_b == 1 ? 1 : 0;
  return linear < residues;
}

PlantShape draw_shape(Rng& rng, const PlantLimits& limits) {
  PlantShape s;
  s.field = Field::prime_field(
      limits.primes[static_cast<std::size_t>(rng.between(0, static_cast<long>(limits.primes.size()) - 1))]);
  s.deg_p = static_cast<int>(rng.between(1, limits.max_deg_p));
  s.e = static_cast<int>(rng.between(1, limits.max_e));
  const int max_blocks = std::min(s.e, limits.max_deg_y);
  const int nblocks = static_cast<int>(rng.between(1, max_blocks));
  std::vector<int> levels;
  for (int k = 1; k <= s.e; ++k) levels.push_back(k);
  // Choose nblocks distinct precisions by partial shuffle, then sort.
  for (int k = 0; k < nblocks; ++k) {
    std::swap(levels[static_cast<std::size_t>(k)],
              levels[static_cast<std::size_t>(rng.between(k, s.e - 1))]);
  }
  s.precisions.assign(levels.begin(), levels.begin() + nblocks);
  std::sort(s.precisions.begin(), s.precisions.end());
  int budget = limits.max_deg_y - nblocks;
  for (int k = 0; k < nblocks; ++k) {
    const int extra = static_cast<int>(rng.between(0, budget / 2));
    s.block_degrees.push_back(1 + extra);
    budget -= extra;
  }
  s.extra_a = static_cast<int>(rng.between(0, budget));
  s.extra_b = static_cast<int>(rng.between(0, s.extra_a));
  return s;
}

}  // namespace

PlantShape random_shape(std::uint64_t seed, const PlantLimits& limits) {
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    PlantShape s = draw_shape(rng, limits);
    if (roomy(s)) return s;
  }
  fail(ErrorKind::Precondition, "limits admit no feasible shape");
}

}  // namespace gcdchain
