// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "gcdchain/nilpotent.hpp"
#include "support.hpp"

using namespace gcdchain;
using testsupport::xp;
using testsupport::yp;

TEST_CASE("nilpotent_factor on hand-picked inputs") {
  const Modulus t(xp("x^4"));
  SUBCASE("invertible top coefficient") {
    const auto nf = nilpotent_factor(yp("y^2 + x", t));
    CHECK(nf.index == 2);
    CHECK(nf.power.is_one());
  }
  SUBCASE("invertible coefficient below nilpotent ones") {
    const auto nf = nilpotent_factor(yp("x^2*y^3 + x*y^2 + (1 + x)*y + x^3", t));
    CHECK(nf.index == 1);
    CHECK(nf.power.is_one());
  }
  SUBCASE("nilpotent polynomial") {
    const auto nf = nilpotent_factor(yp("x^3*y^2 + x^2*y", t));
    CHECK(nf.index == -1);
    CHECK(nf.power == xp("x^2"));
  }
  SUBCASE("zero") {
    const auto nf = nilpotent_factor(YPoly(t));
    CHECK(nf.index == -1);
    CHECK(nf.power == t.poly());
  }
}

TEST_CASE("nilpotent_factor with a non-linear irreducible over GF(5)") {
  const Field f = Field::prime_field(5);
  const Modulus t(xp("(x^2 + 2)^3", f));
  const auto nf = nilpotent_factor(yp("(x^2 + 2)^2*y + (x^2 + 2)*(x + 1)", t));
  CHECK(nf.index == -1);
  CHECK(nf.power == xp("x^2 + 2", f));
}

namespace {

YPoly random_reduced(std::mt19937_64& rng, const Modulus& t, const XPoly& p, int dy) {
  const Field f = t.field();
  std::vector<XPoly> c;
  for (int j = 0; j <= dy; ++j) {
    std::vector<Scalar> s;
    const long span = f.is_rational() ? 7 : static_cast<long>(f.prime);
    for (int i = 0; i < t.degree(); ++i) s.emplace_back(f, static_cast<long>(rng() % span) - (f.is_rational() ? 3 : 0));
    XPoly coeff(f, std::move(s));
    // Bias towards nilpotent coefficients so both outcomes are common.
    if (rng() % 3 != 0) coeff = t.reduce(coeff * p);
    c.push_back(std::move(coeff));
  }
  return YPoly(t, std::move(c));
}

void check_dichotomy(const Modulus& t, const XPoly& p, std::uint64_t seed, int rounds) {
  std::mt19937_64 rng(seed);
  for (int k = 0; k < rounds; ++k) {
    const YPoly f = random_reduced(rng, t, p, static_cast<int>(rng() % 5));
    const auto nf = nilpotent_factor(f);
    CHECK((nf.power.degree() > 0) == (nf.index == -1));
    CHECK((nf.index == -1) == f.pow(static_cast<unsigned>(t.degree())).is_zero());
    if (nf.index >= 0) {
      CHECK(relem_is_invertible(f.coeff(nf.index), t));
      for (int j = nf.index + 1; j <= f.degree(); ++j) CHECK_FALSE(relem_is_invertible(f.coeff(j), t));
    } else {
      CHECK(xpoly_divides(nf.power, t.poly()));
      for (const auto& c : f.coeffs()) CHECK(xpoly_divides(nf.power, c));
    }
  }
}

}  // namespace

TEST_CASE("dichotomy holds on random polynomials") {
  check_dichotomy(Modulus(xp("x^5")), xp("x"), 1, 400);
  check_dichotomy(Modulus(xp("(x^2 + 1)^3")), xp("x^2 + 1"), 2, 400);
  const Field f = Field::prime_field(3);
  check_dichotomy(Modulus(xp("(x^2 + 1)^4", f)), xp("x^2 + 1", f), 3, 400);
  const Field g = Field::prime_field(101);
  check_dichotomy(Modulus(xp("(x + 7)^2", g)), xp("x + 7", g), 4, 400);
}
