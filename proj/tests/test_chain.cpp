// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "gcdchain/chain.hpp"
#include "support.hpp"

using namespace gcdchain;
using testsupport::xp;
using testsupport::yp;

TEST_CASE("golden chain over Q modulo x^3") {
  const Modulus t(xp("x^3"));
  const YPoly a = yp("((y+1)^2 + x*(2*y+1) + x^2*(y+1))*(y+2*x+3*x^2)*(y-1-x-2*x^2)", t);
  const YPoly b = yp("(y+1+2*x+x^2)*(y+2*x+4*x^2)*(y-1-x-2*x^2)", t);
  const GcdChain chain = gcd_chain(a, b);
  REQUIRE(chain.size() == 3);
  CHECK(chain.tree == std::vector<XPoly>{xp("x"), xp("x^2"), xp("x^3")});
  CHECK(chain.C[0] == yp("(y-1)*y*(y+1)", Modulus(xp("x"))));
  CHECK(chain.C[1] == yp("(y-1-x)*(y+2*x)", Modulus(xp("x^2"))));
  CHECK(chain.C[2] == yp("y-1-x-2*x^2", t));
  const auto blocks = chain.blocks();
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0].G == yp("y + 1", Modulus(xp("x"))));
  CHECK(blocks[1].G == yp("y+2*x", Modulus(xp("x^2"))));
  CHECK(blocks[2].G == chain.C[2]);
}

TEST_CASE("golden chain modulo x^7") {
  const Modulus t(xp("x^7"));
  const YPoly a = yp("(y+x+x^2+x^3+x^4+x^5+x^6)*(y+1+x^3+x^6)", t);
  const YPoly b = yp("(y+x+x^2+2*x^3+x^4+x^5+x^6)*(y+1+x^3+x^5)", t);
  Trace trace;
  const GcdChain chain = gcd_chain(a, b, &trace);
  REQUIRE(chain.size() == 2);
  CHECK(chain.tree == std::vector<XPoly>{xp("x^3"), xp("x^5")});
  CHECK(chain.C[0] == yp("y^2 + (x^2 + x + 1)*y + x^2 + x", Modulus(xp("x^3"))));
  CHECK(chain.C[1] == yp("y + x^3 + 1", Modulus(xp("x^5"))));
  REQUIRE(chain.D.size() == 1);
  CHECK(chain.D[0] == yp("y + x^2 + x", Modulus(xp("x^3"))));
  CHECK(chain.stats.hensel_lifts == 1);

  const std::string text = trace.text();
  CHECK(text.find("G* = y + 2*x^3 + x^2 + x, g* = y + x^3 + 1") != std::string::npos);
  CHECK(text.find("G* = y - 2*x^7 + x^6 + x^5 + x^4 + 2*x^3 + x^2 + x, g* = y + 2*x^7 + x^5 + x^3 + 1") !=
        std::string::npos);
}

TEST_CASE("equal inputs give a single full-precision block") {
  const Field f = Field::prime_field(5);
  const Modulus t(xp("(x^2 + 2)^3", f));
  const YPoly a = yp("(y^2 + x*y + 1)*(y + 3)", t);
  const GcdChain chain = gcd_chain(a, a);
  REQUIRE(chain.size() == 1);
  CHECK(chain.tree[0] == t.poly());
  CHECK(chain.C[0] == a);
  CHECK(chain.D.empty());
}

TEST_CASE("coprime inputs give the trivial chain") {
  const Modulus t(xp("x^4"));
  const GcdChain chain = gcd_chain(yp("y^2 + 1", t), yp("y + x", t));
  REQUIRE(chain.size() == 1);
  CHECK(chain.C[0].is_one());
  CHECK(chain.tree[0] == t.poly());
}

TEST_CASE("equal-degree inputs are taken in either order") {
  const Modulus t(xp("x^3"));
  const YPoly a = yp("(y + x)*(y + 1)", t);
  const YPoly b = yp("(y + x + x^2)*(y + 2)", t);
  const GcdChain ab = gcd_chain(a, b);
  const GcdChain ba = gcd_chain(b, a);
  CHECK(ab.C == ba.C);
  CHECK(ab.tree == ba.tree);
}

TEST_CASE("largest_factor at the end of the recursion") {
  const Modulus t(xp("x^2"));
  const auto lf = largest_factor(yp("y^2 + x", t), YPoly(t));
  CHECK(lf.is_end());
  CHECK(lf.precision == t.poly());
}
