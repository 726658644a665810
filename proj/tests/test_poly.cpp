#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qtor/poly.hpp"

using namespace qtor;

static Poly hq(int e = 1) { return Poly::variable(0, e); }
static Poly hd(int e = 1) { return Poly::variable(1, e); }

TEST_CASE("basic arithmetic") {
  Poly a = hq(2) + Poly::integer(3);
  Poly b = hq(2) - Poly::integer(3);
  CHECK((a * b) == hq(4) - Poly::integer(9));
  CHECK((a - a).is_zero());
  CHECK(a.pow(2) == hq(4) + Poly::integer(6) * hq(2) + Poly::integer(9));
}

TEST_CASE("exact division") {
  Poly a = hq(2) - hd(2);
  Poly b = hq() + hd();
  Poly q = a.divexact(b);
  CHECK(q == hq() - hd());
  CHECK_THROWS(a.divexact(hq() + Poly::integer(1)));
}

TEST_CASE("gcd bivariate") {
  Poly g = hq() * hd() + Poly::integer(1);
  Poly a = g * (hq() + hd());
  Poly b = g * (hq() - hd());
  Poly gg = Poly::gcd(a, b);
  CHECK(gg == g);
  // gcd of coprime polynomials is 1
  CHECK(Poly::gcd(hq() + Poly::integer(1), hd() + Poly::integer(1)).is_one());
  // integer content interaction
  CHECK(Poly::gcd(Poly::integer(6) * hq(), Poly::integer(4) * hq()) ==
        Poly::integer(2) * hq());
}

TEST_CASE("eval mod") {
  // (hq+1)^2 == hq^2 + 2hq + 1 at random points
  Poly lhs = (hq() + Poly::integer(1)).pow(2);
  Poly rhs = hq(2) + Poly::integer(2) * hq() + Poly::integer(1);
  std::array<uint64_t, kNumVars> pt{12345, 678, 9};
  uint64_t p = 2305843009213693951ull;
  CHECK(lhs.eval_mod(pt, p) == rhs.eval_mod(pt, p));
}

TEST_CASE("string render") {
  Poly p = hq(2) - Poly::integer(2) * hd() + Poly::integer(1);
  CHECK(p.str() == "hq^2 - 2*hd + 1");
  CHECK(Poly().str() == "0");
}
