#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ecvet/curve.hpp"

using namespace ecvet;

namespace {

CurveParams toy511() {
  // y^2 = x^3 + x + 1 over F_5, order 9
  return CurveParams{PrimeModulus(Int(5), 3), Int(1), Int(1)};
}

}  // namespace

TEST_CASE("CurveParams reduces coefficients and rejects tiny fields") {
  CurveParams c{PrimeModulus(Int(7), 3), Int(8), Int(-1)};
  CHECK(c.a == 1);
  CHECK(c.b == 6);
  CHECK_THROWS_AS(CurveParams(PrimeModulus(Int(3), 2), Int(1), Int(1)),
                  std::invalid_argument);
}

TEST_CASE("discriminant") {
  CHECK(discriminant(toy511()) == (4 + 27) % 5);
  // 4a^3 + 27b^2 = 0 mod p: a = 3, b = 2 over F_5 gives 4*27+27*4 = 216 = 1;
  // use a = 0, b = 0 for the canonical singular case instead.
  CHECK(discriminant(CurveParams{PrimeModulus(Int(5), 3), Int(0), Int(0)}) == 0);
}

TEST_CASE("point construction") {
  Point inf = Point::infinity();
  CHECK(inf.is_infinity());
  Point P = Point::affine(Int(0), Int(1));
  CHECK_FALSE(P.is_infinity());
  CHECK(P.x == 0);
  CHECK(P.y == 1);
}

TEST_CASE("on_curve") {
  CurveParams c = toy511();
  CHECK(on_curve(c, Point::affine(Int(0), Int(1))));
  CHECK(on_curve(c, Point::affine(Int(4), Int(2))));
  CHECK_FALSE(on_curve(c, Point::affine(Int(1), Int(1))));
  CHECK(on_curve(c, Point::infinity()));  // the identity is a curve point
}

TEST_CASE("group law on the order-9 toy curve") {
  CurveParams c = toy511();
  Point G = Point::affine(Int(0), Int(1));

  Point two_g = add(c, G, G);
  CHECK(two_g.x == 4);
  CHECK(two_g.y == 2);

  // G + (-G) = O, O is the identity
  Point neg = negate(c, G);
  CHECK(neg.y == (5 - 1) % 5);
  CHECK(add(c, G, neg).is_infinity());
  CHECK(add(c, G, Point::infinity()) == G);
  CHECK(add(c, Point::infinity(), G) == G);

  // ord(G) = 9 on this curve
  CHECK(scalar_mul(c, Int(9), G).is_infinity());
  CHECK_FALSE(scalar_mul(c, Int(3), G).is_infinity());
  CHECK(scalar_mul(c, Int(0), G).is_infinity());
  CHECK(scalar_mul(c, Int(10), G) == G);
}

TEST_CASE("add rejects off-curve points, add_unchecked does not") {
  CurveParams c = toy511();
  Point bad = Point::affine(Int(1), Int(1));
  CHECK_THROWS_AS(add(c, bad, bad), std::invalid_argument);
  CHECK_NOTHROW(add_unchecked(c, Point::affine(Int(0), Int(1)),
                              Point::affine(Int(0), Int(1))));
}

namespace {

// First affine point with x >= x0, by scanning the curve equation.
Point scan_point(const CurveParams& c, Int x0) {
  for (Int x = x0; x < c.p.value; ++x) {
    Int rhs = (x * x * x + c.a * x + c.b) % c.p.value;
    for (Int y = 0; y < c.p.value; ++y) {
      if ((y * y) % c.p.value == rhs) return Point::affine(x, y);
    }
  }
  return Point::infinity();
}

}  // namespace

TEST_CASE("group law is commutative and associative on a larger field") {
  CurveParams c{PrimeModulus(Int(10007), 14), Int(3), Int(7)};
  std::mt19937_64 rng(42);
  for (int i = 0; i < 20; ++i) {
    Point P = scan_point(c, Int((unsigned long)(rng() % 10007)));
    if (P.is_infinity()) continue;
    Point Q = scalar_mul(c, Int(17), P);
    Point R = scalar_mul(c, Int(99), P);
    CHECK(add(c, P, Q) == add(c, Q, P));
    CHECK(add(c, add(c, P, Q), R) == add(c, P, add(c, Q, R)));
  }
}

TEST_CASE("scalar_mul distributes over known multiples") {
  CurveParams c{PrimeModulus(Int(10007), 14), Int(3), Int(7)};
  Point base = scan_point(c, Int(0));
  REQUIRE_FALSE(base.is_infinity());
  Point a5 = scalar_mul(c, Int(5), base);
  Point a3 = scalar_mul(c, Int(3), base);
  CHECK(add(c, a5, a3) == scalar_mul(c, Int(8), base));
  CHECK_THROWS_AS(scalar_mul(c, Int(-2), base), std::invalid_argument);
}

TEST_CASE("quadratic twist parameters and order") {
  CurveParams c = toy511();
  CurveParams tw = twist(c, Int(2));  // a' = a c^2 = 4, b' = b c^3 = 8 = 3
  CHECK(tw.p.value == 5);
  CHECK(tw.a == 4);
  CHECK(tw.b == 3);

  // #E + #E' = 2p + 2
  CHECK(twist_order(c.p, Int(9)) == 3);

  // discriminant transforms by c^6, so the twist of a nonsingular curve is
  // nonsingular
  Int d = discriminant(c);
  Int dt = discriminant(tw);
  Int c6 = Int(2 * 2 * 2 * 2 * 2 * 2) % 5;
  CHECK(dt == (d * c6) % 5);
  CHECK(dt != 0);
}

TEST_CASE("smallest quadratic non-residue") {
  CHECK(smallest_qnr(PrimeModulus(Int(5), 3)) == 2);
  CHECK(smallest_qnr(PrimeModulus(Int(7), 3)) == 3);
  CHECK(smallest_qnr(PrimeModulus(Int(23), 5)) == 5);
}

TEST_CASE("Hasse interval membership") {
  // p = 5: |N - 6| <= 2*sqrt(5) = 4.47
  CHECK(in_hasse_interval(Int(5), Int(2)));
  CHECK(in_hasse_interval(Int(5), Int(9)));
  CHECK(in_hasse_interval(Int(5), Int(10)));
  CHECK_FALSE(in_hasse_interval(Int(5), Int(1)));
  CHECK_FALSE(in_hasse_interval(Int(5), Int(11)));
}
