#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ecvet/curve.hpp"
#include "ecvet/ordercalc.hpp"

using namespace ecvet;

TEST_CASE("exhaustive point counts on reference curves") {
  CHECK(count_points_exhaustive(
            CurveParams{PrimeModulus(Int(5), 3), Int(1), Int(1)}) == 9);
  CHECK(count_points_exhaustive(
            CurveParams{PrimeModulus(Int(7), 3), Int(1), Int(0)}) == 8);
  CHECK(count_points_exhaustive(
            CurveParams{PrimeModulus(Int(23), 5), Int(1), Int(1)}) == 28);
}

TEST_CASE("exhaustive counting is capped at 20-bit fields") {
  CurveParams big{PrimeModulus(Int(1) << 21 | 17, 22), Int(1), Int(1)};
  CHECK_THROWS_AS(count_points_exhaustive(big), std::invalid_argument);
}

TEST_CASE("bsgs agrees with exhaustive on random small curves") {
  std::mt19937_64 rng(7);
  int tested = 0;
  while (tested < 25) {
    Int p = Int((unsigned long)(rng() % 60000 + 1000)) | 1;
    if (!is_probable_prime(p) || p < 5) continue;
    PrimeModulus pm(p, bit_length(p));
    Int a = Int((unsigned long)(rng() % 1000));
    Int b = Int((unsigned long)(rng() % 1000));
    CurveParams c{pm, a, b};
    if (discriminant(c) == 0) continue;
    CHECK(count_points_bsgs(c) == count_points_exhaustive(c));
    ++tested;
  }
}

TEST_CASE("bsgs resolves curves with non-cyclic group structure") {
  // j = 0 and j = 1728 families produce the extreme group shapes
  for (unsigned long pv : {1009ul, 10007ul, 65521ul}) {
    PrimeModulus pm(Int(pv), bit_length(Int(pv)));
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; b <= 3; ++b) {
        CurveParams c{pm, Int(a), Int(b)};
        if (discriminant(c) == 0) continue;
        CHECK(count_points_bsgs(c) == count_points_exhaustive(c));
      }
    }
  }
}

TEST_CASE("bsgs refuses oversized or singular input") {
  CHECK_THROWS_AS(
      count_points_bsgs(CurveParams{
          PrimeModulus((Int(1) << 61) - 1, 61), Int(1), Int(1)}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      count_points_bsgs(CurveParams{PrimeModulus(Int(23), 5), Int(0), Int(0)}),
      std::invalid_argument);
}

TEST_CASE("point_order divides out the factorization") {
  CurveParams c{PrimeModulus(Int(5), 3), Int(1), Int(1)};  // order 9
  Point G = Point::affine(Int(0), Int(1));
  PartialFactorization f = bounded_factor(Int(9));
  CHECK(point_order(c, G, Int(9), f) == 9);

  Point three_g = scalar_mul(c, Int(3), G);
  CHECK(point_order(c, three_g, Int(9), f) == 3);
  CHECK(point_order(c, Point::infinity(), Int(9), f) == 1);
}

TEST_CASE("point_order rejects a bad multiple or an incomplete factorization") {
  CurveParams c{PrimeModulus(Int(5), 3), Int(1), Int(1)};
  Point G = Point::affine(Int(0), Int(1));
  PartialFactorization f = bounded_factor(Int(8));
  CHECK_THROWS_AS(point_order(c, G, Int(8), f), std::invalid_argument);

  PartialFactorization partial;
  partial.target = 9;
  partial.found = {};
  partial.cofactor = 9;
  partial.complete = false;
  CHECK_THROWS_AS(point_order(c, G, Int(9), partial), std::runtime_error);
}

TEST_CASE("certificate_from_count pins composite orders by a large factor") {
  // 40-bit curve with #E = 3 * 326548195361. The large prime factor alone
  // exceeds the Hasse window width, so once a witness shows it divides the
  // group order, the claimed count is the only candidate left.
  CurveParams c{PrimeModulus(Int("979643943779"), 40), Int("448924605"),
                Int("626388936")};
  Int N("979644586083");
  OrderCertificate cert = certificate_from_count(c, N, OrderMethod::Bsgs);
  CHECK(cert.hasse_ok);
  CHECK(cert.witnesses_ok);
  CHECK(cert.uniqueness_ok);
  CHECK(cert.certified());

  // The toy curve's order 28 = 2^2 * 7 has no factor that can pin
  // uniqueness (7^2 < 16p), so it verifies but does not certify.
  CurveParams toy{PrimeModulus(Int(23), 5), Int(1), Int(1)};
  OrderCertificate weak = certificate_from_count(toy, Int(28), OrderMethod::Exhaustive);
  CHECK(weak.hasse_ok);
  CHECK(weak.witnesses_ok);
  CHECK_FALSE(weak.uniqueness_ok);
  CHECK_FALSE(weak.certified());
}

TEST_CASE("certify_order accepts the true order and rejects a shifted one") {
  CurveParams c{PrimeModulus(Int(23), 5), Int(1), Int(1)};
  Int N = 28;
  OrderCertificate good = certify_order(c, N);
  CHECK(good.hasse_ok);
  CHECK(good.witnesses_ok);

  OrderCertificate bad = certify_order(c, Int(26));  // in Hasse window, wrong
  CHECK_FALSE(bad.witnesses_ok);
  CHECK_FALSE(bad.certified());

  OrderCertificate way_off = certify_order(c, Int(60));  // outside Hasse
  CHECK_FALSE(way_off.hasse_ok);
  CHECK_FALSE(way_off.certified());
}
