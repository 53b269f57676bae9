// ECDSA over generated and published domains: roundtrips, deterministic
// signing vectors, malformed-input rejection, and the bench report shape.

#include <doctest.h>

#include <stdexcept>
#include <string>

#include "ecvet/ecdsa.hpp"
#include "ecvet/registry.hpp"

using namespace ecvet;

namespace {

DomainParams registry_domain(const std::string& name) {
  const CurveFile& f = registry_get(name).file;
  REQUIRE(f.N.has_value());
  return DomainParams{CurveParams{PrimeModulus::checked(f.p), f.a, f.b},
                      Point::affine(f.Gx, f.Gy), *f.N, *f.n, *f.h};
}

// Prime-order 20-bit curve, cheap enough for many signatures.
DomainParams desk_domain() {
  CurveParams curve{PrimeModulus::checked(Int(530527)), Int(93657), Int(8868)};
  return DomainParams{curve, Point::affine(Int(123117), Int(282493)),
                      Int(531133), Int(531133), Int(1)};
}

}  // namespace

TEST_CASE("sign/verify roundtrip on the 256-bit published curve") {
  DomainParams dom = registry_domain("KG256r1");
  TestEntropySource rng(uint64_t(2024));
  Int digest("31415926535897932384626433832795028841971");
  for (int i = 0; i < 8; ++i) {
    KeyPair kp = keygen(dom, rng);
    CHECK(kp.d > 0);
    CHECK(kp.d < dom.n);
    CHECK(on_curve(dom.curve, kp.P_pub));
    Signature sig = sign(dom, kp.d, digest, rng);
    CHECK(verify(dom, kp.P_pub, digest, sig));
  }
}

TEST_CASE("signing is deterministic under a replayed entropy source") {
  DomainParams dom = registry_domain("KG256r1");
  Int digest(123456789);
  auto run = [&] {
    TestEntropySource rng(uint64_t(555));
    KeyPair kp = keygen(dom, rng);
    return std::pair{kp, sign(dom, kp.d, digest, rng)};
  };
  auto [kp1, sig1] = run();
  auto [kp2, sig2] = run();
  CHECK(kp1.d == kp2.d);
  CHECK(sig1.r == sig2.r);
  CHECK(sig1.s == sig2.s);
}

TEST_CASE("sign_with_nonce satisfies the defining congruence") {
  DomainParams dom = desk_domain();
  Int d(12345), digest(999999), nonce(54321);
  Signature sig = sign_with_nonce(dom, d, digest, nonce);
  CHECK(sig.r > 0);
  CHECK(sig.r < dom.n);
  CHECK(sig.s > 0);
  CHECK(sig.s < dom.n);
  // r is the x-coordinate of nonce*G reduced mod n.
  Point K = scalar_mul(dom.curve, nonce, dom.G);
  CHECK(sig.r == K.x % dom.n);
  // s*nonce = digest + r*d (mod n).
  Int z = digest % dom.n;
  CHECK((sig.s * nonce - z - sig.r * d) % dom.n == 0);
  // And the public verifier agrees.
  Point P_pub = scalar_mul(dom.curve, d, dom.G);
  CHECK(verify(dom, P_pub, digest, sig));
}

TEST_CASE("sign_with_nonce rejects out-of-range nonces") {
  DomainParams dom = desk_domain();
  CHECK_THROWS_AS(sign_with_nonce(dom, Int(5), Int(1), Int(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(sign_with_nonce(dom, Int(5), Int(1), dom.n),
                  std::invalid_argument);
  CHECK_THROWS_AS(sign_with_nonce(dom, Int(5), Int(1), Int(-3)),
                  std::invalid_argument);
}

TEST_CASE("sign rejects out-of-range secret keys") {
  DomainParams dom = desk_domain();
  TestEntropySource rng(uint64_t(9));
  CHECK_THROWS_AS(sign(dom, Int(0), Int(1), rng), std::invalid_argument);
  CHECK_THROWS_AS(sign(dom, dom.n, Int(1), rng), std::invalid_argument);
}

TEST_CASE("verify rejects tampered signatures and malformed inputs") {
  DomainParams dom = registry_domain("KG256r1");
  TestEntropySource rng(uint64_t(31337));
  Int digest("271828182845904523536028747135266249775724709");
  KeyPair kp = keygen(dom, rng);
  Signature sig = sign(dom, kp.d, digest, rng);
  REQUIRE(verify(dom, kp.P_pub, digest, sig));

  CHECK_FALSE(verify(dom, kp.P_pub, digest + 1, sig));
  CHECK_FALSE(verify(dom, kp.P_pub, digest, Signature{sig.r, sig.s + 1}));
  CHECK_FALSE(verify(dom, kp.P_pub, digest, Signature{sig.r + 1, sig.s}));
  CHECK_FALSE(verify(dom, kp.P_pub, digest, Signature{sig.s, sig.r}));

  // Range violations never throw, they just fail.
  CHECK_FALSE(verify(dom, kp.P_pub, digest, Signature{Int(0), sig.s}));
  CHECK_FALSE(verify(dom, kp.P_pub, digest, Signature{sig.r, Int(0)}));
  CHECK_FALSE(verify(dom, kp.P_pub, digest, Signature{dom.n, sig.s}));
  CHECK_FALSE(verify(dom, kp.P_pub, digest, Signature{sig.r, -sig.s}));

  // Malformed public keys.
  CHECK_FALSE(verify(dom, Point::infinity(), digest, sig));
  CHECK_FALSE(
      verify(dom, Point::affine(kp.P_pub.x, kp.P_pub.y + 1), digest, sig));

  // Somebody else's key.
  KeyPair other = keygen(dom, rng);
  CHECK_FALSE(verify(dom, other.P_pub, digest, sig));
}

TEST_CASE("nonce reuse leaks the secret key") {
  DomainParams dom = desk_domain();
  Int d(481516), nonce(2342), z1(1111), z2(2222);
  Signature s1 = sign_with_nonce(dom, d, z1, nonce);
  Signature s2 = sign_with_nonce(dom, d, z2, nonce);
  REQUIRE(s1.r == s2.r);  // same nonce, same r: the attacker's tell

  // k = (z1 - z2) / (s1 - s2), d = (s1*k - z1) / r, all mod n.
  const Int& n = dom.n;
  auto inv = [&](Int v) {
    Int out;
    v %= n;
    if (v < 0) v += n;
    REQUIRE(mpz_invert(out.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t()) != 0);
    return out;
  };
  Int k = (z1 - z2) % n * inv(s1.s - s2.s) % n;
  if (k < 0) k += n;
  CHECK(k == nonce);
  Int recovered = (s1.s * k - z1) % n * inv(s1.r) % n;
  if (recovered < 0) recovered += n;
  CHECK(recovered == d);
}

TEST_CASE("bench reports mean costs for all three operations") {
  DomainParams dom = desk_domain();
  CHECK_THROWS_AS(bench(dom, 0), std::invalid_argument);

  BenchReport rep = bench(dom, 5);
  CHECK(rep.trials == 5);
  CHECK(rep.keygen_seconds > 0.0);
  CHECK(rep.sign_seconds > 0.0);
  CHECK(rep.verify_seconds > 0.0);
  CHECK(rep.keygen_cycles > 0.0);
  CHECK(rep.sign_cycles > 0.0);
  CHECK(rep.verify_cycles > 0.0);

  std::string table = rep.table_text("unit-curve");
  CHECK(table.find("Curve\tKey pair generation") != std::string::npos);
  CHECK(table.find("Signing") != std::string::npos);
  CHECK(table.find("Verification") != std::string::npos);
  CHECK(table.find("Time elapsed (in s)") != std::string::npos);
  CHECK(table.find("CPU clock cycles") != std::string::npos);
  CHECK(table.find("unit-curve\t") != std::string::npos);
}
