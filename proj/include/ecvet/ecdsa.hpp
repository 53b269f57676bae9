#pragma once

#include <string>

#include "ecvet/curve.hpp"
#include "ecvet/entropy.hpp"

namespace ecvet {

struct KeyPair {
  Int d;       // secret scalar in [1, n-1]
  Point P_pub;  // d*G
};

struct Signature {
  Int r, s;  // both in [1, n-1]
};

// One Table-9-shaped row: three operations, each with mean wall time and a
// mean cycle count. cycles_estimated marks counts derived from wall time
// rather than a hardware counter.
struct BenchReport {
  int trials = 0;
  double keygen_seconds = 0.0;
  double keygen_cycles = 0.0;
  double sign_seconds = 0.0;
  double sign_cycles = 0.0;
  double verify_seconds = 0.0;
  double verify_cycles = 0.0;
  bool cycles_estimated = false;

  std::string table_text(const std::string& curve_name) const;
};

KeyPair keygen(const DomainParams& domain, EntropySource& rng);

// Standard ECDSA with the digest supplied as an integer (reduced mod n by
// the caller or here); zero r or s redraws the nonce internally.
Signature sign(const DomainParams& domain, const Int& d, const Int& digest,
               EntropySource& nonce_source);

// Test hook: sign with an explicit nonce; throws on a degenerate nonce
// instead of redrawing. Exists for the hand-computable vectors and the
// nonce-reuse regression, not for production use.
Signature sign_with_nonce(const DomainParams& domain, const Int& d,
                          const Int& digest, const Int& nonce);

// Strict range checks on r, s; malformed input verifies false, never throws.
bool verify(const DomainParams& domain, const Point& P_pub, const Int& digest,
            const Signature& sig);

BenchReport bench(const DomainParams& domain, int trials);

}  // namespace ecvet
