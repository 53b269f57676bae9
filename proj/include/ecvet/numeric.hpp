#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ecvet {

/// Arbitrary-precision integer used throughout the library.
using Int = mpz_class;

/// Number of bits in |v|; bit_length(0) == 0.
int bit_length(const Int& v);

/// log2(v) for v > 0, accurate to ~1e-15 (mantissa + exponent extraction).
double log2_int(const Int& v);

/// Prime field modulus together with its bit size (the field size l).
struct PrimeModulus {
  Int value;
  int bits = 0;

  PrimeModulus() = default;
  PrimeModulus(Int v, int b) : value(std::move(v)), bits(b) {}

  /// Validates that v is an odd probable prime and records its bit length.
  /// Throws std::invalid_argument otherwise.  Generator-produced moduli are
  /// additionally 3 mod 4; the verifier accepts 1 mod 4 as well, so that
  /// constraint is *not* enforced here.
  static PrimeModulus checked(const Int& v);
};

/// Outcome of budget-bounded factoring.  Invariant: product of
/// prime^multiplicity times cofactor equals target; complete iff cofactor
/// is 1; every listed prime passes is_probable_prime.
struct PartialFactorization {
  Int target;
  std::vector<std::pair<Int, int>> found;  // (prime, multiplicity), ascending
  Int cofactor{1};
  bool complete = false;

  Int remultiply() const;
};

/// Pocklington primality certificate: n is prime when the factored part F of
/// n-1 exceeds sqrt(n) and a witness satisfies the Pocklington conditions.
struct PocklingtonCertificate {
  Int n;
  PartialFactorization factored_part;  // factorization of n-1
  Int witness;
};

/// Effort cap for bounded_factor.  One batch is 4096 Pollard-rho iterations;
/// the default (2^20 batches) is tuned for 256-bit targets.
struct FactorBudget {
  std::uint64_t batches = 1u << 20;
};

/// Optional instrumentation sink for bounded_factor.
struct FactorStats {
  double seconds = 0.0;
  std::uint64_t batches_used = 0;
};

/// base^exponent mod modulus.  Throws std::invalid_argument on modulus = 0 or
/// negative exponent.
Int mod_pow(const Int& base, const Int& exponent, const Int& modulus);

/// Miller-Rabin.  Deterministic for n < 2^64 via the witness set
/// {2,3,5,7,11,13,17,19,23,29,31,37}; `rounds` witnesses drawn from an
/// n-seeded generator above that (deterministic per n).  n <= 1 gives false.
bool is_probable_prime(const Int& n, int rounds = 64);

/// Checks the Pocklington conditions; true certifies cert.n prime.
/// Throws std::invalid_argument when the factored part F <= sqrt(n)
/// (insufficient certificate).
bool verify_pocklington(const PocklingtonCertificate& cert);

/// Square root of a mod p for p = 3 mod 4, via a^((p+1)/4).  Returns the
/// principal root (callers pick between y and p-y), nullopt for
/// non-residues.  Throws std::domain_error for p = 1 mod 4 (Tonelli-Shanks
/// is deliberately out of scope).
std::optional<Int> sqrt_mod(const Int& a, const PrimeModulus& p);

/// Jacobi symbol (a/n).  Throws std::invalid_argument unless n is odd, >= 3.
int jacobi(const Int& a, const Int& n);

/// Largest s with s^2 <= n.  Throws std::invalid_argument for n < 0.
Int isqrt(const Int& n);

/// Trial division to 10^6 followed by Pollard-rho (Brent) splitting until the
/// budget runs out.  Deterministic for a fixed (n, budget, seed).
PartialFactorization bounded_factor(const Int& n, const FactorBudget& budget = {},
                                    std::uint64_t seed = 1,
                                    FactorStats* stats = nullptr);

}  // namespace ecvet
