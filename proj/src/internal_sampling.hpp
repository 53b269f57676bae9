#pragma once

// Shared internal helpers: deterministic uniform sampling of residues and
// curve points for any odd prime p.  The public sqrt_mod contract is
// restricted to p = 3 mod 4; order certification and twist audits must also
// handle verifier-supplied curves over p = 1 mod 4, so point sampling here
// falls back to Cipolla's algorithm (not Tonelli-Shanks) for those moduli.

#include <random>
#include <stdexcept>

#include "ecvet/curve.hpp"

namespace ecvet::internal {

inline Int uniform_below(std::mt19937_64& rng, const Int& bound) {
  if (bound <= 0) throw std::invalid_argument("uniform_below: bound <= 0");
  int bits = bit_length(bound);
  int words = (bits + 63) / 64;
  for (;;) {
    Int v = 0;
    for (int w = 0; w < words; ++w) {
      v <<= 64;
      v |= Int(static_cast<unsigned long>(rng()));
    }
    v >>= words * 64 - bits;
    if (v < bound) return v;
  }
}

// Square root mod any odd prime: exponentiation for p = 3 mod 4, Cipolla's
// F_p[w] method otherwise.  Caller guarantees a is a QR (or 0).
inline Int sqrt_mod_any(const Int& a, const Int& p, std::mt19937_64& rng) {
  Int v = a % p;
  if (v < 0) v += p;
  if (v == 0) return Int(0);
  if (p % 4 == 3) return mod_pow(v, (p + 1) / 4, p);

  // Cipolla: find t with t^2 - a a non-residue, then (t + w)^((p+1)/2)
  // with w^2 = t^2 - a lands in F_p and squares to a.
  Int t, w2;
  for (;;) {
    t = uniform_below(rng, p);
    w2 = (t * t - v) % p;
    if (w2 < 0) w2 += p;
    if (w2 == 0) return t;  // a = t^2
    if (jacobi(w2, p) == -1) break;
  }
  // F_p[w] arithmetic on pairs (c0 + c1*w).
  auto mul = [&](const std::pair<Int, Int>& x, const std::pair<Int, Int>& y) {
    Int c0 = (x.first * y.first + x.second * y.second % p * w2) % p;
    Int c1 = (x.first * y.second + x.second * y.first) % p;
    return std::make_pair(c0, c1);
  };
  std::pair<Int, Int> result{1, 0}, base{t, 1};
  Int e = (p + 1) / 2;
  for (int i = bit_length(e) - 1; i >= 0; --i) {
    result = mul(result, result);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, base);
  }
  Int r = result.first % p;
  if (r < 0) r += p;
  return r;
}

// Uniform point on the curve: random x until the RHS is a square.
inline Point random_point(const CurveParams& curve, std::mt19937_64& rng,
                          int max_attempts = 20000) {
  const Int& p = curve.p.value;
  for (int i = 0; i < max_attempts; ++i) {
    Int x = uniform_below(rng, p);
    Int rhs = ((x * x % p * x) + curve.a * x + curve.b) % p;
    if (rhs < 0) rhs += p;
    if (rhs == 0) return Point::affine(x, Int(0));
    if (jacobi(rhs, p) != 1) continue;
    Int y = sqrt_mod_any(rhs, p, rng);
    if ((rng() & 1) != 0) y = p - y;
    return Point::affine(x, y);
  }
  throw std::runtime_error("random_point: no point found (retry budget)");
}

}  // namespace ecvet::internal
