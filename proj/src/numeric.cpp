#include "ecvet/numeric.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>

namespace ecvet {

namespace {

// Odd primes below the trial-division bound, sieved once.
constexpr std::uint32_t kTrialBound = 1000000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> sieve(kTrialBound + 1, true);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialBound; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j <= kTrialBound; j += i)
        sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

// One Miller-Rabin round; true means "possibly prime".
bool mr_round(const Int& n, const Int& nm1, const Int& d, unsigned long s,
              const Int& a) {
  Int x = mod_pow(a, d, n);
  if (x == 1 || x == nm1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == nm1) return true;
  }
  return false;
}

constexpr std::uint64_t kSmallWitnesses[] = {2,  3,  5,  7,  11, 13,
                                             17, 19, 23, 29, 31, 37};

}  // namespace

int bit_length(const Int& v) {
  if (v == 0) return 0;
  return static_cast<int>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

double log2_int(const Int& v) {
  if (v <= 0) throw std::invalid_argument("log2_int: v must be positive");
  long exp = 0;
  double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return static_cast<double>(exp) + std::log2(d);
}

PrimeModulus PrimeModulus::checked(const Int& v) {
  if (v < 3 || mpz_even_p(v.get_mpz_t()))
    throw std::invalid_argument("PrimeModulus: value must be an odd prime");
  if (!is_probable_prime(v))
    throw std::invalid_argument("PrimeModulus: value is not prime");
  return PrimeModulus(v, bit_length(v));
}

Int PartialFactorization::remultiply() const {
  Int prod = cofactor;
  for (const auto& [q, e] : found) {
    for (int i = 0; i < e; ++i) prod *= q;
  }
  return prod;
}

Int mod_pow(const Int& base, const Int& exponent, const Int& modulus) {
  if (modulus == 0) throw std::invalid_argument("mod_pow: modulus is zero");
  if (exponent < 0) throw std::invalid_argument("mod_pow: negative exponent");
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(),
           modulus.get_mpz_t());
  return r;
}

bool is_probable_prime(const Int& n, int rounds) {
  if (rounds < 1) throw std::invalid_argument("is_probable_prime: rounds < 1");
  if (n <= 1) return false;
  if (n == 2 || n == 3) return true;
  if (mpz_even_p(n.get_mpz_t())) return false;

  Int nm1 = n - 1;
  Int d = nm1;
  unsigned long s = mpz_scan1(nm1.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    // Deterministic below 2^64 with the fixed 12-witness set.
    for (std::uint64_t w : kSmallWitnesses) {
      if (n == w) return true;
      if (mpz_divisible_ui_p(n.get_mpz_t(), w)) return false;
      if (!mr_round(n, nm1, d, s, Int(w))) return false;
    }
    return true;
  }

  // Above 2^64: witnesses from an n-seeded stream, deterministic per n.
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(n);
  Int span = n - 3;  // witnesses in [2, n-2]
  for (int i = 0; i < rounds; ++i) {
    Int a = rng.get_z_range(span) + 2;
    if (!mr_round(n, nm1, d, s, a)) return false;
  }
  return true;
}

bool verify_pocklington(const PocklingtonCertificate& cert) {
  const Int& n = cert.n;
  if (n < 3) return false;
  Int nm1 = n - 1;
  if (cert.factored_part.remultiply() != nm1) return false;

  Int F = 1;
  for (const auto& [q, e] : cert.factored_part.found) {
    for (int i = 0; i < e; ++i) F *= q;
  }
  if (F * F <= n)
    throw std::invalid_argument(
        "verify_pocklington: insufficient certificate (F <= sqrt(n))");

  if (mod_pow(cert.witness, nm1, n) != 1) return false;
  for (const auto& [q, e] : cert.factored_part.found) {
    (void)e;
    if (!is_probable_prime(q)) return false;
    Int g;
    Int t = mod_pow(cert.witness, nm1 / q, n) - 1;
    mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    if (g != 1) return false;
  }
  return true;
}

std::optional<Int> sqrt_mod(const Int& a, const PrimeModulus& p) {
  if (p.value % 4 != 3)
    throw std::domain_error("sqrt_mod: modulus must be 3 mod 4");
  Int v = a % p.value;
  if (v < 0) v += p.value;
  if (v == 0) return Int(0);
  if (jacobi(v, p.value) != 1) return std::nullopt;
  Int r = mod_pow(v, (p.value + 1) / 4, p.value);
  return r;
}

int jacobi(const Int& a, const Int& n) {
  if (n < 3 || mpz_even_p(n.get_mpz_t()))
    throw std::invalid_argument("jacobi: n must be odd and >= 3");
  return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

Int isqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative input");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

namespace {

// Brent's variant of Pollard rho with batched gcds.  Consumes batches of
// 4096 iterations from *budget; returns a nontrivial factor of n or 0.
Int brent_rho(const Int& n, std::uint64_t* budget, gmp_randclass& rng) {
  constexpr int kBatchIters = 4096;
  constexpr int kGcdBlock = 128;

  while (*budget > 0) {
    Int y = rng.get_z_range(n - 1) + 1;
    Int c = rng.get_z_range(n - 1) + 1;
    Int x = y, ys = y, q = 1, g = 1;
    std::uint64_t r = 1;
    std::uint64_t done = 0;
    // Per-seed cap: a few batches, then try a fresh (y, c).
    std::uint64_t cap = std::min<std::uint64_t>(*budget, 256) * kBatchIters;
    while (g == 1 && done < cap) {
      x = y;
      for (std::uint64_t i = 0; i < r && done < cap; ++i, ++done) {
        y = (y * y + c) % n;
      }
      std::uint64_t k = 0;
      while (k < r && g == 1 && done < cap) {
        ys = y;
        std::uint64_t block = std::min<std::uint64_t>(kGcdBlock, r - k);
        for (std::uint64_t i = 0; i < block && done < cap; ++i, ++done) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += block;
      }
      r *= 2;
    }
    std::uint64_t batches = (done + kBatchIters - 1) / kBatchIters;
    *budget -= std::min(*budget, batches);
    if (g == n) {
      // Backtrack one step at a time to recover the factor.
      do {
        ys = (ys * ys + c) % n;
        Int t = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

}  // namespace

PartialFactorization bounded_factor(const Int& n, const FactorBudget& budget,
                                    std::uint64_t seed, FactorStats* stats) {
  if (n < 1) throw std::invalid_argument("bounded_factor: n must be >= 1");
  auto t0 = std::chrono::steady_clock::now();

  PartialFactorization out;
  out.target = n;
  std::map<Int, int> factors;
  Int m = n;

  for (std::uint32_t q : small_primes()) {
    if (m == 1) break;
    if (Int(q) * q > m) break;  // remaining m is prime
    while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
      ++factors[Int(q)];
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), q);
    }
  }

  std::uint64_t remaining = budget.batches;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(Int(seed == 0 ? 1 : seed));

  std::vector<Int> pending;
  std::vector<Int> stuck;
  if (m > 1) pending.push_back(m);

  while (!pending.empty()) {
    Int c = pending.back();
    pending.pop_back();
    if (c == 1) continue;
    if (is_probable_prime(c)) {
      ++factors[c];
      continue;
    }
    // Prime powers trip up rho's cycle structure less often when unwrapped.
    if (mpz_perfect_power_p(c.get_mpz_t())) {
      for (unsigned long k = 2; k <= mpz_sizeinbase(c.get_mpz_t(), 2); ++k) {
        Int root;
        if (mpz_root(root.get_mpz_t(), c.get_mpz_t(), k) != 0) {
          for (unsigned long i = 0; i < k; ++i) pending.push_back(root);
          c = 1;
          break;
        }
      }
      if (c == 1) continue;
    }
    if (remaining == 0) {
      stuck.push_back(c);
      continue;
    }
    Int f = brent_rho(c, &remaining, rng);
    if (f == 0) {
      stuck.push_back(c);
    } else {
      pending.push_back(f);
      pending.push_back(c / f);
    }
  }

  out.cofactor = 1;
  for (const Int& c : stuck) out.cofactor *= c;
  for (auto& [q, e] : factors) out.found.emplace_back(q, e);
  std::sort(out.found.begin(), out.found.end());
  out.complete = (out.cofactor == 1);

  if (stats != nullptr) {
    stats->batches_used += budget.batches - remaining;
    stats->seconds += std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  }
  return out;
}

}  // namespace ecvet
