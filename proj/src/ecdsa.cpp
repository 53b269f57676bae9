#include "ecvet/ecdsa.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#if defined(__x86_64__) || defined(__i386__)
#include <x86intrin.h>
#endif

namespace ecvet {

namespace {

Int mod_inv(const Int& a, const Int& n) {
  Int out;
  if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()) == 0)
    throw std::domain_error("no modular inverse");
  return out;
}

std::uint64_t cycle_counter(bool& estimated) {
#if defined(__x86_64__) || defined(__i386__)
  estimated = false;
  return __rdtsc();
#else
  estimated = true;
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now().time_since_epoch())
          .count());
#endif
}

}  // namespace

KeyPair keygen(const DomainParams& domain, EntropySource& rng) {
  Int d;
  do {
    d = rng.next_below(domain.n, "ecdsa-key");
  } while (d == 0);
  return KeyPair{d, scalar_mul(domain.curve, d, domain.G)};
}

Signature sign_with_nonce(const DomainParams& domain, const Int& d,
                          const Int& digest, const Int& nonce) {
  const Int& n = domain.n;
  if (nonce <= 0 || nonce >= n)
    throw std::invalid_argument("nonce out of range");
  Point K = scalar_mul(domain.curve, nonce, domain.G);
  if (K.is_infinity()) throw std::domain_error("degenerate nonce");
  Int r = K.x % n;
  if (r == 0) throw std::domain_error("degenerate nonce (r = 0)");
  Int z = digest % n;
  if (z < 0) z += n;
  Int s = mod_inv(nonce, n) * (z + r * d) % n;
  if (s == 0) throw std::domain_error("degenerate nonce (s = 0)");
  return Signature{r, s};
}

Signature sign(const DomainParams& domain, const Int& d, const Int& digest,
               EntropySource& nonce_source) {
  if (d <= 0 || d >= domain.n)
    throw std::invalid_argument("secret key out of range");
  for (;;) {
    Int k = nonce_source.next_below(domain.n, "ecdsa-nonce");
    if (k == 0) continue;
    try {
      return sign_with_nonce(domain, d, digest, k);
    } catch (const std::domain_error&) {
      continue;  // r or s vanished; redraw
    }
  }
}

bool verify(const DomainParams& domain, const Point& P_pub, const Int& digest,
            const Signature& sig) {
  const Int& n = domain.n;
  if (sig.r <= 0 || sig.r >= n || sig.s <= 0 || sig.s >= n) return false;
  if (P_pub.is_infinity() || !on_curve(domain.curve, P_pub)) return false;
  Int z = digest % n;
  if (z < 0) z += n;
  Int w = mod_inv(sig.s, n);
  Int u1 = z * w % n;
  Int u2 = sig.r * w % n;
  Point R = add(domain.curve, scalar_mul(domain.curve, u1, domain.G),
                scalar_mul(domain.curve, u2, P_pub));
  if (R.is_infinity()) return false;
  return R.x % n == sig.r;
}

BenchReport bench(const DomainParams& domain, int trials) {
  if (trials < 1) throw std::invalid_argument("bench: trials must be >= 1");
  using clock = std::chrono::steady_clock;
  BenchReport rep;
  rep.trials = trials;

  TestEntropySource rng(std::uint64_t(0xb3c9));
  Int digest("1234567890123456789012345678901234567890");

  double kg_s = 0, kg_c = 0, sg_s = 0, sg_c = 0, vf_s = 0, vf_c = 0;
  bool estimated = false;
  for (int i = 0; i < trials; ++i) {
    auto t0 = clock::now();
    std::uint64_t c0 = cycle_counter(estimated);
    KeyPair kp = keygen(domain, rng);
    std::uint64_t c1 = cycle_counter(estimated);
    auto t1 = clock::now();
    Signature sig = sign(domain, kp.d, digest, rng);
    std::uint64_t c2 = cycle_counter(estimated);
    auto t2 = clock::now();
    bool ok = verify(domain, kp.P_pub, digest, sig);
    std::uint64_t c3 = cycle_counter(estimated);
    auto t3 = clock::now();
    if (!ok) throw std::logic_error("bench: roundtrip failed");

    kg_s += std::chrono::duration<double>(t1 - t0).count();
    sg_s += std::chrono::duration<double>(t2 - t1).count();
    vf_s += std::chrono::duration<double>(t3 - t2).count();
    kg_c += double(c1 - c0);
    sg_c += double(c2 - c1);
    vf_c += double(c3 - c2);
  }
  rep.keygen_seconds = kg_s / trials;
  rep.sign_seconds = sg_s / trials;
  rep.verify_seconds = vf_s / trials;
  rep.keygen_cycles = kg_c / trials;
  rep.sign_cycles = sg_c / trials;
  rep.verify_cycles = vf_c / trials;
  rep.cycles_estimated = estimated;
  return rep;
}

std::string BenchReport::table_text(const std::string& curve_name) const {
  std::ostringstream os;
  os << "Curve\tKey pair generation\t\tSigning\t\tVerification\n"
     << "\tTime elapsed (in s)\tCPU clock cycles\tTime elapsed (in s)\t"
        "CPU clock cycles\tTime elapsed (in s)\tCPU clock cycles\n";
  os.precision(7);
  os << std::fixed << curve_name << "\t" << keygen_seconds << "\t"
     << static_cast<long long>(keygen_cycles) << "\t" << sign_seconds << "\t"
     << static_cast<long long>(sign_cycles) << "\t" << verify_seconds << "\t"
     << static_cast<long long>(verify_cycles);
  if (cycles_estimated) os << "\t(cycles estimated from wall time)";
  os << "\n";
  return os.str();
}

}  // namespace ecvet
