#include "ecvet/ordercalc.hpp"

#include <map>
#include <stdexcept>

#include "ecvet/sha256.hpp"
#include "internal_sampling.hpp"

namespace ecvet {

namespace {

// Jacobi symbol on machine words; n odd, >= 3.
int jacobi_u64(std::uint64_t a, std::uint64_t n) {
  a %= n;
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      std::uint64_t r = n & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

std::uint64_t curve_seed(const CurveParams& curve) {
  Sha256 h;
  h.update(curve.p.value.get_str() + "|" + curve.a.get_str() + "|" +
           curve.b.get_str());
  auto d = h.digest();
  std::uint64_t s = 0;
  for (int i = 0; i < 8; ++i) s = (s << 8) | d[i];
  return s;
}

// All m in [lo, hi] with m*P = Infinity, via one baby-step giant-step pass.
std::vector<Int> order_multiples_in_window(const CurveParams& curve,
                                           const Point& P, const Int& lo,
                                           const Int& hi) {
  Int W = hi - lo + 1;
  Int s = isqrt(W);
  if (s * s < W) ++s;

  std::map<std::pair<Int, Int>, Int> baby;  // j*P -> j, affine entries only
  Point T = P;
  for (Int j = 1; j < s; ++j) {
    if (!T.inf) baby.emplace(std::make_pair(T.x, T.y), j);
    T = add_unchecked(curve, T, P);
  }
  Point S = T;  // s*P after the loop ran s-1 additions from P

  std::vector<Int> found;
  Point R = scalar_mul(curve, lo, P);
  for (Int base = lo; base <= hi; base += s) {
    if (R.inf && base <= hi) found.push_back(base);
    if (!R.inf) {
      Point neg = negate(curve, R);
      auto it = baby.find(std::make_pair(neg.x, neg.y));
      if (it != baby.end()) {
        Int m = base + it->second;
        if (m <= hi) found.push_back(m);
      }
    }
    R = add_unchecked(curve, R, S);
  }
  return found;
}

// Exact order of P, assuming ord(P) has a multiple in [lo, hi].
Int point_order_in_window(const CurveParams& curve, const Point& P,
                          const Int& lo, const Int& hi) {
  if (P.inf) return Int(1);
  std::vector<Int> ms = order_multiples_in_window(curve, P, lo, hi);
  if (ms.empty())
    throw std::runtime_error("order search: no multiple in the Hasse window");
  Int m = ms.front();
  PartialFactorization f = bounded_factor(m, FactorBudget{1u << 12});
  return point_order(curve, P, m, f);
}

// Accumulate lcm of point orders until the window holds a unique multiple.
// Returns (lcm, unique multiple or 0).
std::pair<Int, Int> lcm_scan(const CurveParams& curve, std::mt19937_64& rng,
                             const Int& lo, const Int& hi, int max_points) {
  Int L = 1;
  for (int i = 0; i < max_points; ++i) {
    Point P = internal::random_point(curve, rng);
    Int ord = point_order_in_window(curve, P, lo, hi);
    Int nl;
    mpz_lcm(nl.get_mpz_t(), L.get_mpz_t(), ord.get_mpz_t());
    L = nl;
    Int cnt = hi / L - (lo - 1) / L;
    if (cnt == 1) return {L, (hi / L) * L};
  }
  return {L, 0};
}

}  // namespace

Int count_points_exhaustive(const CurveParams& curve) {
  if (curve.p.value >= (Int(1) << 20))
    throw std::invalid_argument("count_points_exhaustive: p too large (>= 2^20)");
  std::uint64_t p = curve.p.value.get_ui();
  std::uint64_t a = curve.a.get_ui();
  std::uint64_t b = curve.b.get_ui();
  std::uint64_t count = 1;  // the point at infinity
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t rhs = ((x * x % p) * x % p + a * x % p + b) % p;
    if (rhs == 0) {
      count += 1;
    } else {
      count += 1 + jacobi_u64(rhs, p);
    }
  }
  return Int(count);
}

Int count_points_bsgs(const CurveParams& curve, std::uint64_t rng_seed) {
  if (curve.p.value >= (Int(1) << 56))
    throw std::invalid_argument("count_points_bsgs: p too large (>= 2^56)");
  if (discriminant(curve) == 0)
    throw std::invalid_argument("count_points_bsgs: singular curve");

  const Int& p = curve.p.value;
  Int w = isqrt(4 * p);
  Int lo = p + 1 - w, hi = p + 1 + w;

  std::mt19937_64 rng(rng_seed);
  auto [L, unique] = lcm_scan(curve, rng, lo, hi, 16);
  if (unique != 0) return unique;

  // Maximally non-cyclic group: intersect with the twist.  #E + #E' = 2p+2
  // pins #E among the surviving multiples of L.
  CurveParams tw = twist(curve, smallest_qnr(curve.p));
  auto [Lt, tw_unique] = lcm_scan(tw, rng, lo, hi, 16);
  (void)tw_unique;

  std::vector<Int> survivors;
  Int first = ((lo + L - 1) / L) * L;
  int scanned = 0;
  for (Int m = first; m <= hi; m += L) {
    if (++scanned > 4096) break;
    if ((2 * p + 2 - m) % Lt == 0) survivors.push_back(m);
  }
  if (survivors.size() == 1) return survivors.front();
  throw std::runtime_error(
      "count_points_bsgs: inconclusive after point budget");
}

OrderCertificate certify_order(const CurveParams& curve, const Int& claimed_N,
                               int trials) {
  if (trials < 1) throw std::invalid_argument("certify_order: trials < 1");
  const Int& p = curve.p.value;

  OrderCertificate cert;
  cert.N = claimed_N;
  cert.method = OrderMethod::External;
  cert.hasse_ok = in_hasse_interval(p, claimed_N);
  cert.witnesses_ok = true;

  std::mt19937_64 rng(curve_seed(curve));
  for (int i = 0; i < trials; ++i) {
    Point P = internal::random_point(curve, rng);
    cert.witness_points.push_back(P);
    if (!scalar_mul(curve, claimed_N, P).is_infinity()) cert.witnesses_ok = false;
  }

  // Certified prime factor q with q^2 > 16p (i.e. q > 4*sqrt(p)).
  Int q = 0;
  if (is_probable_prime(claimed_N)) {
    q = claimed_N;
  } else {
    PartialFactorization f = bounded_factor(claimed_N, FactorBudget{1u << 10});
    for (const auto& [qi, e] : f.found) {
      (void)e;
      if (qi * qi > 16 * p) q = qi;
    }
  }
  cert.uniqueness_ok = false;
  if (cert.hasse_ok && cert.witnesses_ok && q != 0 && q * q > 16 * p) {
    // claimed_N must be the only multiple of q in the Hasse window, and some
    // witness must have order divisible by q.
    Int w = isqrt(4 * p);
    Int lo = p + 1 - w, hi = p + 1 + w;
    Int cnt = hi / q - (lo - 1) / q;
    bool divides_witness = false;
    for (const Point& P : cert.witness_points) {
      if (!scalar_mul(curve, claimed_N / q, P).is_infinity()) {
        divides_witness = true;
        break;
      }
    }
    cert.uniqueness_ok =
        (cnt == 1) && ((hi / q) * q == claimed_N) && divides_witness;
  }
  return cert;
}

Int point_order(const CurveParams& curve, const Point& P, const Int& N,
                const PartialFactorization& factorization) {
  if (!scalar_mul(curve, N, P).is_infinity())
    throw std::invalid_argument("point_order: N*P is not the identity");
  if (!factorization.complete || factorization.remultiply() != N)
    throw std::runtime_error("point_order: inconclusive (incomplete factorization)");
  Int ord = N;
  for (const auto& [q, e] : factorization.found) {
    for (int i = 0; i < e; ++i) {
      if (ord % q != 0) break;
      Int cand = ord / q;
      if (scalar_mul(curve, cand, P).is_infinity())
        ord = cand;
      else
        break;
    }
  }
  return ord;
}

OrderCertificate certificate_from_count(const CurveParams& curve, const Int& N,
                                        OrderMethod method) {
  OrderCertificate cert;
  cert.N = N;
  cert.method = method;
  cert.hasse_ok = in_hasse_interval(curve.p.value, N);
  cert.witnesses_ok = true;
  std::mt19937_64 rng(curve_seed(curve) ^ 0x9e3779b97f4a7c15ull);
  Point P = internal::random_point(curve, rng);
  cert.witness_points.push_back(P);
  if (!scalar_mul(curve, N, P).is_infinity()) cert.witnesses_ok = false;
  if (is_probable_prime(N) && N * N > 16 * curve.p.value) {
    cert.uniqueness_ok = !scalar_mul(curve, Int(1), P).is_infinity();
  } else {
    PartialFactorization f = bounded_factor(N, FactorBudget{1u << 10});
    for (const auto& [qi, e] : f.found) {
      (void)e;
      if (qi * qi > 16 * curve.p.value &&
          !scalar_mul(curve, N / qi, P).is_infinity())
        cert.uniqueness_ok = true;
    }
  }
  return cert;
}

}  // namespace ecvet
