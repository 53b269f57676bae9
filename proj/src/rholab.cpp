#include "ecvet/rholab.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "internal_sampling.hpp"

namespace ecvet {

namespace {

constexpr int kBuckets = 16;
constexpr int kCycleWindow = 4;

struct WalkState {
  Point X;
  Int u, v;  // X = u*G + v*Q, maintained through negation folds
};

// x alone names the {P, -P} class, so it is the whole map key.
std::uint64_t class_key(const Point& P) {
  return mpz_get_ui(P.x.get_mpz_t());
}

void fold(const CurveParams& curve, WalkState& w, const Int& n) {
  const Int& p = curve.p.value;
  if (w.X.y * 2 > p) {
    w.X = negate(curve, w.X);
    w.u = (n - w.u) % n;
    w.v = (n - w.v) % n;
  }
}

}  // namespace

RhoTrialResult solve_ecdlp(const DomainParams& domain, const Point& Q,
                           std::uint64_t seed) {
  const Int& n = domain.n;
  if (!is_probable_prime(n))
    throw std::invalid_argument("solve_ecdlp: n must be prime");
  if (n > (Int(1) << 40))
    throw std::invalid_argument("solve_ecdlp: refused above 2^40 (desk-scale solver)");
  if (!Q.is_infinity() && !on_curve(domain.curve, Q))
    throw std::invalid_argument("solve_ecdlp: Q is not on the curve");

  RhoTrialResult result;
  if (Q.is_infinity()) {
    result.k_recovered = 0;
    return result;
  }

  const CurveParams& curve = domain.curve;
  std::mt19937_64 rng(seed);

  // Bucket steps R_i = c_i*G + d_i*Q.
  std::array<Point, kBuckets> R;
  std::array<Int, kBuckets> c, d;
  for (int i = 0; i < kBuckets; ++i) {
    do {
      c[i] = internal::uniform_below(rng, n);
      d[i] = internal::uniform_below(rng, n);
      R[i] = add(curve, scalar_mul(curve, c[i], domain.G),
                 scalar_mul(curve, d[i], Q));
    } while (R[i].is_infinity());
  }

  struct Visit {
    std::uint64_t u, v;
  };
  std::unordered_map<std::uint64_t, Visit> seen;
  seen.reserve(1u << 12);

  for (;;) {  // one iteration = one walk (fresh start)
    WalkState w;
    do {
      w.u = internal::uniform_below(rng, n);
      w.v = internal::uniform_below(rng, n);
      w.X = add(curve, scalar_mul(curve, w.u, domain.G),
                scalar_mul(curve, w.v, Q));
    } while (w.X.is_infinity());
    fold(curve, w, n);

    std::array<std::uint64_t, kCycleWindow> recent{};
    recent.fill(~0ull);
    bool walking = true;

    while (walking) {
      std::uint64_t key = class_key(w.X);

      auto [it, fresh] = seen.try_emplace(
          key, Visit{mpz_get_ui(w.u.get_mpz_t()), mpz_get_ui(w.v.get_mpz_t())});
      if (!fresh) {
        Int u0 = it->second.u, v0 = it->second.v;
        Int dv = (v0 - w.v) % n;
        if (dv < 0) dv += n;
        if (dv == 0) {
          ++result.restarts;
          break;  // useless collision: same Q-multiplier on both sides
        }
        Int inv;
        mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), n.get_mpz_t());
        Int k = ((w.u - u0) % n * inv) % n;
        if (k < 0) k += n;
        // The fold keeps X = u*G + v*Q exact (u, v are negated together
        // with the point), so the collision relation pins k directly.
        if (scalar_mul(curve, k, domain.G) == Q) {
          result.k_recovered = k;
          return result;
        }
        ++result.restarts;  // defensive: inconsistent collision
        break;
      }

      int b = static_cast<int>(mpz_fdiv_ui(w.X.x.get_mpz_t(), kBuckets));
      Point next = add(curve, w.X, R[b]);
      ++result.iterations;
      if (next.is_infinity()) {
        ++result.restarts;
        break;
      }
      w.X = next;
      w.u = (w.u + c[b]) % n;
      w.v = (w.v + d[b]) % n;
      fold(curve, w, n);

      std::uint64_t nk = class_key(w.X);
      bool cycling = false;
      for (std::uint64_t r : recent) cycling = cycling || r == nk;
      if (cycling) {
        // Fruitless cycle induced by the negation fold: double out of it.
        Point doubled = add(curve, w.X, w.X);
        ++result.iterations;
        if (doubled.is_infinity()) {
          ++result.restarts;
          break;
        }
        w.X = doubled;
        w.u = w.u * 2 % n;
        w.v = w.v * 2 % n;
        fold(curve, w, n);
      }
      for (int i = kCycleWindow - 1; i > 0; --i) recent[i] = recent[i - 1];
      recent[0] = nk;
    }
  }
}

RhoStats rho_experiment(const DomainParams& domain, int trials,
                        std::uint64_t seed) {
  if (trials < 30)
    throw std::invalid_argument("rho_experiment: at least 30 trials required");

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  RhoStats stats;
  stats.trials = trials;
  double total = 0.0;
  for (int i = 0; i < trials; ++i) {
    Int k_true = internal::uniform_below(rng, domain.n);
    Point Q = scalar_mul(domain.curve, k_true, domain.G);
    RhoTrialResult trial = solve_ecdlp(domain, Q, rng());
    if ((trial.k_recovered - k_true) % domain.n != 0)
      throw std::logic_error("rho_experiment: recovered scalar mismatch");
    total += static_cast<double>(trial.iterations);
  }
  stats.mean_iterations = total / trials;
  stats.predicted = 0.886 * std::sqrt(mpz_get_d(domain.n.get_mpz_t()));
  stats.ratio = stats.mean_iterations / stats.predicted;
  return stats;
}

}  // namespace ecvet
