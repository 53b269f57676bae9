#pragma once

#include <cstdint>

#include "ecvet/curve.hpp"

namespace ecvet {

struct RhoTrialResult {
  Int k_recovered;
  std::uint64_t iterations = 0;  // point additions performed by the walk
  int restarts = 0;
};

struct RhoStats {
  int trials = 0;
  double mean_iterations = 0.0;
  double predicted = 0.0;  // 0.886 * sqrt(n)
  double ratio = 0.0;      // mean / predicted
};

// Pollard-rho discrete log on desk-scale curves: additive walk over 16
// partition buckets, points folded by the negation map so measured walk
// lengths track the 0.886*sqrt(n) collision model, full-memory collision
// detection, doubling to escape fruitless cycles, fresh start on a useless
// collision. Requires prime n <= 2^40 and Q in <G>; the recovered k always
// satisfies k*G = Q.
RhoTrialResult solve_ecdlp(const DomainParams& domain, const Point& Q,
                           std::uint64_t seed);

// Runs the solver against `trials` uniform targets (trials >= 30) and
// reports mean point additions against the model.
RhoStats rho_experiment(const DomainParams& domain, int trials,
                        std::uint64_t seed);

}  // namespace ecvet
