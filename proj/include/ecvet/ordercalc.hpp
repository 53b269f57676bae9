#pragma once

#include "ecvet/curve.hpp"

namespace ecvet {

/// Order determination method.
enum class OrderMethod { Exhaustive, Bsgs, External };

/// Evidence that a claimed curve order is (or is not) #E.
/// uniqueness_ok means N has a certified prime factor q > 4*sqrt(p) divding
/// the order of some witness point, which makes N the unique candidate in
/// the Hasse interval.
struct OrderCertificate {
  Int N;
  OrderMethod method = OrderMethod::External;
  std::vector<Point> witness_points;
  bool hasse_ok = false;
  bool uniqueness_ok = false;
  bool witnesses_ok = false;  // every sampled P satisfied N*P = Infinity

  bool certified() const { return hasse_ok && witnesses_ok && uniqueness_ok; }
};

/// #E by direct summation of Legendre symbols.  Requires p < 2^20
/// (throws std::invalid_argument above).
Int count_points_exhaustive(const CurveParams& curve);

/// #E via baby-step giant-step order finding: accumulates the lcm of random
/// point orders until a unique multiple remains in the Hasse interval,
/// falling back to a joint curve/twist resolution for maximally non-cyclic
/// groups.  Deterministic for fixed (curve, rng_seed).  Requires p < 2^56;
/// throws std::runtime_error("inconclusive...") if 16 points + the twist
/// fallback cannot pin the order (not observed in practice).
Int count_points_bsgs(const CurveParams& curve, std::uint64_t rng_seed = 1);

/// Verifier-side certificate for an externally supplied order: Hasse check
/// plus `trials` random witnesses with claimed_N * P = Infinity and the
/// uniqueness criterion above.  Sampling is seeded from the curve
/// parameters, so certificates are reproducible.
OrderCertificate certify_order(const CurveParams& curve, const Int& claimed_N,
                               int trials = 8);

/// Exact order of P by prime-factor stripping.  Requires N*P = Infinity
/// (std::invalid_argument) and factorization.complete
/// (std::runtime_error("inconclusive") otherwise).
Int point_order(const CurveParams& curve, const Point& P, const Int& N,
                const PartialFactorization& factorization);

/// Certificate wrapper for an order computed by one of the counting engines.
OrderCertificate certificate_from_count(const CurveParams& curve, const Int& N,
                                        OrderMethod method);

}  // namespace ecvet
