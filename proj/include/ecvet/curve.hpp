#pragma once

#include "ecvet/numeric.hpp"

namespace ecvet {

/// Short Weierstrass curve y^2 = x^3 + ax + b over F_p (char > 3).
/// Coefficients are reduced residues; singular parameter sets (discriminant
/// zero) are representable so the validator can report on them, but helpers
/// that assume a group (add, scalar_mul) refuse them.
struct CurveParams {
  PrimeModulus p;
  Int a;
  Int b;

  CurveParams() = default;
  CurveParams(PrimeModulus p_, Int a_, Int b_);
};

/// Affine point or the point at infinity.
struct Point {
  Int x;
  Int y;
  bool inf = true;

  static Point infinity() { return Point{}; }
  static Point affine(Int x_, Int y_);
  bool is_infinity() const { return inf; }
  bool operator==(const Point& o) const;
};

/// Full domain parameter set: curve, base point, orders, cofactor.
struct DomainParams {
  CurveParams curve;
  Point G;
  Int N;  // curve order
  Int n;  // base-point order
  Int h;  // cofactor, h * n = N
};

/// (4a^3 + 27b^2) mod p.
Int discriminant(const CurveParams& curve);

/// Membership test for the affine equation (Infinity is on every curve).
bool on_curve(const CurveParams& curve, const Point& P);

/// Chord-tangent group law, affine coordinates.  Throws std::invalid_argument
/// on off-curve input or a singular curve.
Point add(const CurveParams& curve, const Point& P, const Point& Q);

/// Inverse point (x, -y).
Point negate(const CurveParams& curve, const Point& P);

/// Double-and-add; 0*P = Infinity.  Validates P once, then uses the
/// unchecked internal law.
Point scalar_mul(const CurveParams& curve, const Int& k, const Point& P);

/// Group law without the on-curve guard, for hot loops whose inputs were
/// validated at entry (rho walks, BSGS tables, scalar_mul internals).
Point add_unchecked(const CurveParams& curve, const Point& P, const Point& Q);

/// Twist by c: (p, a*c^2, b*c^3).  A quadratic twist when c is a
/// non-residue.  Throws std::invalid_argument for c = 0 mod p.
CurveParams twist(const CurveParams& curve, const Int& c);

/// Smallest quadratic non-residue mod p — the canonical twist factor.
Int smallest_qnr(const PrimeModulus& p);

/// N' = 2p + 2 - N.  Throws std::invalid_argument when N is outside the
/// Hasse interval.
Int twist_order(const PrimeModulus& p, const Int& N);

/// Membership in [p + 1 - 2*sqrt(p), p + 1 + 2*sqrt(p)].
bool in_hasse_interval(const Int& p, const Int& N);

}  // namespace ecvet
