#include "ecvet/curve.hpp"

#include <stdexcept>

namespace ecvet {

namespace {

Int mod_inverse(const Int& v, const Int& p) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::invalid_argument("mod_inverse: not invertible");
  return r;
}

Int reduce(const Int& v, const Int& p) {
  Int r = v % p;
  if (r < 0) r += p;
  return r;
}

}  // namespace

CurveParams::CurveParams(PrimeModulus p_, Int a_, Int b_) : p(std::move(p_)) {
  if (p.value < 5)
    throw std::invalid_argument("CurveParams: field characteristic must be > 3");
  a = reduce(a_, p.value);
  b = reduce(b_, p.value);
}

Point Point::affine(Int x_, Int y_) {
  Point P;
  P.x = std::move(x_);
  P.y = std::move(y_);
  P.inf = false;
  return P;
}

bool Point::operator==(const Point& o) const {
  if (inf || o.inf) return inf == o.inf;
  return x == o.x && y == o.y;
}

Int discriminant(const CurveParams& curve) {
  const Int& p = curve.p.value;
  Int d = (4 * curve.a * curve.a % p * curve.a + 27 * curve.b * curve.b) % p;
  if (d < 0) d += p;
  return d;
}

bool on_curve(const CurveParams& curve, const Point& P) {
  if (P.inf) return true;
  const Int& p = curve.p.value;
  Int lhs = P.y * P.y % p;
  Int rhs = ((P.x * P.x % p * P.x) + curve.a * P.x + curve.b) % p;
  return reduce(lhs, p) == reduce(rhs, p);
}

Point add_unchecked(const CurveParams& curve, const Point& P, const Point& Q) {
  if (P.inf) return Q;
  if (Q.inf) return P;
  const Int& p = curve.p.value;

  if (P.x == Q.x) {
    if ((P.y + Q.y) % p == 0) return Point::infinity();
    // Tangent: lambda = (3x^2 + a) / 2y
    Int lambda = (3 * P.x * P.x + curve.a) % p * mod_inverse(2 * P.y % p, p) % p;
    Int x3 = reduce(lambda * lambda - 2 * P.x, p);
    Int y3 = reduce(lambda * (P.x - x3) - P.y, p);
    return Point::affine(x3, y3);
  }
  Int lambda = reduce(Q.y - P.y, p) * mod_inverse(reduce(Q.x - P.x, p), p) % p;
  Int x3 = reduce(lambda * lambda - P.x - Q.x, p);
  Int y3 = reduce(lambda * (P.x - x3) - P.y, p);
  return Point::affine(x3, y3);
}

Point add(const CurveParams& curve, const Point& P, const Point& Q) {
  if (discriminant(curve) == 0)
    throw std::invalid_argument("add: singular curve");
  if (!on_curve(curve, P) || !on_curve(curve, Q))
    throw std::invalid_argument("add: point not on curve");
  return add_unchecked(curve, P, Q);
}

Point negate(const CurveParams& curve, const Point& P) {
  if (P.inf) return P;
  return Point::affine(P.x, reduce(-P.y, curve.p.value));
}

Point scalar_mul(const CurveParams& curve, const Int& k, const Point& P) {
  if (k < 0) throw std::invalid_argument("scalar_mul: negative scalar");
  if (!on_curve(curve, P))
    throw std::invalid_argument("scalar_mul: point not on curve");
  if (k == 0 || P.inf) return Point::infinity();

  Point result = Point::infinity();
  Point base = P;
  std::size_t nbits = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (std::size_t i = 0; i < nbits; ++i) {
    if (mpz_tstbit(k.get_mpz_t(), i)) result = add_unchecked(curve, result, base);
    if (i + 1 < nbits) base = add_unchecked(curve, base, base);
  }
  return result;
}

CurveParams twist(const CurveParams& curve, const Int& c) {
  const Int& p = curve.p.value;
  Int cr = reduce(c, p);
  if (cr == 0) throw std::invalid_argument("twist: c must be nonzero mod p");
  Int c2 = cr * cr % p;
  return CurveParams(curve.p, curve.a * c2 % p, curve.b * c2 % p * cr % p);
}

Int smallest_qnr(const PrimeModulus& p) {
  for (Int c = 2;; ++c) {
    if (jacobi(c, p.value) == -1) return c;
  }
}

bool in_hasse_interval(const Int& p, const Int& N) {
  Int d = N - (p + 1);
  return d * d <= 4 * p;
}

Int twist_order(const PrimeModulus& p, const Int& N) {
  if (!in_hasse_interval(p.value, N))
    throw std::invalid_argument("twist_order: N outside the Hasse interval");
  return 2 * p.value + 2 - N;
}

}  // namespace ecvet
