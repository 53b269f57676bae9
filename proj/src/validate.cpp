#include "ecvet/validate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "internal_sampling.hpp"

namespace ecvet {

namespace {

const char* status_word(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "unknown";
  }
}

std::string fmt_log2(double v) {
  std::ostringstream os;
  os.precision(4);
  os << std::fixed << v;
  return os.str();
}

}  // namespace

SecurityThresholds SecurityThresholds::production_generator() {
  SecurityThresholds t;
  t.allowed_cofactors = {1};
  return t;
}

SecurityThresholds SecurityThresholds::production_verifier() {
  return SecurityThresholds{};
}

SecurityThresholds SecurityThresholds::desk(int bits, bool generator_profile) {
  SecurityThresholds t;
  t.rho_min_log2 = bits / 2.0 - 5.0;
  t.disc_min_log2 = std::min(100.0, bits - 10.0);
  if (generator_profile) t.allowed_cofactors = {1};
  return t;
}

bool SecurityThresholds::cofactor_allowed(const Int& h) const {
  for (int c : allowed_cofactors) {
    if (h == c) return true;
  }
  return false;
}

void ValidationReport::add(std::string id, CheckStatus status,
                           std::string detail) {
  checks.push_back({std::move(id), status, std::move(detail)});
}

const CheckResult* ValidationReport::find(const std::string& id) const {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

CheckStatus ValidationReport::overall() const {
  bool unknown = false;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return CheckStatus::Fail;
    if (c.status == CheckStatus::Unknown) unknown = true;
  }
  return unknown ? CheckStatus::Unknown : CheckStatus::Pass;
}

Int trace(const PrimeModulus& p, const Int& N) {
  if (!in_hasse_interval(p.value, N))
    throw std::invalid_argument("trace: N outside the Hasse interval");
  return p.value + 1 - N;
}

double rho_cost_log2(const Int& n) {
  return std::log2(0.886) + 0.5 * log2_int(n);
}

double parallel_rho_cost_log2(const Int& n, const Int& r) {
  if (r < 1) throw std::invalid_argument("parallel_rho_cost_log2: r < 1");
  return 0.5 * (std::log2(std::numbers::pi) + log2_int(n)) -
         0.5 * (1.0 + log2_int(r));
}

double joint_rho_log2(const Int& n, const Int& n_twist) {
  return std::min(rho_cost_log2(n), rho_cost_log2(n_twist));
}

bool check_anomalous(const Int& p, const Int& N) { return N != p; }

bool check_supersingular(const Int& p, const Int& t) {
  if (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) return false;
  Int t2 = t * t;
  for (int k = 0; k <= 4; ++k) {
    if (t2 == k * p) return false;
  }
  return true;
}

bool check_mov(const Int& p, const Int& n, int degree_bound) {
  Int base = p % n;
  Int pw = 1;
  for (int i = 1; i <= degree_bound; ++i) {
    pw = pw * base % n;
    if (pw == 1) return false;
  }
  return true;
}

EmbeddingEvidence embedding_degree(const Int& p, const Int& n,
                                   const PartialFactorization& nm1_factors,
                                   int mov_degree_bound) {
  if (p % n == 0)
    throw std::invalid_argument("embedding_degree: p is a multiple of n");
  Int e = n - 1;
  for (const auto& [q, mult] : nm1_factors.found) {
    for (int i = 0; i < mult; ++i) {
      if (e % q == 0 && mod_pow(p, e / q, n) == 1) e /= q;
    }
  }
  EmbeddingEvidence ev;
  if (nm1_factors.complete) {
    ev.exact = true;
    ev.value = e;
    return ev;
  }
  // Lower bound: the certified prime-part of the stripped exponent, floored
  // by the MOV sweep.
  Int certified = 1;
  for (const auto& [q, mult] : nm1_factors.found) {
    (void)mult;
    Int tmp = e;
    while (tmp % q == 0) {
      certified *= q;
      tmp /= q;
    }
  }
  ev.exact = false;
  ev.value = certified;
  if (check_mov(p, n, mov_degree_bound) && ev.value <= mov_degree_bound)
    ev.value = Int(mov_degree_bound) + 1;
  return ev;
}

EmbeddingEvidence embedding_degree(const Int& p, const Int& n,
                                   const FactorBudget& budget,
                                   FactorStats* stats) {
  PartialFactorization f = bounded_factor(n - 1, budget, 1, stats);
  return embedding_degree(p, n, f);
}

CmDiscriminantResult cm_discriminant(const Int& p, const Int& t,
                                     const FactorBudget& budget,
                                     FactorStats* stats) {
  Int M = 4 * p - t * t;
  if (M <= 0)
    throw std::domain_error("cm_discriminant: t^2 >= 4p (not an ordinary curve)");

  CmDiscriminantResult out;
  PartialFactorization f = bounded_factor(M, budget, 1, stats);
  if (!f.complete) return out;

  Int square_root = 1, core = 1;
  for (const auto& [q, e] : f.found) {
    for (int i = 0; i < e / 2; ++i) square_root *= q;
    if (e % 2 == 1) core *= q;
  }
  Int d0 = -core;  // t^2 - 4p = d0 * square_root^2, d0 squarefree
  if (((d0 % 4) + 4) % 4 == 1) {
    out.D = d0;
    out.s = square_root;
  } else {
    if (square_root % 2 != 0)
      throw std::logic_error("cm_discriminant: parity invariant violated");
    out.D = 4 * d0;
    out.s = square_root / 2;
  }
  out.complete = true;
  return out;
}

bool discriminant_claim_consistent(const Int& p, const Int& t, const Int& D) {
  if (D >= 0) return false;
  Int mod4 = ((D % 4) + 4) % 4;
  if (mod4 != 0 && mod4 != 1) return false;
  Int v = t * t - 4 * p;
  if (v % D != 0) return false;
  Int q = v / D;
  if (q <= 0) return false;
  Int r = isqrt(q);
  return r * r == q;
}

namespace {

void append_order_checks(ValidationReport& rep, const DomainParams& d,
                         const SecurityThresholds& thr) {
  const Int& p = d.curve.p.value;
  bool n_prime = is_probable_prime(d.n);
  rep.add("base-point-order-prime", n_prime ? CheckStatus::Pass : CheckStatus::Fail,
          "n " + std::string(n_prime ? "is" : "is not") + " probable prime");

  Int g;
  mpz_gcd(g.get_mpz_t(), d.h.get_mpz_t(), d.n.get_mpz_t());
  rep.add("cofactor-order-coprime",
          g == 1 ? CheckStatus::Pass : CheckStatus::Fail,
          "gcd(h, n) = " + g.get_str());

  rep.add("cofactor-allowed",
          thr.cofactor_allowed(d.h) ? CheckStatus::Pass : CheckStatus::Fail,
          "h = " + d.h.get_str());

  bool multiple = (d.n != 0) && (d.N % d.n == 0);
  rep.add("order-multiple-of-n",
          multiple ? CheckStatus::Pass : CheckStatus::Fail,
          "p + 1 - t " + std::string(multiple ? "is" : "is not") +
              " a multiple of n");

  bool h_consistent = multiple && (d.h * d.n == d.N);
  rep.add("cofactor-consistent",
          h_consistent ? CheckStatus::Pass : CheckStatus::Fail,
          "h*n " + std::string(h_consistent ? "equals" : "differs from") +
              " N");
  (void)p;
}

// Embedding row for the subgroup of order n inside a group of order
// group_order. Exact when n-1 factors completely; otherwise an attested
// order claim is accepted after every checkable consistency condition
// holds; otherwise a certified lower bound or an unknown verdict.
void embedding_row(ValidationReport& rep, const std::string& id, const Int& p,
                   const Int& n, const Int& group_order,
                   const SecurityThresholds& thr,
                   const PartialFactorization* hints,
                   const std::optional<Int>& claim, const FactorBudget& budget,
                   FactorStats* stats, std::optional<EmbeddingEvidence>& out) {
  if (p % n == 0) {
    // Anomalous-style degenerate input: p has no multiplicative order mod n.
    rep.add(id, CheckStatus::Fail, "p is a multiple of the subgroup order");
    return;
  }
  PartialFactorization f;
  if (hints != nullptr && hints->remultiply() == n - 1) {
    f = *hints;
  } else {
    f = bounded_factor(n - 1, budget, 1, stats);
  }
  EmbeddingEvidence ev = embedding_degree(p, n, f, thr.mov_degree_bound);
  Int target = group_order - 1;

  if (ev.exact) {
    out = ev;
    if (claim.has_value() && *claim != ev.value) {
      rep.add(id, CheckStatus::Fail,
              "claimed embedding degree contradicts the computed order");
      return;
    }
    bool meets = ev.value * thr.embed_ratio_denominator >= target;
    rep.add(id, meets ? CheckStatus::Pass : CheckStatus::Fail,
            "k = " + ev.value.get_str() + " (exact)");
    return;
  }

  if (claim.has_value()) {
    const Int& k = *claim;
    bool ok = k >= 1 && (n - 1) % k == 0 && mod_pow(p, k, n) == 1;
    if (ok) {
      for (const auto& [q, mult] : f.found) {
        (void)mult;
        if (k % q == 0 && mod_pow(p, k / q, n) == 1) ok = false;
      }
    }
    if (!ok) {
      rep.add(id, CheckStatus::Fail,
              "claimed embedding degree fails a consistency condition");
      return;
    }
    out = EmbeddingEvidence{false, k};
    bool meets = k * thr.embed_ratio_denominator >= target;
    rep.add(id, meets ? CheckStatus::Pass : CheckStatus::Fail,
            "k = " + k.get_str() + " (claimed value, consistency-checked)");
    return;
  }

  out = ev;
  if (ev.value * thr.embed_ratio_denominator >= target) {
    rep.add(id, CheckStatus::Pass,
            "k >= " + ev.value.get_str() + " (lower bound)");
  } else {
    rep.add(id, CheckStatus::Unknown,
            "only k >= " + ev.value.get_str() +
                " certified (factoring budget exhausted)");
  }
}

void order_certificate_row(ValidationReport& rep, const OrderCertificate& cert,
                           const std::string& id) {
  switch (cert.method) {
    case OrderMethod::Exhaustive:
      rep.add(id, cert.witnesses_ok ? CheckStatus::Pass : CheckStatus::Fail,
              "order computed exhaustively");
      return;
    case OrderMethod::Bsgs:
      rep.add(id, cert.witnesses_ok ? CheckStatus::Pass : CheckStatus::Fail,
              "order computed by baby-step giant-step");
      return;
    case OrderMethod::External:
      if (!cert.hasse_ok || !cert.witnesses_ok) {
        rep.add(id, CheckStatus::Fail,
                cert.hasse_ok ? "an order witness failed"
                              : "claimed order violates the Hasse bound");
      } else if (cert.uniqueness_ok) {
        rep.add(id, CheckStatus::Pass,
                "claimed order certified (witnesses + interval uniqueness)");
      } else {
        rep.add(id, CheckStatus::Unknown,
                "witnesses consistent; uniqueness not established");
      }
      return;
  }
}

}  // namespace

ValidationReport validate_ecdlp(const DomainParams& domain,
                                const SecurityThresholds& thresholds,
                                const OrderCertificate& order_cert,
                                const ValidateOptions& options) {
  ValidationReport rep;
  const Int& p = domain.curve.p.value;
  const Int& N = domain.N;

  Int disc = discriminant(domain.curve);
  rep.add("equation-nonsingular",
          disc != 0 ? CheckStatus::Pass : CheckStatus::Fail,
          "4a^3 + 27b^2 = " + disc.get_str() + " mod p");

  order_certificate_row(rep, order_cert, "order-certified");

  bool hasse = in_hasse_interval(p, N);
  rep.add("order-hasse", hasse ? CheckStatus::Pass : CheckStatus::Fail,
          hasse ? "N within the Hasse interval" : "N outside the Hasse interval");

  append_order_checks(rep, domain, thresholds);

  rep.add("non-anomalous",
          check_anomalous(p, N) ? CheckStatus::Pass : CheckStatus::Fail,
          check_anomalous(p, N) ? "N != p" : "N = p (additive transfer)");

  if (hasse) {
    rep.derived.t = trace(domain.curve.p, N);
    bool ss_safe = check_supersingular(p, rep.derived.t);
    rep.add("non-supersingular",
            ss_safe ? CheckStatus::Pass : CheckStatus::Fail,
            "t = " + rep.derived.t.get_str());
  } else {
    rep.add("non-supersingular", CheckStatus::Unknown,
            "trace undefined (Hasse violation)");
  }

  bool g_ok = !domain.G.is_infinity() && on_curve(domain.curve, domain.G);
  rep.add("base-point-on-curve", g_ok ? CheckStatus::Pass : CheckStatus::Fail,
          g_ok ? "G satisfies the curve equation" : "G is not on the curve");

  if (g_ok) {
    bool ord_ok = scalar_mul(domain.curve, domain.n, domain.G).is_infinity();
    rep.add("base-point-order", ord_ok ? CheckStatus::Pass : CheckStatus::Fail,
            ord_ok ? "n*G is the identity" : "n*G is not the identity");
  } else {
    rep.add("base-point-order", CheckStatus::Unknown, "no valid base point");
  }

  rep.derived.rho_log2 = rho_cost_log2(domain.n);
  bool rho_ok = rep.derived.rho_log2 >= thresholds.rho_min_log2;
  rep.add("rho-cost", rho_ok ? CheckStatus::Pass : CheckStatus::Fail,
          "log2 rho = " + fmt_log2(rep.derived.rho_log2) + " vs floor " +
              fmt_log2(thresholds.rho_min_log2));

  if (is_probable_prime(domain.n) && p % domain.n != 0) {
    embedding_row(rep, "embedding-degree", p, domain.n, domain.N, thresholds,
                  options.n_minus_1_factors, options.claimed_embedding_degree,
                  options.budget, options.stats, rep.derived.k);
    bool mov_ok = check_mov(p, domain.n, thresholds.mov_degree_bound);
    rep.add("mov-degree", mov_ok ? CheckStatus::Pass : CheckStatus::Fail,
            mov_ok ? "p^i != 1 mod n for i <= " +
                         std::to_string(thresholds.mov_degree_bound)
                   : "low-degree multiplicative transfer exists");
  } else {
    rep.add("embedding-degree", CheckStatus::Unknown,
            "requires prime n with p not a multiple of n");
    rep.add("mov-degree", CheckStatus::Unknown,
            "requires prime n with p not a multiple of n");
  }

  // CM discriminant magnitude.
  if (!hasse) {
    rep.add("cm-discriminant", CheckStatus::Unknown,
            "trace undefined (Hasse violation)");
  } else if (rep.derived.t * rep.derived.t >= 4 * p) {
    rep.add("cm-discriminant", CheckStatus::Fail, "not an ordinary curve");
  } else if (options.claimed_discriminant.has_value()) {
    const Int& D = *options.claimed_discriminant;
    if (!discriminant_claim_consistent(p, rep.derived.t, D)) {
      rep.add("cm-discriminant", CheckStatus::Fail,
              "claimed discriminant inconsistent with t^2 - 4p");
    } else {
      rep.derived.cm.D = D;
      Int q = (rep.derived.t * rep.derived.t - 4 * p) / D;
      rep.derived.cm.s = isqrt(q);
      double mag = log2_int(-D);
      bool big = mag >= thresholds.disc_min_log2;
      rep.add("cm-discriminant", big ? CheckStatus::Pass : CheckStatus::Fail,
              "log2|D| = " + fmt_log2(mag) +
                  " (claimed value, consistency-checked)");
    }
  } else {
    CmDiscriminantResult cm =
        cm_discriminant(p, rep.derived.t, options.budget, options.stats);
    rep.derived.cm = cm;
    if (!cm.complete) {
      rep.add("cm-discriminant", CheckStatus::Unknown,
              "t^2 - 4p did not factor within budget");
    } else {
      double mag = log2_int(-*cm.D);
      bool big = mag >= thresholds.disc_min_log2;
      rep.add("cm-discriminant", big ? CheckStatus::Pass : CheckStatus::Fail,
              "D = " + cm.D->get_str() + ", log2|D| = " + fmt_log2(mag));
    }
  }

  if (options.stats != nullptr)
    rep.derived.factoring_seconds = options.stats->seconds;
  return rep;
}

ValidationReport validate_twist(const DomainParams& domain,
                                const SecurityThresholds& thresholds,
                                const OrderCertificate& twist_order_cert,
                                const ValidateOptions& options) {
  ValidationReport rep;
  const Int& p = domain.curve.p.value;

  if (!in_hasse_interval(p, domain.N)) {
    rep.add("twist-order", CheckStatus::Fail,
            "N outside the Hasse interval; twist order undefined");
    return rep;
  }

  Int c = smallest_qnr(domain.curve.p);
  CurveParams tw = twist(domain.curve, c);
  Int Nt = twist_order(domain.curve.p, domain.N);
  rep.derived.twist_N = Nt;
  rep.derived.twist_t = trace(domain.curve.p, Nt);

  Int disc = discriminant(tw);
  rep.add("twist-equation-elliptic",
          disc != 0 ? CheckStatus::Pass : CheckStatus::Fail,
          "twist by c = " + c.get_str() + ", discriminant " +
              (disc != 0 ? "nonzero" : "zero"));

  order_certificate_row(rep, twist_order_cert, "twist-order-certified");

  // Twist cofactor structure: n' = largest prime factor, h' = N'/n'.
  std::optional<Int> nt, ht;
  if (is_probable_prime(Nt)) {
    nt = Nt;
    ht = 1;
  } else {
    PartialFactorization f = bounded_factor(Nt, options.budget, 1, options.stats);
    if (f.complete && !f.found.empty()) {
      nt = f.found.back().first;
      ht = Nt / *nt;
    }
  }
  rep.derived.twist_n = nt;
  rep.derived.twist_h = ht;

  if (nt.has_value()) {
    rep.add("twist-order-structure", CheckStatus::Pass,
            "N' = h'*n' with n' prime, h' = " + ht->get_str());
    rep.add("twist-cofactor-allowed",
            thresholds.cofactor_allowed(*ht) ? CheckStatus::Pass
                                             : CheckStatus::Fail,
            "h' = " + ht->get_str());
    rep.add("twist-order-not-p", *nt != p ? CheckStatus::Pass : CheckStatus::Fail,
            *nt != p ? "n' != p" : "n' = p (additive transfer on the twist)");
    Int g;
    mpz_gcd(g.get_mpz_t(), nt->get_mpz_t(), p.get_mpz_t());
    rep.add("twist-field-coprime", g == 1 ? CheckStatus::Pass : CheckStatus::Fail,
            "gcd(n', p) = " + g.get_str());
  } else {
    rep.add("twist-order-structure", CheckStatus::Unknown,
            "N' did not factor within budget");
    rep.add("twist-cofactor-allowed", CheckStatus::Unknown, "h' undetermined");
    rep.add("twist-order-not-p", CheckStatus::Unknown, "n' undetermined");
    rep.add("twist-field-coprime", CheckStatus::Unknown, "n' undetermined");
  }

  rep.add("twist-non-anomalous",
          check_anomalous(p, Nt) ? CheckStatus::Pass : CheckStatus::Fail,
          check_anomalous(p, Nt) ? "N' != p" : "N' = p");

  bool ss_safe = check_supersingular(p, rep.derived.twist_t);
  rep.add("twist-non-supersingular",
          ss_safe ? CheckStatus::Pass : CheckStatus::Fail,
          "t' = " + rep.derived.twist_t.get_str());

  // Deterministically sampled twist base point of order n'.
  if (nt.has_value()) {
    std::mt19937_64 rng(options.sampling_seed ^ 0x74776973746e6f77ull);
    bool sampled = false;
    for (int attempt = 0; attempt < 32 && !sampled; ++attempt) {
      Point P = internal::random_point(tw, rng);
      Point Gt = scalar_mul(tw, *ht, P);
      if (Gt.is_infinity()) continue;
      sampled = true;
      bool ok = scalar_mul(tw, *nt, Gt).is_infinity();
      rep.add("twist-base-point", ok ? CheckStatus::Pass : CheckStatus::Fail,
              ok ? "sampled G' has order n'"
                 : "sampled G' order does not divide n'");
    }
    if (!sampled)
      rep.add("twist-base-point", CheckStatus::Fail,
              "could not sample a point of order n'");
  } else {
    rep.add("twist-base-point", CheckStatus::Unknown, "n' undetermined");
  }

  if (nt.has_value()) {
    rep.derived.twist_rho_log2 = rho_cost_log2(*nt);
    bool rho_ok = rep.derived.twist_rho_log2 >= thresholds.rho_min_log2;
    rep.add("twist-rho-cost", rho_ok ? CheckStatus::Pass : CheckStatus::Fail,
            "log2 rho' = " + fmt_log2(rep.derived.twist_rho_log2) +
                " vs floor " + fmt_log2(thresholds.rho_min_log2));

    if (p % *nt != 0) {
      embedding_row(rep, "twist-embedding-degree", p, *nt, Nt, thresholds,
                    options.twist_n_minus_1_factors,
                    options.claimed_twist_embedding_degree, options.budget,
                    options.stats, rep.derived.k_twist);
      bool mov_ok = check_mov(p, *nt, thresholds.mov_degree_bound);
      rep.add("twist-mov-degree",
              mov_ok ? CheckStatus::Pass : CheckStatus::Fail,
              mov_ok ? "p^i != 1 mod n' for i <= " +
                           std::to_string(thresholds.mov_degree_bound)
                     : "low-degree multiplicative transfer exists");
    } else {
      rep.add("twist-embedding-degree", CheckStatus::Fail, "p divides n'");
      rep.add("twist-mov-degree", CheckStatus::Fail, "p divides n'");
    }
  } else {
    rep.add("twist-rho-cost", CheckStatus::Unknown, "n' undetermined");
    rep.add("twist-embedding-degree", CheckStatus::Unknown, "n' undetermined");
    rep.add("twist-mov-degree", CheckStatus::Unknown, "n' undetermined");
  }

  if (options.stats != nullptr)
    rep.derived.factoring_seconds = options.stats->seconds;
  return rep;
}

ValidationReport merge_reports(const ValidationReport& ecdlp,
                               const ValidationReport& twist) {
  ValidationReport out = ecdlp;
  for (const auto& c : twist.checks) out.checks.push_back(c);
  out.derived.twist_N = twist.derived.twist_N;
  out.derived.twist_t = twist.derived.twist_t;
  out.derived.twist_n = twist.derived.twist_n;
  out.derived.twist_h = twist.derived.twist_h;
  out.derived.twist_rho_log2 = twist.derived.twist_rho_log2;
  out.derived.k_twist = twist.derived.k_twist;
  if (twist.derived.twist_n.has_value()) {
    out.derived.joint_rho_log2 =
        std::min(ecdlp.derived.rho_log2, twist.derived.twist_rho_log2);
  }
  // Both suites usually share one FactorStats sink, in which case each
  // report's figure is a running total; the later (larger) one is the truth.
  out.derived.factoring_seconds = std::max(ecdlp.derived.factoring_seconds,
                                           twist.derived.factoring_seconds);
  return out;
}

const char* check_status_name(CheckStatus s) { return status_word(s); }

}  // namespace ecvet
