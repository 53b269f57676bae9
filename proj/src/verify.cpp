#include "ecvet/verify.hpp"

#include <algorithm>
#include <map>

namespace ecvet {

namespace {

// Rows whose failure means the input does not describe the object it
// claims to (wrong shape, wrong point, impossible or inconsistent
// declarations) rather than describing a weak curve.
bool malformed_class(const std::string& id) {
  return id == "curve-shape" || id == "order-declarations" ||
         id == "order-certified" || id == "order-hasse" ||
         id == "factor-hints" || id == "cofactor-consistent" ||
         id == "base-point-on-curve" || id == "base-point-order" ||
         id == "twist-order-declared";
}

std::string verdict_for(const std::string& id) {
  if (id == "curve-shape") return "Not Short Weierstrass elliptic curve";
  if (id == "base-point-on-curve" || id == "base-point-order")
    return "Incorrect base point";
  if (malformed_class(id)) return "Inconsistent parameter declarations";
  return "Weak elliptic curve";
}

void decide(VerificationOutcome& out) {
  for (const auto& row : out.report.checks) {
    if (row.status == CheckStatus::Fail) {
      out.exit_code = malformed_class(row.id) ? kExitMalformed : kExitWeak;
      out.verdict = verdict_for(row.id);
      return;
    }
  }
  for (const auto& row : out.report.checks) {
    if (row.status == CheckStatus::Unknown) {
      out.exit_code = kExitUnknown;
      out.verdict = "Verification incomplete: unknown verdicts remain";
      return;
    }
  }
  out.exit_code = kExitSafe;
  out.verdict = "Cryptographically safe elliptic curve";
}

// Sound use of a declared factor list: every entry must be probable prime
// and the product must divide the target. A prime leftover cofactor is
// folded in; a composite leftover stays as the unfactored part.
std::optional<PartialFactorization> hint_factorization(
    const Int& target, const std::vector<Int>& primes) {
  PartialFactorization f;
  f.target = target;
  Int product = 1;
  std::map<Int, int> counts;
  for (const Int& q : primes) {
    if (q < 2 || !is_probable_prime(q)) return std::nullopt;
    ++counts[q];
    product *= q;
  }
  if (target < 2 || target % product != 0) return std::nullopt;
  Int cofactor = target / product;
  if (cofactor > 1 && is_probable_prime(cofactor)) {
    ++counts[cofactor];
    cofactor = 1;
  }
  for (const auto& [q, e] : counts) f.found.emplace_back(q, e);
  f.cofactor = cofactor;
  f.complete = cofactor == 1;
  return f;
}

CheckResult rigidity_row(const std::optional<SeedRecord>& seed,
                         const TrustPolicy& policy) {
  if (!seed.has_value())
    return {"rigidity", CheckStatus::Unknown, "no seed record"};
  T1Result t1 = check_t1(*seed, policy);
  if (t1.status != CheckStatus::Pass)
    return {"rigidity", CheckStatus::Fail, t1.evidence};
  return {"rigidity", CheckStatus::Pass,
          t1.rigidity == Rigidity::Full
              ? "fully rigid (committed transcript)"
              : "somewhat rigid (attested transcript)"};
}

}  // namespace

VerificationOutcome run_verification(const CurveFile& file,
                                     const SecurityThresholds& thresholds,
                                     const VerifyOptions& options) {
  VerificationOutcome out;
  ValidationReport& rep = out.report;

  // Shape: odd field of characteristic > 3, reduced coefficients, nonzero
  // discriminant.
  bool shape_ok = file.p >= 5 && mpz_odd_p(file.p.get_mpz_t()) &&
                  file.a >= 0 && file.a < file.p && file.b >= 0 &&
                  file.b < file.p;
  if (shape_ok) {
    Int disc = (4 * file.a * file.a * file.a + 27 * file.b * file.b) % file.p;
    shape_ok = disc != 0;
  }
  rep.add("curve-shape", shape_ok ? CheckStatus::Pass : CheckStatus::Fail,
          shape_ok ? "y^2 = x^3 + ax + b over an odd field, discriminant nonzero"
                   : "not a Short Weierstrass curve over an odd field");
  if (!shape_ok) {
    decide(out);
    return out;
  }

  bool p_prime = is_probable_prime(file.p);
  rep.add("field-prime", p_prime ? CheckStatus::Pass : CheckStatus::Fail,
          p_prime ? "p is probable prime" : "p is composite");
  if (!p_prime) {
    decide(out);
    return out;
  }

  CurveParams curve(PrimeModulus::checked(file.p), file.a, file.b);
  bool g_in_field = file.Gx >= 0 && file.Gx < file.p && file.Gy >= 0 &&
                    file.Gy < file.p;
  // Out-of-range coordinates are treated as "no valid point" rather than
  // reduced silently; the base-point rows then fail with honest evidence.
  Point G = g_in_field ? Point::affine(file.Gx, file.Gy) : Point::infinity();

  if (!file.N || !file.n || !file.h) {
    // Parameters published without their orders: everything order-dependent
    // stays unknown, the point and seed record are still checkable.
    rep.add("order-certified", CheckStatus::Unknown, "no declared order");
    bool g_on = g_in_field && on_curve(curve, G);
    rep.add("base-point-on-curve", g_on ? CheckStatus::Pass : CheckStatus::Fail,
            g_on ? "G satisfies the curve equation" : "G is not on the curve");
    rep.add("cm-discriminant", CheckStatus::Unknown, "no declared order");
    rep.add("rho-cost", CheckStatus::Unknown, "no declared order");
    rep.checks.push_back(rigidity_row(file.seed, options.trust_policy));
    decide(out);
    return out;
  }

  if (*file.n < 1 || *file.h < 0 || *file.N < 0) {
    rep.add("order-declarations", CheckStatus::Fail,
            "declared N/n/h outside meaningful ranges");
    decide(out);
    return out;
  }

  DomainParams domain{curve, G, *file.N, *file.n, *file.h};
  bool hasse = in_hasse_interval(file.p, *file.N);

  OrderCertificate cert;
  OrderCertificate twist_cert;
  ValidateOptions vopts;
  vopts.claimed_discriminant = file.cm_discriminant;
  vopts.claimed_embedding_degree = file.embedding_degree;
  vopts.claimed_twist_embedding_degree = file.twist_embedding_degree;
  vopts.budget = options.budget;
  vopts.sampling_seed = options.sampling_seed;
  vopts.stats = options.stats;

  bool hints_given =
      !file.n_minus_1_factors.empty() || !file.twist_n_minus_1_factors.empty();
  bool hints_bad = false;
  std::optional<PartialFactorization> nf, tf;

  if (hasse) {
    cert = certify_order(curve, *file.N);
    Int Nt = twist_order(curve.p, *file.N);
    twist_cert = certify_order(twist(curve, smallest_qnr(curve.p)), Nt);

    if (!file.n_minus_1_factors.empty()) {
      nf = hint_factorization(*file.n - 1, file.n_minus_1_factors);
      if (nf)
        vopts.n_minus_1_factors = &*nf;
      else
        hints_bad = true;
    }
    // Twist factor hints describe n' - 1; they are only checkable up front
    // when the twist order is itself the prime subgroup order.
    if (!file.twist_n_minus_1_factors.empty() && is_probable_prime(Nt)) {
      tf = hint_factorization(Nt - 1, file.twist_n_minus_1_factors);
      if (tf)
        vopts.twist_n_minus_1_factors = &*tf;
      else
        hints_bad = true;
    }
  } else {
    // Impossible declared order: skip the arithmetic, report the reason.
    cert.N = *file.N;
    cert.method = OrderMethod::External;
  }

  ValidationReport ecdlp = validate_ecdlp(domain, thresholds, cert, vopts);
  ValidationReport tw = validate_twist(domain, thresholds, twist_cert, vopts);
  ValidationReport merged = merge_reports(ecdlp, tw);
  rep.derived = merged.derived;

  auto pick = [&](const char* id) {
    const CheckResult* row = merged.find(id);
    if (row != nullptr) rep.checks.push_back(*row);
  };

  // Verification ladder: each id names what the row establishes; the first
  // failure in this sequence decides the verdict.
  pick("order-certified");
  pick("order-hasse");
  if (hints_given) {
    rep.add("factor-hints", hints_bad ? CheckStatus::Fail : CheckStatus::Pass,
            hints_bad ? "a declared factor list is unsound (non-prime entry "
                        "or product not dividing its target)"
                      : "declared factor lists re-verified");
  }
  pick("cm-discriminant");
  pick("base-point-order-prime");
  pick("cofactor-order-coprime");
  pick("base-point-on-curve");
  pick("base-point-order");
  pick("cofactor-allowed");
  pick("order-multiple-of-n");
  pick("cofactor-consistent");
  pick("embedding-degree");
  pick("mov-degree");

  if (file.twist_N.has_value()) {
    bool match = hasse && *file.twist_N == twist_order(curve.p, *file.N);
    rep.add("twist-order-declared",
            match ? CheckStatus::Pass : CheckStatus::Fail,
            match ? "declared twist order equals 2p + 2 - N"
                  : "declared twist order contradicts 2p + 2 - N");
  }
  pick("twist-order-not-p");
  pick("twist-equation-elliptic");
  if (hasse) {
    rep.add("twist-shape", CheckStatus::Pass,
            "the quadratic twist is Short Weierstrass by construction");
  }
  pick("twist-order-certified");
  pick("twist-order-structure");
  pick("twist-cofactor-allowed");
  pick("twist-field-coprime");
  pick("rho-cost");
  rep.checks.push_back(rigidity_row(file.seed, options.trust_policy));
  pick("twist-rho-cost");

  if (rep.derived.twist_n.has_value()) {
    bool ok = rep.derived.joint_rho_log2 >= thresholds.rho_min_log2;
    rep.add("joint-rho", ok ? CheckStatus::Pass : CheckStatus::Fail,
            "min of curve and twist rho costs = " +
                std::to_string(rep.derived.joint_rho_log2));
  } else {
    rep.add("joint-rho", CheckStatus::Unknown, "twist subgroup undetermined");
  }

  // Beyond the published ladder, still verdict-driving.
  pick("non-anomalous");
  pick("non-supersingular");
  pick("twist-non-anomalous");
  pick("twist-non-supersingular");
  pick("twist-base-point");
  pick("twist-embedding-degree");
  pick("twist-mov-degree");

  decide(out);
  return out;
}

std::vector<AuditRow> full_audit(const VerificationOutcome& outcome) {
  const std::vector<std::pair<const char*, std::vector<const char*>>> layout = {
      {"safeField", {"curve-shape", "field-prime"}},
      {"safeEquation", {"curve-shape"}},
      {"safeBase",
       {"base-point-on-curve", "base-point-order", "base-point-order-prime",
        "cofactor-allowed", "cofactor-consistent", "cofactor-order-coprime",
        "order-multiple-of-n", "order-certified", "order-hasse",
        "order-declarations"}},
      {"safeRho", {"rho-cost"}},
      {"safeTransfer",
       {"non-anomalous", "non-supersingular", "mov-degree",
        "embedding-degree"}},
      {"safeDiscriminant", {"cm-discriminant"}},
      {"safeRigid", {"rigidity"}},
      {"safeTwist",
       {"twist-order-declared", "twist-order-not-p", "twist-equation-elliptic",
        "twist-shape", "twist-order-certified", "twist-order-structure",
        "twist-cofactor-allowed", "twist-field-coprime", "twist-rho-cost",
        "twist-non-anomalous", "twist-non-supersingular", "twist-base-point",
        "twist-embedding-degree", "twist-mov-degree", "joint-rho"}},
  };

  std::vector<AuditRow> rows;
  CheckStatus overall = CheckStatus::Pass;
  for (const auto& [criterion, ids] : layout) {
    CheckStatus status = CheckStatus::Pass;
    std::string evidence = "all supporting checks pass";
    bool any = false;
    for (const char* id : ids) {
      const CheckResult* row = outcome.report.find(id);
      if (row == nullptr) continue;
      any = true;
      if (row->status == CheckStatus::Fail) {
        status = CheckStatus::Fail;
        evidence = row->id + ": " + row->detail;
        break;
      }
      if (row->status == CheckStatus::Unknown && status == CheckStatus::Pass) {
        status = CheckStatus::Unknown;
        evidence = row->id + ": " + row->detail;
      }
    }
    if (!any) {
      status = CheckStatus::Unknown;
      evidence = "not evaluated";
    }
    if (status == CheckStatus::Fail)
      overall = CheckStatus::Fail;
    else if (status == CheckStatus::Unknown && overall == CheckStatus::Pass)
      overall = CheckStatus::Unknown;
    rows.push_back({criterion, status, evidence});
  }
  rows.push_back({"safeCurve", overall,
                  overall == CheckStatus::Pass ? "all criteria met"
                                               : "blocked by the rows above"});
  return rows;
}

}  // namespace ecvet
