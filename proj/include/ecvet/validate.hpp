#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecvet/curve.hpp"
#include "ecvet/ordercalc.hpp"

namespace ecvet {

enum class CheckStatus { Pass, Fail, Unknown };

/// One verification check: stable id, outcome, human-readable detail.
struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Unknown;
  std::string detail;
};

/// Pass/fail thresholds for the security suites.  Production defaults follow
/// the 2^100 work-factor floor; desk() scales them down so the same pipeline
/// logic is exercisable at test sizes.
struct SecurityThresholds {
  double rho_min_log2 = 100.0;
  double disc_min_log2 = 100.0;
  int embed_ratio_denominator = 100;
  std::vector<int> allowed_cofactors{1, 2, 4};
  int mov_degree_bound = 100;

  static SecurityThresholds production_generator();
  static SecurityThresholds production_verifier();
  /// rho floor l/2 - 5, discriminant floor min(100, l - 10).
  static SecurityThresholds desk(int bits, bool generator_profile = false);

  bool cofactor_allowed(const Int& h) const;
};

/// Evidence about the multiplicative order of p mod n (the embedding
/// degree): either the exact value or a verified lower bound.
struct EmbeddingEvidence {
  bool exact = false;
  Int value;  // exact order, or the lower bound
};

/// Squarefree-core extraction of t^2 - 4p = D*s^2.  D and s unset when the
/// factorization budget ran out.
struct CmDiscriminantResult {
  std::optional<Int> D;
  std::optional<Int> s;
  bool complete = false;
};

/// Quantities derived during validation, reported alongside the checks.
struct DerivedQuantities {
  Int t;
  double rho_log2 = 0.0;
  std::optional<EmbeddingEvidence> k;
  CmDiscriminantResult cm;

  Int twist_N;
  Int twist_t;
  std::optional<Int> twist_n;
  std::optional<Int> twist_h;
  double twist_rho_log2 = 0.0;
  std::optional<EmbeddingEvidence> k_twist;

  double joint_rho_log2 = 0.0;
  double factoring_seconds = 0.0;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  DerivedQuantities derived;

  void add(std::string id, CheckStatus status, std::string detail);
  const CheckResult* find(const std::string& id) const;
  /// Pass iff every check passed; Fail dominates Unknown.
  CheckStatus overall() const;
};

/// Optional inputs threaded through the validators.
struct ValidateOptions {
  /// Claimed fundamental discriminant (from a curve file); checked for
  /// divisibility/perfect-square consistency instead of refactoring t^2-4p.
  std::optional<Int> claimed_discriminant;
  /// Attested multiplicative orders of p (mod n / mod n'); used when n-1
  /// resists factoring, after every checkable consistency condition holds.
  std::optional<Int> claimed_embedding_degree;
  std::optional<Int> claimed_twist_embedding_degree;
  /// Pre-verified factorization of n-1 (resp. n'-1) for the embedding check.
  const PartialFactorization* n_minus_1_factors = nullptr;
  const PartialFactorization* twist_n_minus_1_factors = nullptr;
  FactorBudget budget;
  std::uint64_t sampling_seed = 1;
  FactorStats* stats = nullptr;
};

// ---- derived-quantity primitives -----------------------------------------

/// t = p + 1 - N.  Throws std::invalid_argument when N violates Hasse.
Int trace(const PrimeModulus& p, const Int& N);

/// log2(0.886 * sqrt(n)): single-instance Pollard-rho cost.
double rho_cost_log2(const Int& n);

/// log2(sqrt(pi * n) / sqrt(2r)): parallel rho on r processors.
double parallel_rho_cost_log2(const Int& n, const Int& r);

/// min(rho(n), rho(n')) — conservative joint figure for curve plus twist.
double joint_rho_log2(const Int& n, const Int& n_twist);

/// True (safe) iff N != p.
bool check_anomalous(const Int& p, const Int& N);

/// True (safe) iff t is not 0 mod p and t^2 is not in {0, p, 2p, 3p, 4p}.
bool check_supersingular(const Int& p, const Int& t);

/// True (safe) iff p^i mod n != 1 for all 1 <= i <= degree_bound.
bool check_mov(const Int& p, const Int& n, int degree_bound);

/// Embedding degree from a (possibly partial) factorization of n-1: exact
/// multiplicative order when complete, otherwise the largest verified lower
/// bound (certified prime-part stripping, floored by the MOV bound).
EmbeddingEvidence embedding_degree(const Int& p, const Int& n,
                                   const PartialFactorization& nm1_factors,
                                   int mov_degree_bound = 100);
EmbeddingEvidence embedding_degree(const Int& p, const Int& n,
                                   const FactorBudget& budget,
                                   FactorStats* stats = nullptr);

/// Factor t^2 - 4p within budget and extract D, s with t^2 - 4p = D*s^2,
/// D the fundamental discriminant.  Throws std::domain_error when t^2 >= 4p
/// (not an ordinary curve).
CmDiscriminantResult cm_discriminant(const Int& p, const Int& t,
                                     const FactorBudget& budget,
                                     FactorStats* stats = nullptr);

/// Consistency check for an externally claimed discriminant: D < 0,
/// D = 0 or 1 mod 4, D | t^2 - 4p with a positive perfect-square quotient.
bool discriminant_claim_consistent(const Int& p, const Int& t, const Int& D);

// ---- suites --------------------------------------------------------------

/// ECDLP-security suite in generation order: non-singularity, order
/// structure (N = h*n, n prime, allowed cofactor), non-anomalous,
/// non-supersingular, base point, order consistency, rho floor, embedding
/// criterion, MOV bound, CM discriminant magnitude.
ValidationReport validate_ecdlp(const DomainParams& domain,
                                const SecurityThresholds& thresholds,
                                const OrderCertificate& order_cert,
                                const ValidateOptions& options = {});

/// Twist-security suite: the same checks applied to the quadratic twist by
/// the smallest non-residue, with N' = 2p + 2 - N and a deterministically
/// sampled twist base point.
ValidationReport validate_twist(const DomainParams& domain,
                                const SecurityThresholds& thresholds,
                                const OrderCertificate& twist_order_cert,
                                const ValidateOptions& options = {});

/// Merge: ecdlp checks followed by twist checks; derived fields unioned;
/// joint rho recomputed.
ValidationReport merge_reports(const ValidationReport& ecdlp,
                               const ValidationReport& twist);

// "pass" / "fail" / "unknown", for report rendering.
const char* check_status_name(CheckStatus s);

}  // namespace ecvet
