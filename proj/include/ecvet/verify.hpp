#pragma once

#include <string>

#include "ecvet/curvefile.hpp"
#include "ecvet/ordercalc.hpp"
#include "ecvet/trust.hpp"
#include "ecvet/validate.hpp"

namespace ecvet {

// Exit-code convention: 0 safe, 1 weak, 2 unknown verdicts present,
// 3 malformed input (wrong shape, bad base point, or internally
// inconsistent declarations).
inline constexpr int kExitSafe = 0;
inline constexpr int kExitWeak = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitMalformed = 3;

struct VerifyOptions {
  FactorBudget budget;
  std::uint64_t sampling_seed = 1;
  TrustPolicy trust_policy;
  FactorStats* stats = nullptr;
};

struct VerificationOutcome {
  ValidationReport report;  // rows in verification order
  int exit_code = kExitUnknown;
  std::string verdict;      // the verdict line printed for this outcome
};

// The full verification ladder over a parameter file: shape and field
// checks, order certification, the curve-security and twist-security
// suites (with the file's attested claims and factor hints), and the
// rigidity grade from the embedded seed record. Checks run in sequence;
// the first hard failure decides the verdict, unknown verdicts are
// collected and demote the result to "unknown" at the end.
VerificationOutcome run_verification(const CurveFile& file,
                                     const SecurityThresholds& thresholds,
                                     const VerifyOptions& options = {});

// The nine-row audit matrix (field, equation, base, rho, transfer,
// discriminant, rigidity, twist, overall) distilled from a verification
// outcome.
struct AuditRow {
  std::string criterion;
  CheckStatus status;
  std::string evidence;
};
std::vector<AuditRow> full_audit(const VerificationOutcome& outcome);

}  // namespace ecvet
