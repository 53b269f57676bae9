#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecvet/curve.hpp"
#include "ecvet/entropy.hpp"
#include "ecvet/validate.hpp"

namespace ecvet {

struct GeneratorConfig;  // generate.hpp

// How much of the seed story the record actually proves.
enum class Rigidity {
  Full,      // every purpose present with a concrete commitment
  Attested,  // every purpose present; some commitments declared but unknown
  Partial,   // purposes missing from the transcript
  None,      // no usable record
};

struct TrustPolicy {
  std::vector<std::string> allowed_sources = {"/dev/random", "/dev/urandom",
                                              "test-drbg"};
  long min_seed_bits = 256;
  int naf_weight_max = 6;
  std::vector<std::string> required_purposes = {"prime", "coefficient-a",
                                                "coefficient-b", "base-point"};
  // Empty means: use the built-in constant table (pi, e, sqrt2, cos1,
  // golden-ratio). Entries are (name, leading mantissa bits as hex).
  std::vector<std::pair<std::string, std::string>> blacklist;
};

struct T1Result {
  CheckStatus status = CheckStatus::Unknown;
  Rigidity rigidity = Rigidity::None;
  std::string evidence;
};

struct T2Result {
  CheckStatus status = CheckStatus::Unknown;
  std::vector<std::string> triggered_screens;
};

struct T3Result {
  CheckStatus status = CheckStatus::Unknown;  // Unknown = not run
  std::vector<double> rho_values;
  std::vector<double> twist_rho_values;
  double spread_log2 = 0.0;
  std::string detail;
};

struct TrustReport {
  T1Result t1;
  T2Result t2;
  T3Result t3;
  bool trusted() const {
    return t1.status == CheckStatus::Pass && t2.status == CheckStatus::Pass &&
           t3.status == CheckStatus::Pass;
  }
};

// Number of nonzero digits in the non-adjacent form of n. Pseudo-Mersenne
// primes like 2^255 - 19 have tiny weight; random primes land near bits/3.
int naf_weight(const Int& n);

// Built-in famous-constant table: 512 leading mantissa bits each.
const std::vector<std::pair<std::string, std::string>>& default_blacklist();

// True when v at its own bit length matches the leading bits of the constant
// (exactly or off by one, to absorb truncation vs rounding).
bool matches_constant(const Int& v, const std::string& mantissa_hex);

// T1: provenance. Source must be allowed, seed long enough, transcript
// covering every required purpose.
T1Result check_t1(const SeedRecord& record, const TrustPolicy& policy = {});

// T2: pre-studied-value screens on (p, a, b). Passes iff no screen fires.
T2Result check_t2(const CurveParams& params, const TrustPolicy& policy = {});

// T3: strength reproducibility. Runs the generator `trials` times with fresh
// seeds and bounds the spread of the rho costs.
T3Result check_t3(GeneratorConfig& config, int trials,
                  double tolerance_log2 = 0.5);

}  // namespace ecvet
