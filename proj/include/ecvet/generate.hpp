#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "ecvet/curve.hpp"
#include "ecvet/entropy.hpp"
#include "ecvet/ordercalc.hpp"
#include "ecvet/trust.hpp"
#include "ecvet/validate.hpp"

namespace ecvet {

enum class OrderEngine { Exhaustive, Bsgs, External };

struct GeneratorConfig {
  int bits = 40;
  SecurityThresholds thresholds = SecurityThresholds::desk(40, true);
  OrderEngine order_engine = OrderEngine::Bsgs;
  int max_coefficient_retries = 4000;
  int max_prime_retries = 400;
  int max_seed_restarts = 8;
  EntropySource* rng = nullptr;
  // Order oracle for the External engine (point counting above the
  // baby-step giant-step range is out of scope for the built-in engines).
  std::function<Int(const CurveParams&)> order_oracle;
  TrustPolicy trust_policy;
};

struct GenerateResult {
  DomainParams domain;
  SeedRecord seed;
  ValidationReport validation;
  TrustReport trust;
  OrderCertificate order_cert;
  OrderCertificate twist_order_cert;
  int prime_restarts = 0;
  int coefficient_restarts = 0;
  int seed_restarts = 0;
};

class GenerationFailure : public std::runtime_error {
 public:
  GenerationFailure(std::string stage, const std::string& what)
      : std::runtime_error(what), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// Throws std::invalid_argument when bit size and engine do not line up
// (Exhaustive needs bits < 20, Bsgs needs bits <= 56, External needs an
// oracle) or bits < 16 or no entropy source is attached.
void validate_config(const GeneratorConfig& config);

// l-bit probable prime with the top bit forced and p = 3 mod 4; candidates
// are drawn first and then tested for the residue form.
PrimeModulus sample_prime(int bits, EntropySource& rng, int max_draws = 0);

// Uniform (a, b) in [0, p)^2 from independently keyed streams, resampled
// while the discriminant vanishes.
std::pair<Int, Int> sample_coefficients(const PrimeModulus& p,
                                        EntropySource& rng);

// Uniform curve point: draw x until x^3 + ax + b is a quadratic residue,
// then pick the root by one further random bit. Requires p = 3 mod 4.
Point sample_base_point(const CurveParams& curve, EntropySource& rng,
                        int max_draws = 20000);

// The full pipeline with its restart ladder: a failed curve-security check
// resamples the coefficients, a failed twist check resamples the prime, a
// failed trust check restarts from a fresh seed.
GenerateResult generate(GeneratorConfig& config);

}  // namespace ecvet
