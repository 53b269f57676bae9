#include "ecvet/generate.hpp"

namespace ecvet {

void validate_config(const GeneratorConfig& config) {
  if (config.bits < 16)
    throw std::invalid_argument("generator: bit size must be at least 16");
  if (config.rng == nullptr)
    throw std::invalid_argument("generator: no entropy source attached");
  switch (config.order_engine) {
    case OrderEngine::Exhaustive:
      if (config.bits >= 20)
        throw std::invalid_argument(
            "generator: exhaustive order engine is limited to fields below "
            "20 bits");
      break;
    case OrderEngine::Bsgs:
      if (config.bits > 56)
        throw std::invalid_argument(
            "generator: baby-step giant-step order engine is limited to "
            "fields of at most 56 bits");
      break;
    case OrderEngine::External:
      if (!config.order_oracle)
        throw std::invalid_argument(
            "generator: external order engine needs an order oracle");
      break;
  }
}

PrimeModulus sample_prime(int bits, EntropySource& rng, int max_draws) {
  if (bits < 16) throw std::invalid_argument("sample_prime: bits < 16");
  if (max_draws <= 0) max_draws = 64 * bits;
  Int top = Int(1) << (bits - 1);
  for (int i = 0; i < max_draws; ++i) {
    Int candidate = rng.next_bits(bits, "prime") | top;
    if (candidate % 4 == 3 && is_probable_prime(candidate))
      return PrimeModulus(candidate, bits);
  }
  throw GenerationFailure("prime-sampling",
                          "no 3-mod-4 prime found within the draw budget");
}

std::pair<Int, Int> sample_coefficients(const PrimeModulus& p,
                                        EntropySource& rng) {
  for (;;) {
    Int a = rng.next_below(p.value, "coefficient-a");
    Int b = rng.next_below(p.value, "coefficient-b");
    Int disc = (4 * a * a * a + 27 * b * b) % p.value;
    if (disc != 0) return {a, b};
  }
}

Point sample_base_point(const CurveParams& curve, EntropySource& rng,
                        int max_draws) {
  const Int& p = curve.p.value;
  if (p % 4 != 3)
    throw std::invalid_argument("sample_base_point: needs p = 3 mod 4");
  for (int i = 0; i < max_draws; ++i) {
    Int x = rng.next_below(p, "base-point");
    Int rhs = (x * x * x + curve.a * x + curve.b) % p;
    if (jacobi(rhs, p) != 1) continue;
    auto y = sqrt_mod(rhs, curve.p);
    Int sign = rng.next_bits(1, "base-point");
    Int yy = sign == 1 ? (p - *y) % p : *y;
    return Point::affine(x, yy);
  }
  throw GenerationFailure("base-point-sampling",
                          "no curve point found within the draw budget");
}

namespace {

// Engine dispatch; throws std::runtime_error when the engine cannot settle
// the order (treated by the caller as a coefficient-level restart).
Int curve_order(const GeneratorConfig& config, const CurveParams& curve) {
  switch (config.order_engine) {
    case OrderEngine::Exhaustive:
      return count_points_exhaustive(curve);
    case OrderEngine::Bsgs:
      return count_points_bsgs(curve);
    case OrderEngine::External:
      return config.order_oracle(curve);
  }
  throw std::logic_error("unreachable");
}

OrderMethod engine_method(OrderEngine e) {
  switch (e) {
    case OrderEngine::Exhaustive: return OrderMethod::Exhaustive;
    case OrderEngine::Bsgs: return OrderMethod::Bsgs;
    default: return OrderMethod::External;
  }
}

}  // namespace

GenerateResult generate(GeneratorConfig& config) {
  validate_config(config);
  EntropySource& rng = *config.rng;
  GenerateResult result;

  for (int seed_round = 0; seed_round <= config.max_seed_restarts; ++seed_round) {
    if (seed_round > 0) {
      rng.reseed();
      ++result.seed_restarts;
    }

    bool trust_failed = false;
    for (int prime_round = 0;
         prime_round < config.max_prime_retries && !trust_failed;
         ++prime_round) {
      if (prime_round > 0) ++result.prime_restarts;
      PrimeModulus p = sample_prime(config.bits, rng);

      for (int coeff_round = 0; coeff_round < config.max_coefficient_retries;
           ++coeff_round) {
        if (coeff_round > 0) ++result.coefficient_restarts;
        auto [a, b] = sample_coefficients(p, rng);
        CurveParams curve{p, a, b};

        Int N;
        try {
          N = curve_order(config, curve);
        } catch (const std::runtime_error&) {
          continue;  // order engine could not settle this curve
        }
        // The generator insists on prime order (cofactor 1); composite
        // orders are treated like any other curve-security failure.
        if (!is_probable_prime(N)) continue;
        if (!in_hasse_interval(p.value, N)) continue;

        Point G = sample_base_point(curve, rng);
        DomainParams domain{curve, G, N, N, 1};

        OrderCertificate cert =
            config.order_engine == OrderEngine::External
                ? certify_order(curve, N)
                : certificate_from_count(curve, N,
                                         engine_method(config.order_engine));
        if (!cert.certified()) continue;

        ValidateOptions opts;
        ValidationReport ecdlp =
            validate_ecdlp(domain, config.thresholds, cert, opts);
        if (ecdlp.overall() != CheckStatus::Pass) {
          const CheckResult* bp = ecdlp.find("base-point-order");
          if (bp != nullptr && bp->status == CheckStatus::Fail) {
            // Only the base point is bad: redraw it without burning the curve.
            bool fixed = false;
            for (int g_round = 0; g_round < 64 && !fixed; ++g_round) {
              domain.G = sample_base_point(curve, rng);
              ecdlp = validate_ecdlp(domain, config.thresholds, cert, opts);
              fixed = ecdlp.overall() == CheckStatus::Pass;
            }
            if (!fixed) continue;
          } else {
            continue;
          }
        }

        Int Nt = twist_order(p, N);
        OrderCertificate twist_cert = certify_order(twist(curve, smallest_qnr(p)), Nt);
        ValidationReport tw =
            validate_twist(domain, config.thresholds, twist_cert, opts);
        if (tw.overall() != CheckStatus::Pass) break;  // resample the prime

        TrustReport trust;
        trust.t1 = check_t1(rng.provenance(), config.trust_policy);
        trust.t2 = check_t2(curve, config.trust_policy);
        trust.t3.status = CheckStatus::Unknown;
        trust.t3.detail =
            "strength-reproducibility is an ensemble property; run the "
            "trial harness";
        if (trust.t1.status != CheckStatus::Pass ||
            trust.t2.status != CheckStatus::Pass) {
          trust_failed = true;  // restart from a fresh seed
          break;
        }

        result.domain = domain;
        result.seed = rng.provenance();
        result.validation = merge_reports(ecdlp, tw);
        result.trust = trust;
        result.order_cert = cert;
        result.twist_order_cert = twist_cert;
        return result;
      }
    }
  }
  throw GenerationFailure("restart-budget",
                          "generation budgets exhausted without a passing curve");
}

}  // namespace ecvet
