#include "ecvet/trust.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ecvet/generate.hpp"

namespace ecvet {

int naf_weight(const Int& n) {
  Int v = n < 0 ? Int(-n) : n;
  int weight = 0;
  while (v > 0) {
    if (mpz_odd_p(v.get_mpz_t())) {
      long r = mpz_fdiv_ui(v.get_mpz_t(), 4);
      long d = 2 - r;  // +1 or -1
      v -= d;
      ++weight;
    }
    v >>= 1;
  }
  return weight;
}

const std::vector<std::pair<std::string, std::string>>& default_blacklist() {
  // 512 leading mantissa bits of each constant, most significant bit first.
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"pi",
       "c90fdaa22168c234c4c6628b80dc1cd129024e088a67cc74020bbea63b139b22"
       "514a08798e3404ddef9519b3cd3a431b302b0a6df25f14374fe1356d6d51c245"},
      {"e",
       "adf85458a2bb4a9aafdc5620273d3cf1d8b9c583ce2d3695a9e13641146433fb"
       "cc939dce249b3ef97d2fe363630c75d8f681b202aec4617ad3df1ed5d5fd6561"},
      {"sqrt2",
       "b504f333f9de6484597d89b3754abe9f1d6f60ba893ba84ced17ac8583339915"
       "4afc83043ab8a2c3a8b1fe6fdc83db390f74a85e439c7b4a780487363dfa2768"},
      {"cos1",
       "8a51407da8345c91c2466d976871bd29a2373a894f96c3b7f2300240b760e6fa"
       "96a94430a52d0e9e43f3450e3b8ff99bc9344041db8202049606fa2352b46375"},
      {"golden-ratio",
       "cf1bbcdcbfa53e0af9ce60302e76e41a084113b5f9d13928fc363508e860c74a"
       "93b3f858a9e93dbf81a3822dadf8c13f80c437849420180160eb25d20799af1b"},
  };
  return table;
}

bool matches_constant(const Int& v, const std::string& mantissa_hex) {
  if (v <= 0) return false;
  Int mantissa(mantissa_hex, 16);
  int have = bit_length(mantissa);
  int want = bit_length(v);
  if (want < 8 || want > have) return false;
  Int w = mantissa >> (have - want);
  return v == w || v == w + 1 || v + 1 == w;
}

T1Result check_t1(const SeedRecord& record, const TrustPolicy& policy) {
  T1Result out;
  if (record.source_id.empty()) {
    out.rigidity = Rigidity::None;
    out.status = CheckStatus::Fail;
    out.evidence = "no seed record";
    return out;
  }

  std::vector<std::string> problems;
  if (std::find(policy.allowed_sources.begin(), policy.allowed_sources.end(),
                record.source_id) == policy.allowed_sources.end())
    problems.push_back("source '" + record.source_id + "' is not on the allowed list");
  if (record.seed_length_bits < policy.min_seed_bits)
    problems.push_back("seed length " + std::to_string(record.seed_length_bits) +
                       " below the " + std::to_string(policy.min_seed_bits) +
                       "-bit minimum");

  bool all_purposes = true;
  bool all_committed = true;
  for (const auto& purpose : policy.required_purposes) {
    if (!record.has_purpose(purpose)) {
      all_purposes = false;
      problems.push_back("transcript lacks a '" + purpose + "' entry");
    }
  }
  for (const auto& e : record.transcript) {
    if (e.commitment.empty() || e.commitment == "?") all_committed = false;
  }

  out.rigidity = !all_purposes ? Rigidity::Partial
                 : all_committed ? Rigidity::Full
                                 : Rigidity::Attested;
  if (problems.empty()) {
    out.status = CheckStatus::Pass;
    out.evidence = out.rigidity == Rigidity::Full
                       ? "allowed source, committed transcript"
                       : "allowed source, transcript coverage attested";
  } else {
    out.status = CheckStatus::Fail;
    std::ostringstream os;
    for (size_t i = 0; i < problems.size(); ++i)
      os << (i ? "; " : "") << problems[i];
    out.evidence = os.str();
  }
  return out;
}

T2Result check_t2(const CurveParams& params, const TrustPolicy& policy) {
  T2Result out;
  const Int& p = params.p.value;

  if ((params.a + 3) % p == 0)
    out.triggered_screens.push_back("a-is-minus-3");
  if (naf_weight(p) <= policy.naf_weight_max)
    out.triggered_screens.push_back("special-prime-form");

  const auto& table = policy.blacklist.empty() ? default_blacklist() : policy.blacklist;
  const std::pair<const char*, const Int*> targets[] = {
      {"p", &p}, {"a", &params.a}, {"b", &params.b}};
  for (const auto& [constant, mantissa] : table) {
    for (const auto& [label, value] : targets) {
      if (matches_constant(*value, mantissa))
        out.triggered_screens.push_back("known-constant:" + constant + ":" + label);
    }
  }

  out.status = out.triggered_screens.empty() ? CheckStatus::Pass : CheckStatus::Fail;
  return out;
}

T3Result check_t3(GeneratorConfig& config, int trials, double tolerance_log2) {
  if (trials < 2)
    throw std::invalid_argument("check_t3: at least two trials required");
  validate_config(config);

  T3Result out;
  for (int i = 0; i < trials; ++i) {
    if (i > 0) config.rng->reseed();
    GenerateResult r;
    try {
      r = generate(config);
    } catch (const GenerationFailure& gf) {
      out.status = CheckStatus::Unknown;
      out.detail = std::string("trial ") + std::to_string(i) +
                   " did not finish: " + gf.what();
      return out;
    }
    out.rho_values.push_back(r.validation.derived.rho_log2);
    out.twist_rho_values.push_back(r.validation.derived.twist_rho_log2);
  }

  auto [lo, hi] = std::minmax_element(out.rho_values.begin(), out.rho_values.end());
  auto [tlo, thi] =
      std::minmax_element(out.twist_rho_values.begin(), out.twist_rho_values.end());
  out.spread_log2 = std::max(*hi - *lo, *thi - *tlo);

  double floor = config.thresholds.rho_min_log2;
  bool all_strong = *lo >= floor && *tlo >= floor;
  bool tight = out.spread_log2 <= tolerance_log2;
  out.status = (all_strong && tight) ? CheckStatus::Pass : CheckStatus::Fail;
  std::ostringstream os;
  os.precision(4);
  os << std::fixed << "spread " << out.spread_log2 << " vs tolerance "
     << tolerance_log2 << ", weakest " << std::min(*lo, *tlo) << " vs floor "
     << floor;
  out.detail = os.str();
  return out;
}

}  // namespace ecvet
