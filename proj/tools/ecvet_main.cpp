// ecvet: generate, verify, and audit Short Weierstrass curve parameters.
//
// Exit codes across all subcommands: 0 success/safe, 1 weak curve or
// generation failure, 2 verification left unknown verdicts, 3 malformed
// input (bad flags, unparseable file, wrong curve shape or base point).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include "ecvet/curvefile.hpp"
#include "ecvet/ecdsa.hpp"
#include "ecvet/generate.hpp"
#include "ecvet/registry.hpp"
#include "ecvet/rholab.hpp"
#include "ecvet/verify.hpp"

using nlohmann::ordered_json;
using namespace ecvet;

namespace {

// Inputs name either a file on disk or a built-in registry curve.
CurveFile load_input(const std::string& arg) {
  if (std::filesystem::exists(arg)) return load_curve_file(arg);
  try {
    return registry_get(arg).file;
  } catch (const std::out_of_range&) {
    throw CurveFileError(arg + ": no such file or registry curve");
  }
}

SecurityThresholds thresholds_for(const std::string& profile, int bits,
                                  bool generator) {
  if (profile == "desk") return SecurityThresholds::desk(bits, generator);
  return generator ? SecurityThresholds::production_generator()
                   : SecurityThresholds::production_verifier();
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << v;
  return os.str();
}

void print_checks(std::ostream& os, const std::vector<CheckResult>& checks) {
  std::size_t w = 0;
  for (const auto& c : checks) w = std::max(w, c.id.size());
  for (const auto& c : checks) {
    os << "  " << std::left << std::setw(static_cast<int>(w) + 2) << c.id
       << std::setw(9) << check_status_name(c.status) << c.detail << "\n";
  }
}

void print_derived(std::ostream& os, const DerivedQuantities& d) {
  os << "derived quantities:\n";
  os << "  trace t              = " << d.t.get_str() << "\n";
  os << "  rho cost (log2)      = " << fmt(d.rho_log2) << "\n";
  if (d.k) {
    os << "  embedding degree     " << (d.k->exact ? "= " : ">= ")
       << d.k->value.get_str() << "\n";
  }
  if (d.cm.D) {
    os << "  cm discriminant D    = " << d.cm.D->get_str() << "\n";
  }
  if (d.twist_N != 0) {
    os << "  twist order N'       = " << d.twist_N.get_str() << "\n";
    os << "  twist trace t'       = " << d.twist_t.get_str() << "\n";
    if (d.twist_n)
      os << "  twist subgroup n'    = " << d.twist_n->get_str() << "\n";
    if (d.twist_h)
      os << "  twist cofactor h'    = " << d.twist_h->get_str() << "\n";
    os << "  twist rho (log2)     = " << fmt(d.twist_rho_log2) << "\n";
    os << "  joint rho (log2)     = " << fmt(d.joint_rho_log2) << "\n";
  }
  os << "  factoring time (s)   = " << fmt(d.factoring_seconds) << "\n";
}

ordered_json derived_json(const DerivedQuantities& d) {
  ordered_json j;
  j["trace"] = d.t.get_str();
  j["rho_log2"] = d.rho_log2;
  if (d.k) {
    j["embedding_degree"] = {{"exact", d.k->exact},
                             {"value", d.k->value.get_str()}};
  }
  if (d.cm.D) {
    j["cm_discriminant"] = d.cm.D->get_str();
    if (d.cm.s) j["cm_square_part"] = d.cm.s->get_str();
  }
  if (d.twist_N != 0) {
    j["twist_order"] = d.twist_N.get_str();
    j["twist_trace"] = d.twist_t.get_str();
    if (d.twist_n) j["twist_subgroup_order"] = d.twist_n->get_str();
    if (d.twist_h) j["twist_cofactor"] = d.twist_h->get_str();
    j["twist_rho_log2"] = d.twist_rho_log2;
    j["joint_rho_log2"] = d.joint_rho_log2;
  }
  j["factoring_seconds"] = d.factoring_seconds;
  return j;
}

ordered_json checks_json(const std::vector<CheckResult>& checks) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    arr.push_back({{"id", c.id},
                   {"status", check_status_name(c.status)},
                   {"detail", c.detail}});
  }
  return arr;
}

CurveFile result_to_file(const GenerateResult& res, int bits) {
  CurveFile f;
  std::string tag = res.seed.seed_commitment.substr(
      0, std::min<std::size_t>(12, res.seed.seed_commitment.size()));
  f.name = "gen" + std::to_string(bits) + "-" + tag;
  f.p = res.domain.curve.p.value;
  f.a = res.domain.curve.a;
  f.b = res.domain.curve.b;
  f.N = res.domain.N;
  f.n = res.domain.n;
  f.h = res.domain.h;
  f.Gx = res.domain.G.x;
  f.Gy = res.domain.G.y;
  f.twist_N = twist_order(res.domain.curve.p, res.domain.N);
  f.seed = res.seed;
  return f;
}

int cmd_generate(int bits, const std::string& engine,
                 const std::string& profile, const std::string& seed_source,
                 const std::string& seed, bool seed_given,
                 const std::string& out, bool json) {
  GeneratorConfig cfg;
  cfg.bits = bits;
  cfg.thresholds = thresholds_for(profile, bits, true);
  cfg.order_engine = engine == "exhaustive" ? OrderEngine::Exhaustive
                     : engine == "bsgs"     ? OrderEngine::Bsgs
                                            : OrderEngine::External;
  std::unique_ptr<EntropySource> rng;
  if (seed_given || seed_source == "test")
    rng = std::make_unique<TestEntropySource>(seed);
  else
    rng = std::make_unique<SystemEntropySource>();
  cfg.rng = rng.get();
  validate_config(cfg);  // bad flag combinations end here (exit 3)

  GenerateResult res = generate(cfg);
  CurveFile f = result_to_file(res, bits);
  if (!out.empty()) save_curve_file(f, out);

  if (json) {
    ordered_json j;
    j["name"] = f.name;
    j["file"] = out.empty() ? ordered_json() : ordered_json(out);
    j["checks"] = checks_json(res.validation.checks);
    j["derived"] = derived_json(res.validation.derived);
    j["trust"] = {
        {"provenance", check_status_name(res.trust.t1.status)},
        {"screens", check_status_name(res.trust.t2.status)},
    };
    j["restarts"] = {{"seed", res.seed_restarts},
                     {"prime", res.prime_restarts},
                     {"coefficient", res.coefficient_restarts}};
    if (out.empty()) j["curve"] = serialize_curve_file(f);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (out.empty()) {
    std::cout << serialize_curve_file(f);
  } else {
    std::cout << "wrote " << out << "\n";
  }
  std::cout << "# " << f.name << ": " << res.validation.checks.size()
            << " checks pass, rho log2 "
            << fmt(res.validation.derived.rho_log2) << ", twist rho log2 "
            << fmt(res.validation.derived.twist_rho_log2) << ", restarts s/p/c "
            << res.seed_restarts << "/" << res.prime_restarts << "/"
            << res.coefficient_restarts << "\n";
  return 0;
}

int cmd_verify(const std::string& input, const std::string& profile,
               double rho_min, bool rho_min_set, double disc_min,
               bool disc_min_set, std::uint64_t budget_batches,
               std::uint64_t sampling_seed, bool json) {
  CurveFile f = load_input(input);
  SecurityThresholds thr = thresholds_for(profile, bit_length(f.p), false);
  if (rho_min_set) thr.rho_min_log2 = rho_min;
  if (disc_min_set) thr.disc_min_log2 = disc_min;

  FactorStats stats;
  VerifyOptions opts;
  opts.budget.batches = budget_batches;
  opts.sampling_seed = sampling_seed;
  opts.stats = &stats;
  VerificationOutcome outcome = run_verification(f, thr, opts);

  if (json) {
    ordered_json j;
    j["name"] = f.name;
    j["profile"] = profile;
    j["checks"] = checks_json(outcome.report.checks);
    j["derived"] = derived_json(outcome.report.derived);
    j["verdict"] = outcome.verdict;
    j["exit_code"] = outcome.exit_code;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "curve: " << f.name << "\nprofile: " << profile << "\n\n";
    print_checks(std::cout, outcome.report.checks);
    std::cout << "\n";
    print_derived(std::cout, outcome.report.derived);
    std::cout << "\nverdict: " << outcome.verdict << " (exit "
              << outcome.exit_code << ")\n";
  }
  return outcome.exit_code;
}

int cmd_audit(const std::vector<std::string>& inputs,
              const std::string& profile, bool json) {
  struct Column {
    std::string name;
    std::vector<AuditRow> rows;
  };
  std::vector<Column> cols;
  bool parse_errors = false;
  for (const auto& arg : inputs) {
    try {
      CurveFile f = load_input(arg);
      SecurityThresholds thr = thresholds_for(profile, bit_length(f.p), false);
      VerificationOutcome outcome = run_verification(f, thr, {});
      cols.push_back({f.name, full_audit(outcome)});
    } catch (const CurveFileError& e) {
      std::cerr << "audit: " << e.what() << "\n";
      parse_errors = true;
    }
  }
  if (cols.empty()) {
    std::cerr << "audit: no curves could be loaded\n";
    return 3;
  }

  if (json) {
    ordered_json j = ordered_json::array();
    for (const auto& c : cols) {
      ordered_json rows = ordered_json::array();
      for (const auto& r : c.rows) {
        rows.push_back({{"criterion", r.criterion},
                        {"status", check_status_name(r.status)},
                        {"evidence", r.evidence}});
      }
      j.push_back({{"name", c.name}, {"rows", rows}});
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::size_t w = 18;
    for (const auto& c : cols) w = std::max(w, c.name.size() + 2);
    std::cout << std::left << std::setw(20) << "criterion";
    for (const auto& c : cols)
      std::cout << std::setw(static_cast<int>(w)) << c.name;
    std::cout << "\n";
    for (std::size_t i = 0; i < cols.front().rows.size(); ++i) {
      std::cout << std::left << std::setw(20) << cols.front().rows[i].criterion;
      for (const auto& c : cols)
        std::cout << std::setw(static_cast<int>(w))
                  << check_status_name(c.rows[i].status);
      std::cout << "\n";
    }
  }
  return parse_errors ? 3 : 0;
}

int cmd_rho(int bits, int trials, std::uint64_t seed, bool json) {
  GeneratorConfig cfg;
  cfg.bits = bits;
  cfg.thresholds = SecurityThresholds::desk(bits, true);
  cfg.order_engine = OrderEngine::Bsgs;
  TestEntropySource rng("rho-" + std::to_string(seed));
  cfg.rng = &rng;
  GenerateResult res = generate(cfg);
  RhoStats stats = rho_experiment(res.domain, trials, seed);

  if (json) {
    ordered_json j;
    j["bits"] = bits;
    j["subgroup_order"] = res.domain.n.get_str();
    j["trials"] = stats.trials;
    j["mean_iterations"] = stats.mean_iterations;
    j["predicted"] = stats.predicted;
    j["ratio"] = stats.ratio;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "rho experiment on a fresh " << bits << "-bit curve\n"
              << "  subgroup order n  = " << res.domain.n.get_str() << "\n"
              << "  trials            = " << stats.trials << "\n"
              << "  mean additions    = " << fmt(stats.mean_iterations) << "\n"
              << "  0.886*sqrt(n)     = " << fmt(stats.predicted) << "\n"
              << "  ratio             = " << fmt(stats.ratio) << "\n";
  }
  return 0;
}

int cmd_bench(const std::string& input, int trials, bool json) {
  CurveFile f = load_input(input);
  if (!f.N || !f.n || !f.h)
    throw CurveFileError(f.name + ": bench needs a curve with declared orders");
  DomainParams domain{CurveParams(PrimeModulus::checked(f.p), f.a, f.b),
                      Point::affine(f.Gx, f.Gy), *f.N, *f.n, *f.h};
  BenchReport rep = bench(domain, trials);

  if (json) {
    ordered_json j;
    j["curve"] = f.name;
    j["trials"] = rep.trials;
    j["keygen"] = {{"seconds", rep.keygen_seconds},
                   {"cycles", rep.keygen_cycles}};
    j["sign"] = {{"seconds", rep.sign_seconds}, {"cycles", rep.sign_cycles}};
    j["verify"] = {{"seconds", rep.verify_seconds},
                   {"cycles", rep.verify_cycles}};
    j["cycles_estimated"] = rep.cycles_estimated;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << rep.table_text(f.name);
  }
  return 0;
}

int cmd_registry_list(bool json) {
  if (json) {
    ordered_json j = ordered_json::array();
    for (const auto& e : registry()) {
      j.push_back({{"name", e.file.name},
                   {"bits", bit_length(e.file.p)},
                   {"parameters_only", !e.file.N.has_value()},
                   {"provenance", "paper-fixture"}});
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& e : registry()) {
      std::cout << std::left << std::setw(14) << e.file.name
                << bit_length(e.file.p) << "-bit"
                << (e.file.N ? "" : "  (parameters only)") << "\n";
    }
  }
  return 0;
}

int cmd_registry_show(const std::string& name, const std::string& out,
                      bool json) {
  const RegistryEntry& e = registry_get(name);
  std::string text = serialize_curve_file(e.file);
  if (!out.empty()) {
    save_curve_file(e.file, out);
    std::cout << "wrote " << out << "\n";
    return 0;
  }
  if (json) {
    ordered_json j;
    j["name"] = e.file.name;
    j["curve"] = text;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Short Weierstrass curve generation and verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ecvet 0.1.0");

  // generate
  auto* g = app.add_subcommand("generate", "Generate a fresh curve");
  int g_bits = 40;
  std::string g_engine = "bsgs", g_profile = "desk", g_source = "system";
  std::string g_seed = "default", g_out;
  bool g_json = false;
  g->add_option("--bits", g_bits, "field size in bits")
      ->check(CLI::Range(16, 512));
  g->add_option("--engine", g_engine, "order engine")
      ->check(CLI::IsMember({"exhaustive", "bsgs", "external"}));
  g->add_option("--profile", g_profile, "threshold profile")
      ->check(CLI::IsMember({"desk", "production"}));
  g->add_option("--seed-source", g_source, "entropy source")
      ->check(CLI::IsMember({"system", "test"}));
  auto* g_seed_opt =
      g->add_option("--seed", g_seed, "deterministic test seed (implies test source)");
  g->add_option("--out", g_out, "write the curve file here");
  g->add_flag("--json", g_json, "machine-readable output");

  // verify
  auto* v = app.add_subcommand("verify", "Run the verification ladder");
  std::string v_input, v_profile = "production";
  double v_rho_min = 0.0, v_disc_min = 0.0;
  std::uint64_t v_budget = FactorBudget{}.batches, v_seed = 1;
  bool v_json = false;
  v->add_option("input", v_input, "curve file or registry name")->required();
  v->add_option("--profile", v_profile)
      ->check(CLI::IsMember({"desk", "production"}));
  auto* v_rho_opt = v->add_option("--rho-min", v_rho_min, "rho floor (log2)");
  auto* v_disc_opt =
      v->add_option("--disc-min", v_disc_min, "discriminant floor (log2)");
  v->add_option("--budget", v_budget, "factoring budget in batches");
  v->add_option("--sampling-seed", v_seed, "twist point sampling seed");
  v->add_flag("--json", v_json, "machine-readable output");

  // audit
  auto* a = app.add_subcommand("audit", "Nine-criterion audit matrix");
  std::vector<std::string> a_inputs;
  std::string a_profile = "production";
  bool a_json = false;
  a->add_option("inputs", a_inputs, "curve files or registry names")
      ->required();
  a->add_option("--profile", a_profile)
      ->check(CLI::IsMember({"desk", "production"}));
  a->add_flag("--json", a_json, "machine-readable output");

  // rho
  auto* r = app.add_subcommand("rho", "Measure rho solver cost against the model");
  int r_bits = 20, r_trials = 100;
  std::uint64_t r_seed = 1;
  bool r_json = false;
  r->add_option("--bits", r_bits)->check(CLI::Range(16, 39));
  r->add_option("--trials", r_trials)->check(CLI::Range(30, 100000));
  r->add_option("--seed", r_seed);
  r->add_flag("--json", r_json, "machine-readable output");

  // bench
  auto* b = app.add_subcommand("bench", "ECDSA operation timings");
  std::string b_input;
  int b_trials = 100;
  bool b_json = false;
  b->add_option("input", b_input, "curve file or registry name")->required();
  b->add_option("--trials", b_trials)->check(CLI::Range(1, 1000000));
  b->add_flag("--json", b_json, "machine-readable output");

  // registry
  auto* reg = app.add_subcommand("registry", "Built-in curve fixtures");
  reg->require_subcommand(1);
  auto* rl = reg->add_subcommand("list", "List fixtures");
  bool rl_json = false;
  rl->add_flag("--json", rl_json, "machine-readable output");
  auto* rs = reg->add_subcommand("show", "Print one fixture");
  std::string rs_name, rs_out;
  bool rs_json = false;
  rs->add_option("name", rs_name)->required();
  rs->add_option("--out", rs_out, "write the fixture here");
  rs->add_flag("--json", rs_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;  // flag errors are malformed input
  }

  try {
    if (g->parsed())
      return cmd_generate(g_bits, g_engine, g_profile, g_source, g_seed,
                          g_seed_opt->count() > 0, g_out, g_json);
    if (v->parsed())
      return cmd_verify(v_input, v_profile, v_rho_min, v_rho_opt->count() > 0,
                        v_disc_min, v_disc_opt->count() > 0, v_budget, v_seed,
                        v_json);
    if (a->parsed()) return cmd_audit(a_inputs, a_profile, a_json);
    if (r->parsed()) return cmd_rho(r_bits, r_trials, r_seed, r_json);
    if (b->parsed()) return cmd_bench(b_input, b_trials, b_json);
    if (reg->parsed()) {
      if (rl->parsed()) return cmd_registry_list(rl_json);
      if (rs->parsed()) return cmd_registry_show(rs_name, rs_out, rs_json);
    }
  } catch (const GenerationFailure& e) {
    std::cerr << "generation failed at " << e.stage() << ": " << e.what()
              << "\n";
    return 1;
  } catch (const CurveFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
