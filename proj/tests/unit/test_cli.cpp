// End-to-end checks of the command-line binary: subcommand wiring, exit
// codes, and output shapes. The binary path arrives via ECVET_BIN; when it
// is absent (e.g. a bare test binary run outside the build tree) the cases
// report that instead of failing.

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef _WIN32
#include <sys/wait.h>
#endif

using nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr, merged
};

const char* binary_path() { return std::getenv("ECVET_BIN"); }

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string capture = "/tmp/ecvet-cli-capture-" + std::to_string(counter++);
  std::string cmd =
      std::string("\"") + binary_path() + "\" " + args + " >" + capture + " 2>&1";
  int raw = std::system(cmd.c_str());
  CliResult r;
#ifndef _WIN32
  if (WIFEXITED(raw)) r.exit_code = WEXITSTATUS(raw);
#else
  r.exit_code = raw;
#endif
  std::ifstream in(capture);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  std::remove(capture.c_str());
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

#define NEED_BINARY()                                     \
  do {                                                    \
    if (!binary_path()) {                                 \
      MESSAGE("ECVET_BIN not set; skipping CLI checks");  \
      return;                                             \
    }                                                     \
  } while (0)

}  // namespace

TEST_CASE("cli: version and argument errors") {
  NEED_BINARY();
  CliResult r = run_cli("--version");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "ecvet 0.1.0"));

  CHECK(run_cli("").exit_code == 3);            // a subcommand is required
  CHECK(run_cli("frobnicate").exit_code == 3);  // unknown subcommand
  CHECK(run_cli("generate --bits 12").exit_code == 3);  // below the flag range
}

TEST_CASE("cli: registry list and show") {
  NEED_BINARY();
  CliResult list = run_cli("registry list");
  CHECK(list.exit_code == 0);
  CHECK(contains(list.output, "KG256r1"));
  CHECK(contains(list.output, "KG384r1"));
  CHECK(contains(list.output, "T3-trial-1"));
  CHECK(contains(list.output, "(parameters only)"));

  CliResult show = run_cli("registry show KG256r1");
  CHECK(show.exit_code == 0);
  CHECK(show.output.rfind("name = KG256r1\n", 0) == 0);
  CHECK(contains(show.output, "h = 1\n"));
  CHECK(contains(show.output, "seed_source = /dev/random\n"));

  CHECK(run_cli("registry show KG999r9").exit_code == 3);
}

TEST_CASE("cli: verify judges the published curve safe") {
  NEED_BINARY();
  CliResult r = run_cli("verify KG256r1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "curve: KG256r1"));
  CHECK(contains(r.output, "verdict: Cryptographically safe elliptic curve"));
  CHECK(contains(r.output, "rho cost (log2)"));

  CliResult j = run_cli("verify KG256r1 --json");
  CHECK(j.exit_code == 0);
  json parsed = json::parse(j.output);
  CHECK(parsed["exit_code"] == 0);
  CHECK(parsed["verdict"] == "Cryptographically safe elliptic curve");
  CHECK(parsed["checks"].is_array());
  CHECK(parsed["checks"].size() > 20);
  CHECK(parsed["derived"].contains("rho_log2"));
}

TEST_CASE("cli: verify distinguishes weak, unknown, and malformed input") {
  NEED_BINARY();
  // Anomalous toy curve (#E = p): weak, exit 1.
  write_file("/tmp/ecvet-cli-anomalous.txt",
             "name = cli-anomalous\np = 8887\na = 2772\nb = 1633\n"
             "N = 8887\nn = 8887\nh = 1\nGx = 902\nGy = 5771\n");
  CliResult weak = run_cli("verify /tmp/ecvet-cli-anomalous.txt --profile desk");
  CHECK(weak.exit_code == 1);
  CHECK(contains(weak.output, "Weak elliptic curve"));

  // Parameters-only fixture: verification cannot finish, exit 2.
  CliResult unknown = run_cli("verify T3-trial-1");
  CHECK(unknown.exit_code == 2);
  CHECK(contains(unknown.output, "Verification incomplete"));

  // Strong curve failing a raised bar: weak, exit 1.
  CliResult raised = run_cli("verify KG256r1 --rho-min 500");
  CHECK(raised.exit_code == 1);
  CHECK(contains(raised.output, "Weak elliptic curve"));

  // Unparseable file and unknown name: malformed input, exit 3.
  write_file("/tmp/ecvet-cli-bad.txt", "this is not a curve file\n");
  CHECK(run_cli("verify /tmp/ecvet-cli-bad.txt").exit_code == 3);
  CHECK(run_cli("verify /no/such/curve").exit_code == 3);
  std::remove("/tmp/ecvet-cli-anomalous.txt");
  std::remove("/tmp/ecvet-cli-bad.txt");
}

TEST_CASE("cli: audit prints the criterion matrix") {
  NEED_BINARY();
  CliResult r = run_cli("audit KG256r1 KG384r1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "criterion"));
  CHECK(contains(r.output, "safeCurve"));
  CHECK(contains(r.output, "KG256r1"));
  CHECK(contains(r.output, "KG384r1"));

  CliResult j = run_cli("audit KG256r1 --json");
  CHECK(j.exit_code == 0);
  json parsed = json::parse(j.output);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0]["name"] == "KG256r1");
  CHECK(parsed[0]["rows"].size() > 5);
}

TEST_CASE("cli: generate, write, and re-verify a desk curve") {
  NEED_BINARY();
  std::string out = "/tmp/ecvet-cli-gen24.txt";
  CliResult gen = run_cli("generate --bits 24 --seed cli-unit --out " + out);
  CHECK(gen.exit_code == 0);
  CHECK(contains(gen.output, "wrote " + out));
  CHECK(contains(gen.output, "# gen24-"));
  CHECK(contains(gen.output, "restarts s/p/c"));

  CliResult ver = run_cli("verify " + out + " --profile desk");
  CHECK(ver.exit_code == 0);
  CHECK(contains(ver.output, "Cryptographically safe elliptic curve"));

  CliResult j = run_cli("generate --bits 24 --seed cli-unit --json");
  CHECK(j.exit_code == 0);
  json parsed = json::parse(j.output);
  CHECK(std::string(parsed["name"]).rfind("gen24-", 0) == 0);
  CHECK(parsed["trust"]["provenance"] == "pass");
  CHECK(parsed["trust"]["screens"] == "pass");
  CHECK(parsed["restarts"].contains("coefficient"));
  CHECK(contains(parsed["curve"], "name = gen24-"));
  std::remove(out.c_str());

  // Engine/size mismatches surface as malformed flag combinations.
  CHECK(run_cli("generate --bits 24 --engine exhaustive --seed x").exit_code ==
        3);
}

TEST_CASE("cli: rho experiment reports the model comparison") {
  NEED_BINARY();
  CliResult r = run_cli("rho --bits 16 --trials 30 --seed 5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "mean additions"));
  CHECK(contains(r.output, "0.886*sqrt(n)"));
  CHECK(contains(r.output, "ratio"));
}

TEST_CASE("cli: bench needs declared orders and emits the timing table") {
  NEED_BINARY();
  CliResult r = run_cli("bench KG256r1 --trials 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "Curve\tKey pair generation"));
  CHECK(contains(r.output, "KG256r1\t"));

  CHECK(run_cli("bench T3-trial-1 --trials 2").exit_code == 3);
}
