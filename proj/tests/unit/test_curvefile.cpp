// Curve file format: parse/serialize inverses, canonical key order, the
// error taxonomy, and the on-disk helpers. Parsing is deliberately purely
// syntactic, so inconsistent-but-well-formed files load fine here and are
// judged later by the verifier.

#include <doctest.h>

#include <cstdio>
#include <string>

#include "ecvet/curvefile.hpp"
#include "ecvet/registry.hpp"

using namespace ecvet;

namespace {

CurveFile full_file() {
  CurveFile f;
  f.name = "unit-full";
  f.p = Int(530527);
  f.a = Int(93657);
  f.b = Int(8868);
  f.N = Int(531133);
  f.n = Int(531133);
  f.h = Int(1);
  f.Gx = Int(123117);
  f.Gy = Int(282493);
  f.twist_N = Int(529923);
  f.cm_discriminant = Int(-1756083);
  f.embedding_degree = Int(44261);
  f.twist_embedding_degree = Int(11040);
  f.n_minus_1_factors = {Int(2), Int(2), Int(3), Int(44261)};
  f.twist_n_minus_1_factors = {Int(2), Int(2), Int(2), Int(2), Int(11040)};
  SeedRecord seed;
  seed.source_id = "test-drbg";
  seed.seed_commitment = "0a1b2c";
  seed.seed_length_bits = 256;
  seed.acquired_at = "2026-08-23T12:00:00Z";
  seed.transcript = {{"prime", 8192, "aa"}, {"base-point", 1024, "bb"}};
  f.seed = seed;
  return f;
}

std::string parse_error(const std::string& text) {
  try {
    parse_curve_file(text);
  } catch (const CurveFileError& e) {
    return e.what();
  }
  return "";
}

constexpr const char* kMinimal =
    "name = tiny\np = 23\na = 1\nb = 1\nGx = 0\nGy = 1\n";

}  // namespace

TEST_CASE("parse inverts serialize on a fully populated file") {
  CurveFile f = full_file();
  CurveFile g = parse_curve_file(serialize_curve_file(f));
  CHECK(g == f);
  // Canonical text is a fixed point of the roundtrip.
  CHECK(serialize_curve_file(g) == serialize_curve_file(f));
}

TEST_CASE("a minimal file needs only name, p, a, b, Gx, Gy") {
  CurveFile f = parse_curve_file(kMinimal);
  CHECK(f.name == "tiny");
  CHECK(f.p == 23);
  CHECK(f.a == 1);
  CHECK(f.b == 1);
  CHECK(f.Gx == 0);
  CHECK(f.Gy == 1);
  CHECK_FALSE(f.N.has_value());
  CHECK_FALSE(f.n.has_value());
  CHECK_FALSE(f.h.has_value());
  CHECK_FALSE(f.twist_N.has_value());
  CHECK_FALSE(f.cm_discriminant.has_value());
  CHECK(f.n_minus_1_factors.empty());
  CHECK_FALSE(f.seed.has_value());
}

TEST_CASE("comments, blank lines, and spacing are cosmetic") {
  std::string text =
      "# header comment\n"
      "\n"
      "  name   =   tiny  \n"
      "p=23\n"
      "\ta = 1\n"
      "b = 1\n"
      "   # interior comment\n"
      "Gx = 0\n"
      "Gy = 1\n";
  CurveFile f = parse_curve_file(text);
  CHECK(f == parse_curve_file(kMinimal));
}

TEST_CASE("every registry fixture survives the roundtrip byte for byte") {
  for (const auto& entry : registry()) {
    CAPTURE(entry.file.name);
    std::string text = serialize_curve_file(entry.file);
    CurveFile back = parse_curve_file(text);
    CHECK(back == entry.file);
    CHECK(serialize_curve_file(back) == text);
  }
}

TEST_CASE("registry carries the expected fixtures") {
  auto names = registry_names();
  REQUIRE(names.size() == 5);
  CHECK(names[0] == "KG256r1");
  CHECK(names[1] == "KG384r1");
  CHECK(names[2] == "T3-trial-1");
  CHECK(names[3] == "T3-trial-2");
  CHECK(names[4] == "T3-trial-3");
  // The named curves publish full orders; the trial curves are
  // parameters-only.
  CHECK(registry_get("KG256r1").file.N.has_value());
  CHECK_FALSE(registry_get("T3-trial-1").file.N.has_value());
  CHECK_THROWS_AS(registry_get("KG999r9"), std::out_of_range);
}

TEST_CASE("structural errors are reported with their cause") {
  CHECK(parse_error(std::string(kMinimal) + "p = 29\n")
            .find("duplicate key 'p'") != std::string::npos);
  CHECK(parse_error(std::string(kMinimal) + "q = 3\n")
            .find("unknown key 'q'") != std::string::npos);
  CHECK(parse_error("name = x\np = 23\na = 1\nb = 1\nGx = 0\n")
            .find("missing required key 'Gy'") != std::string::npos);
  CHECK(parse_error("name = x\njust words\n").find("expected 'key = value'") !=
        std::string::npos);
  CHECK(parse_error("= 5\n").find("empty key or value") != std::string::npos);
  CHECK(parse_error("p =\n").find("empty key or value") != std::string::npos);
}

TEST_CASE("integer values are validated per key") {
  CHECK(parse_error(std::string(kMinimal) + "N = 0x11\n")
            .find("not a decimal integer") != std::string::npos);
  CHECK(parse_error("name = x\np = 23\na = -3\nb = 1\nGx = 0\nGy = 1\n")
            .find("must be non-negative") != std::string::npos);
  // cm_discriminant is the one key where a sign is meaningful.
  CurveFile f =
      parse_curve_file(std::string(kMinimal) + "cm_discriminant = -11\n");
  CHECK(f.cm_discriminant == Int(-11));
  CHECK(parse_error(std::string(kMinimal) + "n_minus_1_factors = 2 x 5\n")
            .find("not a decimal integer") != std::string::npos);
}

TEST_CASE("factor lists keep order and multiplicity") {
  CurveFile f = parse_curve_file(std::string(kMinimal) +
                                 "n_minus_1_factors = 2 2 3 44261\n");
  REQUIRE(f.n_minus_1_factors.size() == 4);
  CHECK(f.n_minus_1_factors[0] == 2);
  CHECK(f.n_minus_1_factors[1] == 2);
  CHECK(f.n_minus_1_factors[2] == 3);
  CHECK(f.n_minus_1_factors[3] == 44261);
}

TEST_CASE("transcript lines are repeatable and colon-structured") {
  CurveFile f = parse_curve_file(std::string(kMinimal) +
                                 "seed_source = test-drbg\n"
                                 "transcript = prime:8192:aa\n"
                                 "transcript = base-point:1024:bb:cc\n");
  REQUIRE(f.seed.has_value());
  REQUIRE(f.seed->transcript.size() == 2);
  CHECK(f.seed->transcript[0].purpose == "prime");
  CHECK(f.seed->transcript[0].bits_consumed == 8192);
  CHECK(f.seed->transcript[0].commitment == "aa");
  // Only the first two colons delimit; commitments may contain colons.
  CHECK(f.seed->transcript[1].commitment == "bb:cc");

  CHECK(parse_error(std::string(kMinimal) +
                    "seed_source = s\ntranscript = prime:64\n")
            .find("purpose:bits:commitment") != std::string::npos);
  CHECK(parse_error(std::string(kMinimal) +
                    "seed_source = s\ntranscript = :64:aa\n")
            .find("empty fields") != std::string::npos);
}

TEST_CASE("seed keys without a source are rejected") {
  CHECK(parse_error(std::string(kMinimal) + "seed_bits = 256\n")
            .find("seed keys present but seed_source missing") !=
        std::string::npos);
}

TEST_CASE("load and save roundtrip through disk") {
  CurveFile f = full_file();
  std::string path = "/tmp/ecvet-unit-curvefile.txt";
  save_curve_file(f, path);
  CurveFile g = load_curve_file(path);
  CHECK(g == f);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_curve_file("/tmp/ecvet-no-such-file.txt"),
                  CurveFileError);
}
