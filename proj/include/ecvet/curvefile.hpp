#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecvet/entropy.hpp"
#include "ecvet/numeric.hpp"

namespace ecvet {

class CurveFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Line-oriented `key = value` text with decimal integers. Required keys:
// name, p, a, b, Gx, Gy. N/n/h are optional so that parameters-only fixtures
// (published without their orders) still load. Everything else is optional:
// twist order, attested embedding degrees and CM discriminant, factor hints,
// and the embedded seed record. Parsing is purely syntactic; semantic
// consistency is the verifier's job, so that each bad-input branch there is
// reachable from a file.
struct CurveFile {
  std::string name;
  Int p, a, b, Gx, Gy;
  std::optional<Int> N, n, h;
  std::optional<Int> twist_N;
  std::optional<Int> cm_discriminant;  // the only key allowed to be negative
  std::optional<Int> embedding_degree;
  std::optional<Int> twist_embedding_degree;
  std::vector<Int> n_minus_1_factors;
  std::vector<Int> twist_n_minus_1_factors;
  std::optional<SeedRecord> seed;

  bool operator==(const CurveFile&) const = default;
};

// Throws CurveFileError on duplicate, unknown, or missing required keys and
// on malformed integers. `#` comment lines and blank lines are skipped.
CurveFile parse_curve_file(const std::string& text);

// Canonical key order; parse(serialize(f)) == f and serializing a parsed
// canonical file reproduces it byte for byte.
std::string serialize_curve_file(const CurveFile& f);

CurveFile load_curve_file(const std::string& path);
void save_curve_file(const CurveFile& f, const std::string& path);

}  // namespace ecvet
