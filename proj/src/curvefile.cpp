#include "ecvet/curvefile.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace ecvet {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Int parse_int(const std::string& key, const std::string& value,
              bool allow_negative) {
  std::string v = value;
  bool neg = !v.empty() && v[0] == '-';
  if (neg && !allow_negative)
    throw CurveFileError("key '" + key + "' must be non-negative");
  std::string digits = neg ? v.substr(1) : v;
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw CurveFileError("key '" + key + "' is not a decimal integer: '" +
                         value + "'");
  Int out(digits, 10);
  return neg ? Int(-out) : out;
}

std::vector<Int> parse_int_list(const std::string& key, const std::string& value) {
  std::vector<Int> out;
  std::istringstream is(value);
  std::string tok;
  while (is >> tok) out.push_back(parse_int(key, tok, false));
  if (out.empty())
    throw CurveFileError("key '" + key + "' has an empty integer list");
  return out;
}

TranscriptEntry parse_transcript(const std::string& value) {
  size_t c1 = value.find(':');
  size_t c2 = c1 == std::string::npos ? std::string::npos : value.find(':', c1 + 1);
  if (c2 == std::string::npos)
    throw CurveFileError("transcript entry needs purpose:bits:commitment: '" +
                         value + "'");
  TranscriptEntry e;
  e.purpose = value.substr(0, c1);
  std::string bits = value.substr(c1 + 1, c2 - c1 - 1);
  e.commitment = value.substr(c2 + 1);
  if (e.purpose.empty() || e.commitment.empty())
    throw CurveFileError("transcript entry has empty fields: '" + value + "'");
  e.bits_consumed = mpz_get_si(parse_int("transcript", bits, false).get_mpz_t());
  return e;
}

}  // namespace

CurveFile parse_curve_file(const std::string& text) {
  CurveFile f;
  std::map<std::string, int> seen;
  SeedRecord seed;
  bool any_seed_key = false;

  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw CurveFileError("line " + std::to_string(lineno) +
                           ": expected 'key = value'");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key.empty() || value.empty())
      throw CurveFileError("line " + std::to_string(lineno) +
                           ": empty key or value");
    if (key != "transcript" && ++seen[key] > 1)
      throw CurveFileError("duplicate key '" + key + "'");

    if (key == "name") f.name = value;
    else if (key == "p") f.p = parse_int(key, value, false);
    else if (key == "a") f.a = parse_int(key, value, false);
    else if (key == "b") f.b = parse_int(key, value, false);
    else if (key == "N") f.N = parse_int(key, value, false);
    else if (key == "n") f.n = parse_int(key, value, false);
    else if (key == "h") f.h = parse_int(key, value, false);
    else if (key == "Gx") f.Gx = parse_int(key, value, false);
    else if (key == "Gy") f.Gy = parse_int(key, value, false);
    else if (key == "twist_N") f.twist_N = parse_int(key, value, false);
    else if (key == "cm_discriminant") f.cm_discriminant = parse_int(key, value, true);
    else if (key == "embedding_degree") f.embedding_degree = parse_int(key, value, false);
    else if (key == "twist_embedding_degree")
      f.twist_embedding_degree = parse_int(key, value, false);
    else if (key == "n_minus_1_factors") f.n_minus_1_factors = parse_int_list(key, value);
    else if (key == "twist_n_minus_1_factors")
      f.twist_n_minus_1_factors = parse_int_list(key, value);
    else if (key == "seed_source") { seed.source_id = value; any_seed_key = true; }
    else if (key == "seed_commitment") { seed.seed_commitment = value; any_seed_key = true; }
    else if (key == "seed_bits") {
      seed.seed_length_bits = mpz_get_si(parse_int(key, value, false).get_mpz_t());
      any_seed_key = true;
    }
    else if (key == "seed_acquired_at") { seed.acquired_at = value; any_seed_key = true; }
    else if (key == "transcript") {
      seed.transcript.push_back(parse_transcript(value));
      any_seed_key = true;
    }
    else throw CurveFileError("unknown key '" + key + "'");
  }

  for (const char* req : {"name", "p", "a", "b", "Gx", "Gy"}) {
    if (seen.find(req) == seen.end())
      throw CurveFileError(std::string("missing required key '") + req + "'");
  }
  if (any_seed_key) {
    if (seed.source_id.empty())
      throw CurveFileError("seed keys present but seed_source missing");
    f.seed = std::move(seed);
  }
  return f;
}

std::string serialize_curve_file(const CurveFile& f) {
  std::ostringstream os;
  os << "name = " << f.name << "\n";
  os << "p = " << f.p.get_str() << "\n";
  os << "a = " << f.a.get_str() << "\n";
  os << "b = " << f.b.get_str() << "\n";
  if (f.N) os << "N = " << f.N->get_str() << "\n";
  if (f.n) os << "n = " << f.n->get_str() << "\n";
  if (f.h) os << "h = " << f.h->get_str() << "\n";
  os << "Gx = " << f.Gx.get_str() << "\n";
  os << "Gy = " << f.Gy.get_str() << "\n";
  if (f.twist_N) os << "twist_N = " << f.twist_N->get_str() << "\n";
  if (f.embedding_degree)
    os << "embedding_degree = " << f.embedding_degree->get_str() << "\n";
  if (f.twist_embedding_degree)
    os << "twist_embedding_degree = " << f.twist_embedding_degree->get_str() << "\n";
  if (f.cm_discriminant)
    os << "cm_discriminant = " << f.cm_discriminant->get_str() << "\n";
  auto emit_list = [&os](const char* key, const std::vector<Int>& v) {
    if (v.empty()) return;
    os << key << " =";
    for (const Int& x : v) os << " " << x.get_str();
    os << "\n";
  };
  emit_list("n_minus_1_factors", f.n_minus_1_factors);
  emit_list("twist_n_minus_1_factors", f.twist_n_minus_1_factors);
  if (f.seed) {
    os << "seed_source = " << f.seed->source_id << "\n";
    if (f.seed->seed_length_bits > 0)
      os << "seed_bits = " << f.seed->seed_length_bits << "\n";
    if (!f.seed->seed_commitment.empty())
      os << "seed_commitment = " << f.seed->seed_commitment << "\n";
    if (!f.seed->acquired_at.empty())
      os << "seed_acquired_at = " << f.seed->acquired_at << "\n";
    for (const auto& e : f.seed->transcript)
      os << "transcript = " << e.purpose << ":" << e.bits_consumed << ":"
         << e.commitment << "\n";
  }
  return os.str();
}

CurveFile load_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CurveFileError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_curve_file(buf.str());
}

void save_curve_file(const CurveFile& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw CurveFileError("cannot write '" + path + "'");
  out << serialize_curve_file(f);
}

}  // namespace ecvet
