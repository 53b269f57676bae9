#include "ecvet/entropy.hpp"

#include <cstdio>
#include <ctime>
#include <stdexcept>

namespace ecvet {

namespace {

std::string utc_now_iso8601() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Int bytes_to_int(const unsigned char* data, size_t len) {
  Int v;
  mpz_import(v.get_mpz_t(), len, 1, 1, 0, 0, data);
  return v;
}

Int mask_to_bits(Int v, int count) {
  Int mask = (Int(1) << count) - 1;
  return v & mask;
}

}  // namespace

bool SeedRecord::has_purpose(const std::string& purpose) const {
  for (const auto& e : transcript) {
    if (e.purpose == purpose) return true;
  }
  return false;
}

Int EntropySource::next_below(const Int& bound, const std::string& purpose) {
  if (bound <= 0) throw std::invalid_argument("next_below: bound must be positive");
  int bits = bit_length(bound);
  for (;;) {
    Int candidate = next_bits(bits, purpose);
    if (candidate < bound) return candidate;
  }
}

TestEntropySource::TestEntropySource(std::string seed) : seed_(std::move(seed)) {}

TestEntropySource::TestEntropySource(uint64_t seed) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "seed-%llu", static_cast<unsigned long long>(seed));
  seed_ = buf;
}

Int TestEntropySource::next_bits(int count, const std::string& purpose) {
  if (count <= 0) throw std::invalid_argument("next_bits: count must be positive");
  auto [it, inserted] = streams_.try_emplace(purpose);
  if (inserted) purpose_order_.push_back(purpose);
  Stream& st = it->second;

  int blocks = (count + 255) / 256;
  std::string material;
  material.reserve(blocks * 32);
  for (int i = 0; i < blocks; ++i) {
    Sha256 h;
    h.update(seed_);
    h.update("|gen" + std::to_string(generation_));
    h.update("|" + purpose + "|");
    h.update(std::to_string(st.counter++));
    auto d = h.digest();
    material.append(reinterpret_cast<const char*>(d.data()), d.size());
  }
  size_t used = (count + 7) / 8;
  st.bits += count;
  const auto* raw = reinterpret_cast<const unsigned char*>(material.data());
  st.commitment.update(raw, used);
  Int v = bytes_to_int(raw, used);
  return mask_to_bits(std::move(v), count);
}

SeedRecord TestEntropySource::provenance() const {
  SeedRecord rec;
  rec.source_id = "test-drbg";
  rec.seed_commitment =
      Sha256::hex(Sha256::hash(seed_ + "|gen" + std::to_string(generation_)));
  rec.seed_length_bits = static_cast<long>(seed_.size()) * 8;
  rec.acquired_at = "1970-01-01T00:00:00Z";
  for (const auto& purpose : purpose_order_) {
    const Stream& st = streams_.at(purpose);
    Sha256 copy = st.commitment;
    rec.transcript.push_back({purpose, st.bits, Sha256::hex(copy.digest())});
  }
  return rec;
}

void TestEntropySource::reseed() {
  seed_ = Sha256::hex(Sha256::hash(seed_ + "|reseed"));
  ++generation_;
  streams_.clear();
  purpose_order_.clear();
}

SystemEntropySource::SystemEntropySource(std::string device)
    : device_(std::move(device)), acquired_at_(utc_now_iso8601()) {}

Int SystemEntropySource::next_bits(int count, const std::string& purpose) {
  if (count <= 0) throw std::invalid_argument("next_bits: count must be positive");
  auto [it, inserted] = streams_.try_emplace(purpose);
  if (inserted) purpose_order_.push_back(purpose);
  Stream& st = it->second;

  size_t bytes = (count + 7) / 8;
  std::vector<unsigned char> buf(bytes);
  std::FILE* f = std::fopen(device_.c_str(), "rb");
  if (f == nullptr || std::fread(buf.data(), 1, bytes, f) != bytes) {
    if (f != nullptr) std::fclose(f);
    throw std::runtime_error("entropy device unavailable: " + device_);
  }
  std::fclose(f);

  st.bits += count;
  st.commitment.update(buf.data(), buf.size());
  return mask_to_bits(bytes_to_int(buf.data(), buf.size()), count);
}

SeedRecord SystemEntropySource::provenance() const {
  SeedRecord rec;
  rec.source_id = device_;
  long total = 0;
  Sha256 all;
  for (const auto& purpose : purpose_order_) {
    const Stream& st = streams_.at(purpose);
    total += st.bits;
    Sha256 copy = st.commitment;
    std::string d = Sha256::hex(copy.digest());
    all.update(d);
    rec.transcript.push_back({purpose, st.bits, d});
  }
  rec.seed_commitment = Sha256::hex(all.digest());
  rec.seed_length_bits = total;
  rec.acquired_at = acquired_at_;
  return rec;
}

void SystemEntropySource::reseed() {
  streams_.clear();
  purpose_order_.clear();
  acquired_at_ = utc_now_iso8601();
}

}  // namespace ecvet
