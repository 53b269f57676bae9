#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ecvet/numeric.hpp"
#include "ecvet/sha256.hpp"

namespace ecvet {

// One line of the seed-consumption transcript. `commitment` is a hex digest of
// the bits drawn for this purpose, or "?" when only the purpose and length are
// attested (imported records).
struct TranscriptEntry {
  std::string purpose;
  long bits_consumed = 0;
  std::string commitment;

  bool operator==(const TranscriptEntry&) const = default;
};

struct SeedRecord {
  std::string source_id;
  std::string seed_commitment;
  long seed_length_bits = 0;
  std::string acquired_at;
  std::vector<TranscriptEntry> transcript;

  bool has_purpose(const std::string& purpose) const;
  bool operator==(const SeedRecord&) const = default;
};

// Draws are tagged with a purpose so that the transcript can show that e.g.
// coefficients a and b came from independently keyed streams.
class EntropySource {
 public:
  virtual ~EntropySource() = default;

  // Uniform integer in [0, 2^count).
  virtual Int next_bits(int count, const std::string& purpose) = 0;

  virtual SeedRecord provenance() const = 0;

  // Discard the current seed and transcript and start a fresh stream.
  virtual void reseed() = 0;

  // Uniform integer in [0, bound) by rejection sampling.
  Int next_below(const Int& bound, const std::string& purpose);
};

// Deterministic SHA-256 counter generator. Each purpose owns an independent
// stream keyed by (seed, purpose); replaying the same seed replays every draw.
class TestEntropySource final : public EntropySource {
 public:
  explicit TestEntropySource(std::string seed);
  explicit TestEntropySource(uint64_t seed);

  Int next_bits(int count, const std::string& purpose) override;
  SeedRecord provenance() const override;
  void reseed() override;

  const std::string& seed() const { return seed_; }

 private:
  struct Stream {
    uint64_t counter = 0;
    long bits = 0;
    Sha256 commitment;
  };
  std::string seed_;
  int generation_ = 0;
  std::map<std::string, Stream> streams_;
  std::vector<std::string> purpose_order_;
};

// /dev/urandom-backed source. Draws cannot be replayed; the transcript records
// lengths and digests of what was consumed.
class SystemEntropySource final : public EntropySource {
 public:
  explicit SystemEntropySource(std::string device = "/dev/urandom");

  Int next_bits(int count, const std::string& purpose) override;
  SeedRecord provenance() const override;
  void reseed() override;

 private:
  struct Stream {
    long bits = 0;
    Sha256 commitment;
  };
  std::string device_;
  std::string acquired_at_;
  std::map<std::string, Stream> streams_;
  std::vector<std::string> purpose_order_;
};

}  // namespace ecvet
