#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace ecvet {

/// Minimal incremental SHA-256 (FIPS 180-4).  Used for seed commitments and
/// the counter-mode test DRBG; not a general-purpose crypto surface.
class Sha256 {
 public:
  Sha256();
  void update(const std::uint8_t* data, std::size_t len);
  void update(const std::string& s);
  std::array<std::uint8_t, 32> digest();  // finalizes; object then reusable via reset
  void reset();

  static std::array<std::uint8_t, 32> hash(const std::string& s);
  static std::string hex(const std::array<std::uint8_t, 32>& d);

 private:
  void process_block(const std::uint8_t* block);

  std::uint32_t state_[8];
  std::uint64_t length_ = 0;
  std::uint8_t buffer_[64];
  std::size_t buffered_ = 0;
};

}  // namespace ecvet
