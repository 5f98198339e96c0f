#pragma once

#include <cstdint>
#include <span>

#include "sdpolar/types.hpp"

namespace sdpolar {

struct CrcConfig {
    int width = 32;
    std::uint64_t poly = 0;  // generator polynomial, normal form
    std::uint64_t init = 0;
    std::uint64_t xorout = 0;
    bool reflect_in = false;
    bool reflect_out = false;

    // CRC-32C (Castagnoli): poly 0x1EDC6F41, reflected, init/xorout all-ones.
    static CrcConfig crc32c();
};

// Bitwise CRC register engine. Bit sequences are consumed in index order;
// reflect_in only controls how bytes decompose into bits in compute_bytes.
class Crc {
  public:
    explicit Crc(const CrcConfig& cfg);

    std::uint64_t compute_bits(std::span<const Bit> bits) const;
    std::uint64_t compute_bytes(std::span<const std::uint8_t> bytes) const;

    const CrcConfig& config() const { return cfg_; }

  private:
    std::uint64_t feed_bit(std::uint64_t reg, Bit b) const;

    CrcConfig cfg_;
    std::uint64_t top_;
    std::uint64_t mask_;
};

}  // namespace sdpolar
