#include "sdpolar/crc.hpp"

#include <stdexcept>

namespace sdpolar {

CrcConfig CrcConfig::crc32c() {
    CrcConfig cfg;
    cfg.width = 32;
    cfg.poly = 0x1EDC6F41u;
    cfg.init = 0xFFFFFFFFu;
    cfg.xorout = 0xFFFFFFFFu;
    cfg.reflect_in = true;
    cfg.reflect_out = true;
    return cfg;
}

namespace {

std::uint64_t reflect(std::uint64_t x, int bits) {
    std::uint64_t r = 0;
    for (int i = 0; i < bits; ++i) {
        r = (r << 1) | (x & 1u);
        x >>= 1;
    }
    return r;
}

}  // namespace

Crc::Crc(const CrcConfig& cfg) : cfg_(cfg) {
    if (cfg.width < 1 || cfg.width > 64)
        throw std::invalid_argument("crc width must be in 1..64");
    mask_ = (cfg.width == 64) ? ~0ull : ((1ull << cfg.width) - 1);
    top_ = 1ull << (cfg.width - 1);
    if (cfg.poly == 0 || (cfg.poly & ~mask_) != 0)
        throw std::invalid_argument("crc polynomial does not match width");
}

std::uint64_t Crc::feed_bit(std::uint64_t reg, Bit b) const {
    reg ^= static_cast<std::uint64_t>(b & 1u) << (cfg_.width - 1);
    if (reg & top_)
        reg = ((reg << 1) ^ cfg_.poly) & mask_;
    else
        reg = (reg << 1) & mask_;
    return reg;
}

std::uint64_t Crc::compute_bits(std::span<const Bit> bits) const {
    std::uint64_t reg = cfg_.init & mask_;
    for (Bit b : bits) reg = feed_bit(reg, b);
    if (cfg_.reflect_out) reg = reflect(reg, cfg_.width);
    return (reg ^ cfg_.xorout) & mask_;
}

std::uint64_t Crc::compute_bytes(std::span<const std::uint8_t> bytes) const {
    std::uint64_t reg = cfg_.init & mask_;
    for (std::uint8_t byte : bytes) {
        for (int i = 0; i < 8; ++i) {
            int shift = cfg_.reflect_in ? i : (7 - i);
            reg = feed_bit(reg, static_cast<Bit>((byte >> shift) & 1u));
        }
    }
    if (cfg_.reflect_out) reg = reflect(reg, cfg_.width);
    return (reg ^ cfg_.xorout) & mask_;
}

}  // namespace sdpolar
