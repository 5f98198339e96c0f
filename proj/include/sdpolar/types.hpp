#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace sdpolar {

using Bit = std::uint8_t;
using BitVec = std::vector<Bit>;

// Log-likelihood message for one conditional bit: v[b] = log W(.|b), shared
// additive constants allowed.
struct LLPair {
    double v[2]{0.0, 0.0};

    LLPair() = default;
    LLPair(double ll0, double ll1) : v{ll0, ll1} {}

    double ll(int b) const { return v[b]; }
};

enum class KernelMode {
    MaxApprox,  // max-sum updates, constants dropped
    ExactSum,   // log-sum-exp updates, constants kept
};

class unsupported_operation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

class config_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

constexpr bool is_pow2(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

constexpr int ilog2(std::uint64_t x) {
    int n = 0;
    while (x > 1) {
        x >>= 1;
        ++n;
    }
    return n;
}

// Reverses the low `bits` bits of x.
constexpr std::uint32_t bit_reverse(std::uint32_t x, int bits) {
    std::uint32_t r = 0;
    for (int i = 0; i < bits; ++i) {
        r = (r << 1) | (x & 1u);
        x >>= 1;
    }
    return r;
}

}  // namespace sdpolar
