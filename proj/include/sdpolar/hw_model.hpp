#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdpolar/code_spec.hpp"

namespace sdpolar::hw {

// LL storage of a list decoder in bits, channel stage included:
// 2(L+1)N*Qch + 4L(N - log2 N - Qch - 1).
std::int64_t mem_bits_ll(std::int64_t N, std::int64_t L, std::int64_t q_ch);

// LL storage with the precomputed first stage replacing the channel stage:
// 3N(Qch+1) + LN(Qch+3) - 4L(log2 N + Qch + 1).
std::int64_t mem_bits_pcms(std::int64_t N, std::int64_t L, std::int64_t q_ch);

// mem_bits_ll - mem_bits_pcms = N(L*Qch + L - Qch - 3).
std::int64_t pcms_saving(std::int64_t N, std::int64_t L, std::int64_t q_ch);

enum class AddMode { Recursive, Direct };

// Additions to build one M-bit symbol distribution with `info_bits` free
// positions. Recursive: sum_{i=1}^{m-1} 2^i 2^{M/2^i} + 2^info_bits.
// Direct: 2^info_bits (M - 1). M = 1 needs no combination additions.
std::int64_t addition_count(int M, AddMode mode, int info_bits);

enum class Scheduling { Serial, Overlapping };

struct HwParams {
    std::int64_t N = 1024;
    std::int64_t M = 1;
    std::int64_t L = 4;
    std::int64_t P = 64;   // processing units
    int q = 4;             // first-stage survivor count
    std::int64_t q_ch = 4; // channel quantization bits
    double gamma = 0.0;    // fraction of all-frozen symbols
    std::int64_t t_s = -1; // cycles per symbol for the combination stages; -1 = derive
    std::int64_t t_n = 0;  // cycles per symbol for the pruning network
    bool pcms = true;
    std::string label;
};

struct LatencyReport {
    std::int64_t t_b = 0;          // transform-stage cycles, whole block
    std::int64_t t_s = 0;          // combination cycles per symbol
    std::int64_t t_n = 0;          // pruning cycles per symbol
    double symbol_cycles = 0.0;    // (1 - gamma) (N/M) (t_s + t_n)
    std::int64_t total = 0;        // t_b + ceil(symbol_cycles)
    Scheduling scheduling = Scheduling::Serial;
};

// Derived per-symbol combination latency: m when all 2^M L messages fit in
// the 4P adders, m - 1 + ceil(2^M L / 4P) in the overlapped regime, and the
// general stage-by-stage bound otherwise.
std::int64_t t_s_default(std::int64_t M, std::int64_t L, std::int64_t P);
std::int64_t t_s_general_bound(std::int64_t M, std::int64_t L, std::int64_t P);

LatencyReport latency(const HwParams& h);

// T(1)/T(M) with T(1) = 2N + (NL/P) log2(NL/(8P)); always below M when
// NL > 8P and the per-symbol work is nonzero.
double speed_gain(const HwParams& h);

// Fraction of M-bit symbols whose positions are all frozen.
double gamma_of(const CodeSpec& spec, int M);

// The four reference operating points of the latency model: the 1024-bit
// code at L=4 with 64 processing units, M in {2,4,8} and both q choices.
std::vector<HwParams> latency_presets();

}  // namespace sdpolar::hw
