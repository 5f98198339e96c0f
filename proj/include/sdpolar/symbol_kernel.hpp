#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sdpolar/code_spec.hpp"
#include "sdpolar/sc_kernel.hpp"
#include "sdpolar/types.hpp"

namespace sdpolar {

// Instrumented count of the additions spent on symbol distributions. One
// per_call entry is recorded for each distribution built.
struct AdditionCounter {
    std::uint64_t total = 0;
    std::vector<std::uint64_t> per_call;

    void record(std::uint64_t adds) {
        total += adds;
        per_call.push_back(adds);
    }
};

// Log-domain distribution over the 2^phi values of a phi-bit symbol. The
// index encodes the symbol bits with the first (lowest data index) bit as
// the most significant.
struct SymbolDist {
    int phi = 0;
    std::vector<double> ll;

    SymbolDist() = default;
    explicit SymbolDist(int phi_bits)
        : phi(phi_bits), ll(std::size_t(1) << phi_bits, 0.0) {}
};

// Single-step combination of two half-width symbol channels over adjacent
// segments: out(u) = a(u_odd ^ u_even) + b(u_even), one addition per entry.
SymbolDist combine(const SymbolDist& a, const SymbolDist& b,
                   AdditionCounter* counter = nullptr);

// Message state of an M-bit symbol decoder: M independent bit-transform
// sub-segments of length N/M, each advanced one phase per symbol.
class SymbolPathMemory {
  public:
    SymbolPathMemory(int n, int m);

    int symbol_bits() const { return 1 << m_; }
    int sub_length() const { return 1 << (n_ - m_); }

    void advance(std::size_t symbol, const StageInput& in, KernelMode mode);

    // One message pair per sub-segment for the phase last advanced to.
    std::span<const LLPair> leaves() const { return leaves_; }

    // Feeds the M decided bits of symbol `symbol` back: the per-substream
    // bits are the polar transform of the symbol value.
    void push_symbol(std::uint32_t value, std::size_t symbol);

  private:
    int n_;
    int m_;
    std::vector<PathMemory> subs_;
    std::vector<LLPair> leaves_;
};

// Distribution of the M-bit symbol channel for symbol j, built with the
// recursive channel combination. Candidates that set a frozen position are
// masked to -inf; masked entries cost no additions.
SymbolDist symbol_dist(const CodeSpec& spec, const SymbolPathMemory& mem, int j, int M,
                       AdditionCounter* counter = nullptr);

// Same distribution via the per-substream remap: each candidate symbol maps
// to M substream bits and M-1 additions. Kept as the independent check of
// the recursive route.
SymbolDist direct_mapping_dist(const CodeSpec& spec, const SymbolPathMemory& mem, int j,
                               int M, AdditionCounter* counter = nullptr);

// Admissible values of symbol j in ascending order: frozen positions pinned
// to zero, info positions free.
std::vector<std::uint32_t> admissible_symbol_values(const CodeSpec& spec, int j, int M);

// Scores of the admissible candidates only (frozen positions pinned to 0),
// as (symbol value, log-likelihood) in ascending value order. Same addition
// count as the masked full distribution.
std::vector<std::pair<std::uint32_t, double>> scored_candidates(
    const CodeSpec& spec, const SymbolPathMemory& mem, int j, int M,
    AdditionCounter* counter = nullptr);

// M-bit symbol-decision successive cancellation: every symbol is decided
// jointly by maximizing its symbol distribution over admissible candidates.
BitVec sdsc_decode(const CodeSpec& spec, std::span<const LLPair> channel, int M,
                   const DecodeOptions& opt = {}, AdditionCounter* counter = nullptr);

}  // namespace sdpolar
