#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sdpolar/code_spec.hpp"
#include "sdpolar/sc_kernel.hpp"
#include "sdpolar/symbol_kernel.hpp"
#include "sdpolar/types.hpp"

namespace sdpolar {

// One scored expansion candidate: the parent path slot plus the appended
// symbol value.
struct Candidate {
    double score = 0.0;
    std::uint32_t parent = 0;
    std::uint32_t symbol = 0;
};

// Rank order of candidates: higher score first, then lower parent slot, then
// lower symbol value. A strict total order, so every sort is deterministic.
inline bool candidate_before(const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.parent != b.parent) return a.parent < b.parent;
    return a.symbol < b.symbol;
}

// Bitonic sorting unit: the better half of exactly 2L candidates, in rank
// order. L must be a power of two.
std::vector<Candidate> bs_sort(std::vector<Candidate> items);

// Two-stage pruning: the q best children per parent, then the L best of the
// remainder. Exact top-L selection whenever q >= L; finite scores always
// outrank masked (-inf) ones.
std::vector<Candidate> two_stage_prune(const std::vector<std::vector<Candidate>>& per_parent,
                                       int L, int q);

struct PruneConfig {
    int q = 1;
    enum class Sorter { Folded, Tree } sorter = Sorter::Folded;  // latency modelling only
};

// Bit-decision successive cancellation list decoding with list size L = 2^l.
BitVec scl_decode(const CodeSpec& spec, std::span<const LLPair> channel, int L,
                  const DecodeOptions& opt = {});

struct CaSclResult {
    BitVec u;
    bool crc_pass = false;
};

// CRC-aided list decoding: the most reliable CRC-valid path wins; if none
// passes, the plain list rule applies and crc_pass is false.
CaSclResult ca_scl_decode(const CodeSpec& spec, std::span<const LLPair> channel, int L,
                          const DecodeOptions& opt = {});

// Live path count after each symbol step, for inspection by tests.
struct ListTrace {
    std::vector<int> alpha_after;
};

// M-bit symbol-decision list decoding. All-frozen symbols extend every path
// with zeros and bypass scoring entirely; small expansions enumerate without
// pruning; otherwise candidates are scored and pruned in two stages.
BitVec sdscl_decode(const CodeSpec& spec, std::span<const LLPair> channel, int L, int M,
                    const PruneConfig& prune, const DecodeOptions& opt = {},
                    AdditionCounter* counter = nullptr, ListTrace* trace = nullptr);

}  // namespace sdpolar
