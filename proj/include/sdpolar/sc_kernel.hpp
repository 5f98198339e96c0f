#pragma once

#include <span>
#include <vector>

#include "sdpolar/code_spec.hpp"
#include "sdpolar/types.hpp"

namespace sdpolar {

// Single-step channel transformations over a pair of equal-length segments.
// MaxApprox keeps the dominating term and drops constants; ExactSum keeps the
// full log-sum and the -log 2 normalization.
LLPair f_transform(const LLPair& a, const LLPair& b, KernelMode mode = KernelMode::MaxApprox);
LLPair g_transform(const LLPair& a, const LLPair& b, Bit psum,
                   KernelMode mode = KernelMode::MaxApprox);

// All possible outgoing messages of the first transform stage, one f pair and
// one g quad per adjacent channel pair. Depends only on the received word, so
// a single table serves every decoding path and the channel stage itself is
// never read again.
class PcmsTable {
  public:
    PcmsTable(std::span<const LLPair> channel, KernelMode mode);

    const LLPair& f_out(std::size_t pair) const { return f_[pair]; }
    const LLPair& g_out(std::size_t pair, Bit psum) const { return g_[2 * pair + psum]; }
    std::size_t pairs() const { return f_.size(); }

  private:
    std::vector<LLPair> f_;
    std::vector<LLPair> g_;
};

// Channel-side source of a decoder segment. When pcms is set, stage-1
// messages come from the table and `channel` is ignored for that stage.
struct StageInput {
    std::span<const LLPair> channel;
    const PcmsTable* pcms = nullptr;
    std::size_t pair_offset = 0;  // index of the segment's first channel pair
};

struct DecodeOptions {
    KernelMode mode = KernelMode::MaxApprox;
    bool pcms = false;
};

// Per-path message memory for one length-2^n segment. Stage s holds 2^(n-s)
// message pairs; stage sizes and the partial-sum buffers follow the message
// flow graph of the code.
class PathMemory {
  public:
    explicit PathMemory(int n);

    int num_stages() const { return n_; }

    // Recomputes every stage whose phase changes at bit index jj (0-based).
    void advance(std::size_t jj, const StageInput& in, KernelMode mode);

    // Top-stage message for the phase last advanced to.
    const LLPair& decision() const { return stage_[n_][0]; }

    // Feeds one decided bit into the partial-sum buffers.
    void push_decision(Bit u, std::size_t jj);

    // Re-encoded codeword of the decided bits; filled when the last decision
    // of the segment is pushed.
    const BitVec& reencoded() const { return reencoded_; }

    std::span<const Bit> psums(int stage) const { return psum_[stage]; }

  private:
    int n_;
    std::vector<std::vector<LLPair>> stage_;
    std::vector<std::vector<Bit>> psum_;
    BitVec carry_;
    BitVec reencoded_;
};

// Bit-decision successive cancellation. Frozen positions decode to zero; an
// information bit decodes to 1 exactly when ll(1) >= ll(0).
BitVec sc_decode(const CodeSpec& spec, std::span<const LLPair> channel,
                 const DecodeOptions& opt = {});

}  // namespace sdpolar
