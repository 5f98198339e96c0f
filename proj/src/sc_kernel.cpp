#include "sdpolar/sc_kernel.hpp"

#include <bit>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace sdpolar {

namespace {

constexpr double kLog2 = 0.6931471805599453;

double logsumexp2(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    double hi = a > b ? a : b;
    double lo = a > b ? b : a;
    return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace

LLPair f_transform(const LLPair& a, const LLPair& b, KernelMode mode) {
    if (mode == KernelMode::MaxApprox) {
        return LLPair(std::max(a.v[0] + b.v[0], a.v[1] + b.v[1]),
                      std::max(a.v[1] + b.v[0], a.v[0] + b.v[1]));
    }
    return LLPair(logsumexp2(a.v[0] + b.v[0], a.v[1] + b.v[1]) - kLog2,
                  logsumexp2(a.v[1] + b.v[0], a.v[0] + b.v[1]) - kLog2);
}

LLPair g_transform(const LLPair& a, const LLPair& b, Bit psum, KernelMode mode) {
    LLPair out(a.v[psum & 1] + b.v[0], a.v[1 ^ (psum & 1)] + b.v[1]);
    if (mode == KernelMode::ExactSum) {
        out.v[0] -= kLog2;
        out.v[1] -= kLog2;
    }
    return out;
}

PcmsTable::PcmsTable(std::span<const LLPair> channel, KernelMode mode) {
    if (channel.size() < 2 || channel.size() % 2 != 0)
        throw std::invalid_argument("pcms: channel length must be even");
    const std::size_t pairs = channel.size() / 2;
    f_.resize(pairs);
    g_.resize(2 * pairs);
    for (std::size_t p = 0; p < pairs; ++p) {
        f_[p] = f_transform(channel[2 * p], channel[2 * p + 1], mode);
        g_[2 * p] = g_transform(channel[2 * p], channel[2 * p + 1], 0, mode);
        g_[2 * p + 1] = g_transform(channel[2 * p], channel[2 * p + 1], 1, mode);
    }
}

PathMemory::PathMemory(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("path memory needs at least one stage");
    stage_.resize(n + 1);
    psum_.resize(n + 1);
    for (int s = 1; s <= n; ++s) {
        stage_[s].resize(std::size_t(1) << (n - s));
        psum_[s].assign(std::size_t(1) << (n - s), 0);
    }
}

void PathMemory::advance(std::size_t jj, const StageInput& in, KernelMode mode) {
    const int first = (jj == 0) ? 1 : n_ - std::countr_zero(jj);
    for (int s = first; s <= n_; ++s) {
        const bool gphase = (jj >> (n_ - s)) & 1;
        auto& cur = stage_[s];
        if (s == 1 && in.pcms != nullptr) {
            for (std::size_t b = 0; b < cur.size(); ++b)
                cur[b] = gphase ? in.pcms->g_out(in.pair_offset + b, psum_[1][b])
                                : in.pcms->f_out(in.pair_offset + b);
            continue;
        }
        const LLPair* prev = (s == 1) ? in.channel.data() : stage_[s - 1].data();
        for (std::size_t b = 0; b < cur.size(); ++b)
            cur[b] = gphase ? g_transform(prev[2 * b], prev[2 * b + 1], psum_[s][b], mode)
                            : f_transform(prev[2 * b], prev[2 * b + 1], mode);
    }
}

void PathMemory::push_decision(Bit u, std::size_t jj) {
    carry_.assign(1, u);
    std::size_t phase = jj;
    for (int s = n_; s >= 1; --s) {
        auto& ps = psum_[s];
        if ((phase & 1) == 0) {
            // First half of the pair at this stage: buffer and stop.
            for (std::size_t b = 0; b < carry_.size(); ++b) ps[b] = carry_[b];
            return;
        }
        // Pair complete: emit the combined and the pass-through halves below.
        BitVec next(carry_.size() * 2);
        for (std::size_t b = 0; b < carry_.size(); ++b) {
            next[2 * b] = ps[b] ^ carry_[b];
            next[2 * b + 1] = carry_[b];
        }
        carry_ = std::move(next);
        phase >>= 1;
    }
    reencoded_ = carry_;
}

BitVec sc_decode(const CodeSpec& spec, std::span<const LLPair> channel,
                 const DecodeOptions& opt) {
    const std::size_t N = spec.block_length();
    if (channel.size() != N)
        throw std::invalid_argument("sc_decode: channel message count mismatch");
    std::optional<PcmsTable> table;
    if (opt.pcms) table.emplace(channel, opt.mode);
    StageInput in{channel, opt.pcms ? &*table : nullptr, 0};

    PathMemory mem(spec.n());
    BitVec u(N, 0);
    for (std::size_t jj = 0; jj < N; ++jj) {
        mem.advance(jj, in, opt.mode);
        Bit bit = 0;
        if (!spec.is_frozen(static_cast<std::uint32_t>(jj))) {
            const LLPair& d = mem.decision();
            bit = d.v[1] >= d.v[0] ? 1 : 0;
        }
        u[jj] = bit;
        mem.push_decision(bit, jj);
    }
    return u;
}

}  // namespace sdpolar
