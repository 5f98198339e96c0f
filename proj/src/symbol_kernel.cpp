#include "sdpolar/symbol_kernel.hpp"

#include <optional>
#include <stdexcept>

namespace sdpolar {

namespace {

// Splits the 2*half-bit index z into its odd- and even-position subsymbols
// (1-based positions, first bit most significant).
std::pair<std::uint32_t, std::uint32_t> deinterleave(std::uint32_t z, int half) {
    std::uint32_t zo = 0, ze = 0;
    for (int t = 0; t < half; ++t) {
        zo = (zo << 1) | ((z >> (2 * (half - t) - 1)) & 1u);
        ze = (ze << 1) | ((z >> (2 * (half - t) - 2)) & 1u);
    }
    return {zo, ze};
}

void combine_into(const SymbolDist& a, const SymbolDist& b, SymbolDist& out,
                  std::uint64_t& adds) {
    const int half = a.phi;
    out.phi = 2 * half;
    out.ll.resize(std::size_t(1) << out.phi);
    const std::uint32_t sub = 1u << half;
    for (std::uint32_t zo = 0; zo < sub; ++zo) {
        for (std::uint32_t ze = 0; ze < sub; ++ze) {
            std::uint32_t z = 0;
            for (int t = half - 1; t >= 0; --t) {
                z |= ((zo >> t) & 1u) << (2 * t + 1);
                z |= ((ze >> t) & 1u) << (2 * t);
            }
            out.ll[z] = a.ll[zo ^ ze] + b.ll[ze];
        }
    }
    adds += std::size_t(1) << out.phi;
}

}  // namespace

std::vector<std::uint32_t> admissible_symbol_values(const CodeSpec& spec, int j, int M) {
    std::vector<int> info_rel;
    for (int p = 0; p < M; ++p)
        if (!spec.is_frozen(static_cast<std::uint32_t>(j * M + p))) info_rel.push_back(p);
    const std::uint32_t count = 1u << info_rel.size();
    std::vector<std::uint32_t> values(count);
    for (std::uint32_t k = 0; k < count; ++k) {
        std::uint32_t z = 0;
        for (std::size_t r = 0; r < info_rel.size(); ++r) {
            std::uint32_t bit = (k >> (info_rel.size() - 1 - r)) & 1u;
            z |= bit << (M - 1 - info_rel[r]);
        }
        values[k] = z;
    }
    return values;
}

namespace {

// Full combination tree of the M sub-segment pairs up to the two half-width
// distributions feeding the final step. Returns the two halves; for M == 2
// these are the leaves themselves.
std::pair<SymbolDist, SymbolDist> build_halves(std::span<const LLPair> leaves,
                                               std::uint64_t& adds) {
    const int M = static_cast<int>(leaves.size());
    std::vector<SymbolDist> cur(M);
    for (int t = 0; t < M; ++t) {
        cur[t].phi = 1;
        cur[t].ll = {leaves[t].v[0], leaves[t].v[1]};
    }
    while (cur.size() > 2) {
        std::vector<SymbolDist> next(cur.size() / 2);
        for (std::size_t r = 0; r < next.size(); ++r)
            combine_into(cur[2 * r], cur[2 * r + 1], next[r], adds);
        cur = std::move(next);
    }
    return {std::move(cur[0]), std::move(cur[1])};
}

void check_symbol_args(const CodeSpec& spec, const SymbolPathMemory& mem, int j, int M) {
    if (M != mem.symbol_bits())
        throw std::invalid_argument("symbol width does not match the memory layout");
    if (j < 0 || (j + 1) * M > spec.block_length())
        throw std::invalid_argument("symbol index out of range");
}

}  // namespace

SymbolDist combine(const SymbolDist& a, const SymbolDist& b, AdditionCounter* counter) {
    if (a.phi != b.phi || a.phi < 1)
        throw std::invalid_argument("combine: operand widths must match");
    if (a.ll.size() != (std::size_t(1) << a.phi) || b.ll.size() != (std::size_t(1) << b.phi))
        throw std::invalid_argument("combine: distribution size mismatch");
    SymbolDist out;
    std::uint64_t adds = 0;
    combine_into(a, b, out, adds);
    if (counter) counter->record(adds);
    return out;
}

SymbolPathMemory::SymbolPathMemory(int n, int m) : n_(n), m_(m) {
    if (n < 1 || m < 0 || m > n)
        throw std::invalid_argument("symbol memory: invalid segment/symbol exponents");
    leaves_.resize(std::size_t(1) << m);
    if (n_ > m_) {
        subs_.reserve(leaves_.size());
        for (std::size_t t = 0; t < leaves_.size(); ++t) subs_.emplace_back(n_ - m_);
    }
}

void SymbolPathMemory::advance(std::size_t symbol, const StageInput& in, KernelMode mode) {
    const std::size_t M = leaves_.size();
    if (n_ == m_) {
        for (std::size_t t = 0; t < M; ++t) leaves_[t] = in.channel[t];
        return;
    }
    const std::size_t sub_len = std::size_t(1) << (n_ - m_);
    for (std::size_t t = 0; t < M; ++t) {
        StageInput sub_in{in.channel.subspan(t * sub_len, sub_len), in.pcms,
                          in.pair_offset + t * sub_len / 2};
        subs_[t].advance(symbol, sub_in, mode);
        leaves_[t] = subs_[t].decision();
    }
}

void SymbolPathMemory::push_symbol(std::uint32_t value, std::size_t symbol) {
    if (n_ == m_) return;
    const int M = 1 << m_;
    BitVec bits(M);
    for (int p = 0; p < M; ++p) bits[p] = static_cast<Bit>((value >> (M - 1 - p)) & 1u);
    BitVec w = polar_transform(bits);
    for (int t = 0; t < M; ++t) subs_[t].push_decision(w[t], symbol);
}

SymbolDist symbol_dist(const CodeSpec& spec, const SymbolPathMemory& mem, int j, int M,
                       AdditionCounter* counter) {
    check_symbol_args(spec, mem, j, M);
    const auto leaves = mem.leaves();
    std::uint64_t adds = 0;
    SymbolDist out(M);
    if (M == 1) {
        out.ll = {leaves[0].v[0], spec.is_frozen(j) ? kNegInf : leaves[0].v[1]};
        if (counter) counter->record(adds);
        return out;
    }
    auto [a, b] = build_halves(leaves, adds);
    out.ll.assign(out.ll.size(), kNegInf);
    const int half = M / 2;
    for (std::uint32_t z : admissible_symbol_values(spec, j, M)) {
        auto [zo, ze] = deinterleave(z, half);
        out.ll[z] = a.ll[zo ^ ze] + b.ll[ze];
        ++adds;
    }
    if (counter) counter->record(adds);
    return out;
}

SymbolDist direct_mapping_dist(const CodeSpec& spec, const SymbolPathMemory& mem, int j,
                               int M, AdditionCounter* counter) {
    check_symbol_args(spec, mem, j, M);
    const auto leaves = mem.leaves();
    std::uint64_t adds = 0;
    SymbolDist out(M);
    if (M == 1) {
        out.ll = {leaves[0].v[0], spec.is_frozen(j) ? kNegInf : leaves[0].v[1]};
        if (counter) counter->record(adds);
        return out;
    }
    out.ll.assign(out.ll.size(), kNegInf);
    BitVec bits(M);
    for (std::uint32_t z : admissible_symbol_values(spec, j, M)) {
        for (int p = 0; p < M; ++p) bits[p] = static_cast<Bit>((z >> (M - 1 - p)) & 1u);
        BitVec w = polar_transform(bits);
        double sum = leaves[0].ll(w[0]);
        for (int t = 1; t < M; ++t) sum += leaves[t].ll(w[t]);
        out.ll[z] = sum;
        adds += M - 1;
    }
    if (counter) counter->record(adds);
    return out;
}

std::vector<std::pair<std::uint32_t, double>> scored_candidates(
    const CodeSpec& spec, const SymbolPathMemory& mem, int j, int M,
    AdditionCounter* counter) {
    check_symbol_args(spec, mem, j, M);
    const auto leaves = mem.leaves();
    std::uint64_t adds = 0;
    std::vector<std::pair<std::uint32_t, double>> scored;
    if (M == 1) {
        if (spec.is_frozen(j)) {
            scored.emplace_back(0u, leaves[0].v[0]);
        } else {
            scored.emplace_back(0u, leaves[0].v[0]);
            scored.emplace_back(1u, leaves[0].v[1]);
        }
        if (counter) counter->record(adds);
        return scored;
    }
    auto [a, b] = build_halves(leaves, adds);
    const int half = M / 2;
    auto values = admissible_symbol_values(spec, j, M);
    scored.reserve(values.size());
    for (std::uint32_t z : values) {
        auto [zo, ze] = deinterleave(z, half);
        scored.emplace_back(z, a.ll[zo ^ ze] + b.ll[ze]);
        ++adds;
    }
    if (counter) counter->record(adds);
    return scored;
}

BitVec sdsc_decode(const CodeSpec& spec, std::span<const LLPair> channel, int M,
                   const DecodeOptions& opt, AdditionCounter* counter) {
    const int N = spec.block_length();
    if (channel.size() != static_cast<std::size_t>(N))
        throw std::invalid_argument("sdsc_decode: channel message count mismatch");
    if (M < 1 || !is_pow2(static_cast<std::uint64_t>(M)) || N % M != 0)
        throw std::invalid_argument("sdsc_decode: symbol width must be a power of two dividing N");
    const int m = ilog2(static_cast<std::uint64_t>(M));
    if (opt.pcms && m == spec.n())
        throw std::invalid_argument("sdsc_decode: precomputed stage needs at least one transform stage");

    std::optional<PcmsTable> table;
    if (opt.pcms) table.emplace(channel, opt.mode);
    StageInput in{channel, opt.pcms ? &*table : nullptr, 0};

    SymbolPathMemory mem(spec.n(), m);
    BitVec u(N, 0);
    for (int j = 0; j < N / M; ++j) {
        mem.advance(j, in, opt.mode);
        std::uint32_t value = 0;
        if (spec.info_bits_in_symbol(j, M) > 0) {
            if (M == 1) {
                const LLPair& d = mem.leaves()[0];
                value = d.v[1] >= d.v[0] ? 1 : 0;
            } else {
                SymbolDist dist = symbol_dist(spec, mem, j, M, counter);
                double best = kNegInf;
                for (std::uint32_t z = 0; z < dist.ll.size(); ++z) {
                    if (dist.ll[z] > best) {
                        best = dist.ll[z];
                        value = z;
                    }
                }
            }
        }
        for (int p = 0; p < M; ++p)
            u[j * M + p] = static_cast<Bit>((value >> (M - 1 - p)) & 1u);
        mem.push_symbol(value, j);
    }
    return u;
}

}  // namespace sdpolar
