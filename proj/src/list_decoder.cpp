#include "sdpolar/list_decoder.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace sdpolar {

std::vector<Candidate> bs_sort(std::vector<Candidate> items) {
    const std::size_t n = items.size();
    if (n < 2 || !is_pow2(n))
        throw std::invalid_argument("bs_sort: input size must be 2L with L a power of two");
    // Batcher's bitonic network; ascending in rank order.
    for (std::size_t k = 2; k <= n; k <<= 1) {
        for (std::size_t j = k >> 1; j > 0; j >>= 1) {
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t l = i ^ j;
                if (l <= i) continue;
                const bool up = (i & k) == 0;
                if (up ? candidate_before(items[l], items[i])
                       : candidate_before(items[i], items[l]))
                    std::swap(items[i], items[l]);
            }
        }
    }
    items.resize(n / 2);
    return items;
}

std::vector<Candidate> two_stage_prune(const std::vector<std::vector<Candidate>>& per_parent,
                                       int L, int q) {
    if (L < 1 || q < 1) throw std::invalid_argument("two_stage_prune: L and q must be positive");
    std::vector<Candidate> pool;
    for (const auto& children : per_parent) {
        std::vector<Candidate> kept(children);
        const std::size_t keep = std::min<std::size_t>(q, kept.size());
        std::partial_sort(kept.begin(), kept.begin() + keep, kept.end(), candidate_before);
        pool.insert(pool.end(), kept.begin(), kept.begin() + keep);
    }
    std::sort(pool.begin(), pool.end(), candidate_before);
    if (pool.size() > static_cast<std::size_t>(L)) pool.resize(L);
    return pool;
}

namespace {

void check_list_size(int L) {
    if (L < 1 || !is_pow2(static_cast<std::uint64_t>(L)))
        throw std::invalid_argument("list size must be a power of two");
}

// Bit-decision list engine shared by the plain and the CRC-aided decoders.
struct BitPath {
    PathMemory mem;
    BitVec decided;
    double metric = 0.0;
};

std::vector<BitPath> scl_engine(const CodeSpec& spec, std::span<const LLPair> channel,
                                int L, const DecodeOptions& opt) {
    const std::size_t N = spec.block_length();
    if (channel.size() != N)
        throw std::invalid_argument("scl_decode: channel message count mismatch");
    check_list_size(L);

    std::optional<PcmsTable> table;
    if (opt.pcms) table.emplace(channel, opt.mode);
    StageInput in{channel, opt.pcms ? &*table : nullptr, 0};

    std::vector<BitPath> paths;
    paths.reserve(L);
    paths.push_back(BitPath{PathMemory(spec.n()), {}, 0.0});
    paths[0].decided.reserve(N);

    for (std::size_t jj = 0; jj < N; ++jj) {
        const int alpha = static_cast<int>(paths.size());
        for (auto& p : paths) p.mem.advance(jj, in, opt.mode);

        if (spec.is_frozen(static_cast<std::uint32_t>(jj))) {
            for (auto& p : paths) {
                p.decided.push_back(0);
                p.mem.push_decision(0, jj);
            }
        } else if (2 * alpha <= L) {
            // Duplicate: slot i continues with 0, slot i+alpha with 1.
            for (int i = 0; i < alpha; ++i) paths.push_back(paths[i]);
            for (int i = 0; i < alpha; ++i) {
                paths[i].decided.push_back(0);
                paths[i].mem.push_decision(0, jj);
                paths[i + alpha].decided.push_back(1);
                paths[i + alpha].mem.push_decision(1, jj);
            }
        } else {
            std::vector<Candidate> cands(2 * L);
            for (int i = 0; i < L; ++i) {
                const LLPair& d = paths[i].mem.decision();
                cands[i] = Candidate{d.v[0], static_cast<std::uint32_t>(i), 0};
                cands[i + L] = Candidate{d.v[1], static_cast<std::uint32_t>(i), 1};
            }
            std::vector<Candidate> keep = bs_sort(std::move(cands));
            std::vector<BitPath> next;
            next.reserve(L);
            for (const Candidate& c : keep) {
                next.push_back(paths[c.parent]);
                next.back().decided.push_back(static_cast<Bit>(c.symbol));
                next.back().mem.push_decision(static_cast<Bit>(c.symbol), jj);
                next.back().metric = c.score;
            }
            paths = std::move(next);
        }
    }
    return paths;
}

std::size_t best_slot(const std::vector<BitPath>& paths) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < paths.size(); ++i)
        if (paths[i].metric > paths[best].metric) best = i;
    return best;
}

}  // namespace

BitVec scl_decode(const CodeSpec& spec, std::span<const LLPair> channel, int L,
                  const DecodeOptions& opt) {
    auto paths = scl_engine(spec, channel, L, opt);
    return paths[best_slot(paths)].decided;
}

CaSclResult ca_scl_decode(const CodeSpec& spec, std::span<const LLPair> channel, int L,
                          const DecodeOptions& opt) {
    if (!spec.crc())
        throw unsupported_operation("ca_scl_decode: code has no CRC configured");
    auto paths = scl_engine(spec, channel, L, opt);

    std::vector<std::size_t> order(paths.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return paths[a].metric > paths[b].metric;
    });
    for (std::size_t i : order)
        if (check_crc(spec, extract_info(spec, paths[i].decided)))
            return CaSclResult{paths[i].decided, true};
    return CaSclResult{paths[order[0]].decided, false};
}

namespace {

struct SymbolPath {
    SymbolPathMemory mem;
    BitVec decided;
    double metric = 0.0;
};

void append_symbol(SymbolPath& p, std::uint32_t value, int j, int M) {
    for (int b = 0; b < M; ++b)
        p.decided.push_back(static_cast<Bit>((value >> (M - 1 - b)) & 1u));
    p.mem.push_symbol(value, j);
}

}  // namespace

BitVec sdscl_decode(const CodeSpec& spec, std::span<const LLPair> channel, int L, int M,
                    const PruneConfig& prune, const DecodeOptions& opt,
                    AdditionCounter* counter, ListTrace* trace) {
    const int N = spec.block_length();
    if (channel.size() != static_cast<std::size_t>(N))
        throw std::invalid_argument("sdscl_decode: channel message count mismatch");
    if (M < 1 || !is_pow2(static_cast<std::uint64_t>(M)) || N % M != 0)
        throw std::invalid_argument("sdscl_decode: symbol width must be a power of two dividing N");
    check_list_size(L);
    if (prune.q < 1 || prune.q > (1 << M))
        throw std::invalid_argument("sdscl_decode: q must be in 1..2^M");
    const int m = ilog2(static_cast<std::uint64_t>(M));
    if (opt.pcms && m == spec.n())
        throw std::invalid_argument("sdscl_decode: precomputed stage needs at least one transform stage");

    std::optional<PcmsTable> table;
    if (opt.pcms) table.emplace(channel, opt.mode);
    StageInput in{channel, opt.pcms ? &*table : nullptr, 0};

    std::vector<SymbolPath> paths;
    paths.reserve(L);
    paths.push_back(SymbolPath{SymbolPathMemory(spec.n(), m), {}, 0.0});
    paths[0].decided.reserve(N);

    for (int j = 0; j < N / M; ++j) {
        const int alpha = static_cast<int>(paths.size());
        for (auto& p : paths) p.mem.advance(j, in, opt.mode);

        const int info = spec.info_bits_in_symbol(j, M);
        const long long beta = 1ll << info;

        if (info == 0) {
            for (auto& p : paths) append_symbol(p, 0, j, M);
            if (trace) trace->alpha_after.push_back(static_cast<int>(paths.size()));
            continue;
        }
        if (alpha * beta <= L) {
            // Room for every expansion: slot i + k*alpha takes candidate k.
            auto values = admissible_symbol_values(spec, j, M);
            std::vector<SymbolPath> next;
            next.reserve(alpha * beta);
            for (long long k = 0; k < beta; ++k)
                for (int i = 0; i < alpha; ++i) next.push_back(paths[i]);
            for (long long k = 0; k < beta; ++k)
                for (int i = 0; i < alpha; ++i)
                    append_symbol(next[k * alpha + i], values[k], j, M);
            paths = std::move(next);
            if (trace) trace->alpha_after.push_back(static_cast<int>(paths.size()));
            continue;
        }

        std::vector<std::vector<Candidate>> per_parent(alpha);
        for (int i = 0; i < alpha; ++i) {
            auto scored = scored_candidates(spec, paths[i].mem, j, M, counter);
            per_parent[i].reserve(scored.size());
            for (const auto& [value, score] : scored)
                per_parent[i].push_back(Candidate{score, static_cast<std::uint32_t>(i), value});
        }

        std::vector<Candidate> keep;
        if (alpha < L) {
            // List not full yet: the pruning network is not engaged, select
            // the exact best L of the alpha*beta expansions.
            keep = two_stage_prune(per_parent, L, 1 << M);
        } else {
            keep = two_stage_prune(per_parent, L, prune.q);
        }

        std::vector<SymbolPath> next;
        next.reserve(keep.size());
        for (const Candidate& c : keep) {
            next.push_back(paths[c.parent]);
            append_symbol(next.back(), c.symbol, j, M);
            next.back().metric = c.score;
        }
        paths = std::move(next);
        if (trace) trace->alpha_after.push_back(static_cast<int>(paths.size()));
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < paths.size(); ++i)
        if (paths[i].metric > paths[best].metric) best = i;
    return paths[best].decided;
}

}  // namespace sdpolar
