#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sdpolar/channel.hpp"
#include "sdpolar/code_spec.hpp"
#include "sdpolar/oracle_suites.hpp"
#include "sdpolar/sc_kernel.hpp"
#include "support/oracles.hpp"

using namespace sdpolar;

TEST_CASE("f_transform: worked values and symmetry") {
    LLPair zero(0, 0);
    auto z = f_transform(zero, zero);
    CHECK(z.ll(0) == 0);
    CHECK(z.ll(1) == 0);

    LLPair a(5, 0), b(3, 0);
    auto out = f_transform(a, b);
    CHECK(out.ll(0) == 8);
    CHECK(out.ll(1) == 5);
    auto swapped = f_transform(b, a);
    CHECK(swapped.ll(0) == out.ll(0));
    CHECK(swapped.ll(1) == out.ll(1));
}

TEST_CASE("g_transform: worked values for both partial sums") {
    LLPair a(5, 0), b(3, 0);
    auto g0 = g_transform(a, b, 0);
    CHECK(g0.ll(0) == 8);
    CHECK(g0.ll(1) == 0);
    auto g1 = g_transform(a, b, 1);
    CHECK(g1.ll(0) == 3);
    CHECK(g1.ll(1) == 5);
    auto pass = g_transform(LLPair(0, 0), b, 0);
    CHECK(pass.ll(0) == b.ll(0));
    CHECK(pass.ll(1) == b.ll(1));
}

TEST_CASE("exact kernels reproduce the brute-force channel recursion") {
    std::mt19937_64 rng(23);
    for (int n = 2; n <= 3; ++n) {
        const int N = 1 << n;
        for (int it = 0; it < 30; ++it) {
            auto lls = oracle::random_lls(N, rng);
            BitVec prefix(N, 0);
            for (auto& b : prefix) b = static_cast<Bit>(rng() & 1u);
            const int j = static_cast<int>(rng() % N);

            PathMemory mem(n);
            StageInput in{lls, nullptr, 0};
            for (int jj = 0; jj <= j; ++jj) {
                mem.advance(jj, in, KernelMode::ExactSum);
                if (jj < j) mem.push_decision(prefix[jj], jj);
            }
            LLPair ref = oracles::brute_force_bit_pair(lls, prefix, j);
            for (int b = 0; b < 2; ++b) {
                const double err = std::abs(mem.decision().ll(b) - ref.ll(b));
                CHECK(err <= 1e-9 * std::max(1.0, std::abs(ref.ll(b))));
            }
        }
    }
}

TEST_CASE("partial sums re-encode the decided word") {
    std::mt19937_64 rng(29);
    const int n = 4;
    PathMemory mem(n);
    auto lls = oracle::random_lls(1 << n, rng);
    StageInput in{lls, nullptr, 0};
    BitVec u(1 << n);
    for (auto& b : u) b = static_cast<Bit>(rng() & 1u);
    for (std::size_t jj = 0; jj < u.size(); ++jj) {
        mem.advance(jj, in, KernelMode::MaxApprox);
        mem.push_decision(u[jj], jj);
    }
    CHECK(mem.reencoded() == polar_transform(u));
}

TEST_CASE("sc_decode: noiseless recovery") {
    auto spec = construct(4, 8, 0.5);
    ChannelParams p{8.0, 0.5, 42};
    std::mt19937_64 rng(31);
    for (int it = 0; it < 20; ++it) {
        BitVec info(8);
        for (auto& b : info) b = static_cast<Bit>(rng() & 1u);
        BitVec x = encode(spec, place_info(spec, info));
        std::vector<double> y(x.size());
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = 1.0 - 2.0 * x[i];
        auto u = sc_decode(spec, channel_lls(y, p.sigma2()));
        CHECK(extract_info(spec, u) == info);
    }
}

TEST_CASE("sc_decode: exhaustive rate-one recovery at N=8") {
    CodeSpec spec(3, {});
    for (std::uint32_t w = 0; w < 256; ++w) {
        BitVec u(8);
        for (int i = 0; i < 8; ++i) u[i] = static_cast<Bit>((w >> (7 - i)) & 1u);
        BitVec x = encode(spec, u);
        std::vector<double> y(8);
        for (int i = 0; i < 8; ++i) y[i] = 1.0 - 2.0 * x[i];
        CHECK(sc_decode(spec, channel_lls(y, 0.5)) == u);
    }
}

TEST_CASE("sc_decode: N=2 with a frozen first bit follows the feedback rule") {
    // Received word pushes both code bits toward 1; the frozen bit pins
    // u1 = 0, so the second data bit must absorb the disagreement.
    CodeSpec spec(1, {0});
    std::vector<double> y{-0.9, -1.1};
    auto u = sc_decode(spec, channel_lls(y, 0.5));
    CHECK(u == BitVec{0, 1});
}

TEST_CASE("ties on the decision ratio resolve to 1") {
    CodeSpec spec(1, {});
    std::vector<LLPair> lls{LLPair(0.0, 0.0), LLPair(0.0, 0.0)};
    CHECK(sc_decode(spec, lls) == BitVec{1, 1});
}

TEST_CASE("pcms table replaces the channel stage bit-exactly") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 200; ++it) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const int N = 1 << n;
        auto spec = oracle::random_code(n, 1 + static_cast<int>(rng() % N), rng);
        auto lls = oracle::random_lls(N, rng);
        for (KernelMode mode : {KernelMode::MaxApprox, KernelMode::ExactSum}) {
            DecodeOptions plain{mode, false};
            DecodeOptions pre{mode, true};
            CHECK(sc_decode(spec, lls, plain) == sc_decode(spec, lls, pre));
        }
    }
}

TEST_CASE("pcms table stores every reachable first-stage message") {
    std::mt19937_64 rng(41);
    auto lls = oracle::random_lls(8, rng);
    PcmsTable table(lls, KernelMode::MaxApprox);
    CHECK(table.pairs() == 4);
    CHECK(table.pairs() * 6 == 24);  // 2 f-values + 4 g-values per node
    for (std::size_t p = 0; p < 4; ++p) {
        auto f = f_transform(lls[2 * p], lls[2 * p + 1]);
        CHECK(table.f_out(p).ll(0) == f.ll(0));
        CHECK(table.f_out(p).ll(1) == f.ll(1));
        for (Bit ps : {Bit(0), Bit(1)}) {
            auto g = g_transform(lls[2 * p], lls[2 * p + 1], ps);
            CHECK(table.g_out(p, ps).ll(0) == g.ll(0));
            CHECK(table.g_out(p, ps).ll(1) == g.ll(1));
        }
    }
}
