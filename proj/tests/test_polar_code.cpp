#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>
#include <set>

#include "sdpolar/channel.hpp"
#include "sdpolar/code_spec.hpp"
#include "sdpolar/oracle_suites.hpp"
#include "support/oracles.hpp"

using namespace sdpolar;

TEST_CASE("construct: rate-one and rate-zero codes") {
    CHECK(construct(2, 4, 0.5).frozen_positions().empty());
    auto all = construct(2, 0, 0.5).frozen_positions();
    CHECK(all == std::vector<std::uint32_t>{0, 1, 2, 3});
}

TEST_CASE("construct: erasure recursion picks the four worst channels of N=8") {
    // By hand from z -> (2z - z^2, z^2) at 0.5: channels 1,2,3,5 (1-based)
    // carry the largest erasure parameters.
    auto spec = construct(3, 4, 0.5);
    CHECK(spec.frozen_positions() == std::vector<std::uint32_t>{0, 1, 2, 4});

    auto z = bec_bhattacharyya(3, 0.5L);
    CHECK(z[0] == doctest::Approx(0.99609375).epsilon(1e-12));
    CHECK(z[7] == doctest::Approx(0.00390625).epsilon(1e-12));
}

TEST_CASE("construct: rejects bad parameters") {
    CHECK_THROWS_AS(construct(3, 9, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(construct(1, 1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(construct(21, 8, 0.5), std::invalid_argument);
}

TEST_CASE("construct: deterministic and nested across K") {
    auto base = construct(6, 20, 0.4);
    CHECK(construct(6, 20, 0.4).frozen_positions() == base.frozen_positions());
    for (int K = 1; K < 64; ++K) {
        auto lo = construct(6, K, 0.4).frozen_positions();
        auto hi = construct(6, K + 1, 0.4).frozen_positions();
        std::set<std::uint32_t> lo_set(lo.begin(), lo.end());
        for (auto pos : hi) CHECK(lo_set.count(pos) == 1);
    }
}

TEST_CASE("encode: N=2 butterfly and zero input") {
    CodeSpec spec(1, {});
    CHECK(encode(spec, {0, 0}) == BitVec{0, 0});
    CHECK(encode(spec, {1, 0}) == BitVec{1, 0});
    CHECK(encode(spec, {0, 1}) == BitVec{1, 1});
    CHECK(encode(spec, {1, 1}) == BitVec{0, 1});
    CHECK_THROWS_AS(encode(spec, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("encode: unit vector picks out a generator row") {
    CodeSpec spec(3, {});
    BitVec u(8, 0);
    u[1] = 1;  // index 2, 1-based
    CHECK(encode(spec, u) == oracles::matrix_encode(u));
}

TEST_CASE("encode: matches the matrix product for random words") {
    std::mt19937_64 rng(7);
    for (int n = 2; n <= 5; ++n) {
        CodeSpec spec(n, {});
        for (int it = 0; it < 50; ++it) {
            BitVec u(1u << n);
            for (auto& b : u) b = static_cast<Bit>(rng() & 1u);
            CHECK(encode(spec, u) == oracles::matrix_encode(u));
        }
    }
}

TEST_CASE("encode: GF(2)-linear and an involution") {
    std::mt19937_64 rng(11);
    CodeSpec spec(5, {});
    for (int it = 0; it < 100; ++it) {
        BitVec u(32), v(32);
        for (auto& b : u) b = static_cast<Bit>(rng() & 1u);
        for (auto& b : v) b = static_cast<Bit>(rng() & 1u);
        BitVec uv(32);
        for (int i = 0; i < 32; ++i) uv[i] = u[i] ^ v[i];
        BitVec xu = encode(spec, u), xv = encode(spec, v), xuv = encode(spec, uv);
        for (int i = 0; i < 32; ++i) CHECK(xuv[i] == (xu[i] ^ xv[i]));
        CHECK(encode(spec, xu) == u);  // bijective: the transform is its own inverse
    }
}

TEST_CASE("crc32c: check value and round trip") {
    auto spec = construct(7, 64, 0.5, CrcConfig::crc32c());
    CHECK(spec.payload_length() == 32);

    const char* msg = "123456789";
    Crc crc(CrcConfig::crc32c());
    std::span<const std::uint8_t> bytes(reinterpret_cast<const std::uint8_t*>(msg), 9);
    CHECK(crc.compute_bytes(bytes) == 0xE3069283u);

    // Independent route: reflected bit stream through explicit long division.
    auto bits = oracles::reflected_byte_bits(bytes);
    CHECK(oracles::crc_long_division(bits, CrcConfig::crc32c()) == 0xE3069283u);
    CHECK(crc.compute_bits(bits) == 0xE3069283u);

    std::mt19937_64 rng(3);
    for (int it = 0; it < 200; ++it) {
        BitVec payload(spec.payload_length());
        for (auto& b : payload) b = static_cast<Bit>(rng() & 1u);
        BitVec block = attach_crc(spec, payload);
        CHECK(block.size() == static_cast<std::size_t>(spec.info_length()));
        CHECK(check_crc(spec, block));
        CHECK(crc.compute_bits(payload) == oracles::crc_long_division(payload, CrcConfig::crc32c()));
    }
}

TEST_CASE("crc32c: every single-bit flip is detected") {
    auto spec = construct(7, 96, 0.5, CrcConfig::crc32c());
    CHECK(spec.payload_length() == 64);
    std::mt19937_64 rng(5);
    BitVec payload(64);
    for (auto& b : payload) b = static_cast<Bit>(rng() & 1u);
    BitVec block = attach_crc(spec, payload);
    for (std::size_t i = 0; i < block.size(); ++i) {
        block[i] ^= 1;
        CHECK_FALSE(check_crc(spec, block));
        block[i] ^= 1;
    }
}

TEST_CASE("crc: missing configuration is an unsupported operation") {
    auto spec = construct(3, 4, 0.5);
    CHECK_THROWS_AS(attach_crc(spec, BitVec(4, 0)), unsupported_operation);
    CHECK_THROWS_AS(check_crc(spec, BitVec(4, 0)), unsupported_operation);
}

TEST_CASE("place_info and extract_info invert each other") {
    auto spec = construct(3, 4, 0.5);
    BitVec info{1, 1, 0, 1};
    BitVec u = place_info(spec, info);
    // frozen set {1,2,3,5} leaves positions {4,6,7,8} (1-based) for data
    CHECK(u == BitVec{0, 0, 0, 1, 0, 1, 0, 1});
    CHECK(extract_info(spec, u) == info);

    CodeSpec rate1(3, {});
    BitVec full{1, 0, 1, 1, 0, 0, 1, 0};
    CHECK(place_info(rate1, full) == full);

    auto rate0 = construct(2, 0, 0.5);
    CHECK(place_info(rate0, {}) == BitVec(4, 0));
    CHECK_THROWS_AS(place_info(spec, BitVec(3, 0)), std::invalid_argument);
}

TEST_CASE("frozen set file round-trips bit-exactly") {
    auto spec = construct(6, 40, 0.5);
    std::string text = frozen_set_to_text(spec);
    CHECK(text.substr(0, 6) == "64 40\n");
    auto back = frozen_set_from_text(text);
    CHECK(back.frozen_positions() == spec.frozen_positions());
    CHECK(frozen_set_to_text(back) == text);

    auto path = std::filesystem::temp_directory_path() / "sdpolar_frozen_test.txt";
    save_frozen_set(spec, path.string());
    auto loaded = load_frozen_set(path.string());
    CHECK(frozen_set_to_text(loaded) == text);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(frozen_set_from_text("64 40\n1 2"), io_error);
    CHECK_THROWS_AS(frozen_set_from_text("63 40\n"), io_error);
    CHECK_THROWS_AS(load_frozen_set("/nonexistent/frozen.txt"), io_error);
}
