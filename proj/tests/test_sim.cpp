#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sdpolar/sim.hpp"

using namespace sdpolar;
using sim::DecoderId;

namespace {

sim::SweepConfig small_config() {
    sim::SweepConfig cfg;
    cfg.n = 5;
    cfg.K = 16;
    cfg.decoders = {sim::parse_decoder_id("sc"), sim::parse_decoder_id("scl-2")};
    cfg.ebn0_db = {2.0};
    cfg.trials = 600;
    cfg.target_fe = 0;
    cfg.seed = 11;
    return cfg;
}

}  // namespace

TEST_CASE("decoder id grammar") {
    CHECK(sim::parse_decoder_id("sc").kind == DecoderId::Kind::Sc);
    auto sdsc = sim::parse_decoder_id("sdsc-4");
    CHECK(sdsc.kind == DecoderId::Kind::Sdsc);
    CHECK(sdsc.M == 4);
    auto scl = sim::parse_decoder_id("scl-8");
    CHECK(scl.kind == DecoderId::Kind::Scl);
    CHECK(scl.L == 8);
    auto ca = sim::parse_decoder_id("ca-scl-4");
    CHECK(ca.kind == DecoderId::Kind::CaScl);
    CHECK(ca.L == 4);
    auto sd = sim::parse_decoder_id("sdscl-8-4-2");
    CHECK(sd.kind == DecoderId::Kind::Sdscl);
    CHECK(sd.M == 8);
    CHECK(sd.L == 4);
    CHECK(sd.q == 2);
    CHECK_THROWS_AS(sim::parse_decoder_id("bogus"), config_error);
    CHECK_THROWS_AS(sim::parse_decoder_id("scl-x"), config_error);
    CHECK_THROWS_AS(sim::parse_decoder_id("sdscl-4-4"), config_error);
}

TEST_CASE("config validation failures") {
    auto cfg = small_config();
    cfg.decoders.clear();
    CHECK_THROWS_AS(sim::run_sweep(cfg), config_error);

    cfg = small_config();
    cfg.K = 0;
    CHECK_THROWS_AS(sim::run_sweep(cfg), config_error);

    cfg = small_config();
    cfg.decoders = {sim::parse_decoder_id("ca-scl-4")};
    CHECK_THROWS_AS(sim::run_sweep(cfg), config_error);  // needs --crc32c

    cfg = small_config();
    cfg.ebn0_db.clear();
    CHECK_THROWS_AS(sim::run_sweep(cfg), config_error);
}

TEST_CASE("fixed seed gives byte-identical output") {
    auto cfg = small_config();
    auto a = sim::run_sweep(cfg);
    auto b = sim::run_sweep(cfg);
    CHECK(a.csv == b.csv);
    CHECK(a.sidecar_json == b.sidecar_json);
    CHECK(a.csv.substr(0, a.csv.find('\n')) ==
          "decoder,ebn0_db,trials,bit_errors,frame_errors,ber,fer,fer_lo,fer_hi");
}

TEST_CASE("results do not depend on the worker count") {
    auto cfg = small_config();
    cfg.workers = 1;
    auto one = sim::run_sweep(cfg);
    cfg.workers = 3;
    auto three = sim::run_sweep(cfg);
    CHECK(one.csv == three.csv);
}

TEST_CASE("common random numbers: a cell ignores the rest of the decoder set") {
    auto cfg = small_config();
    cfg.decoders = {sim::parse_decoder_id("sc")};
    auto alone = sim::run_sweep(cfg);
    cfg = small_config();
    auto both = sim::run_sweep(cfg);
    REQUIRE(alone.cells.size() == 1);
    CHECK(alone.cells[0].frame_errors == both.cells[0].frame_errors);
    CHECK(alone.cells[0].bit_errors == both.cells[0].bit_errors);
}

TEST_CASE("early stopping lands on a block boundary and records trials") {
    auto cfg = small_config();
    cfg.n = 5;
    cfg.K = 16;
    cfg.ebn0_db = {-2.0};  // noisy enough to hit the target quickly
    cfg.trials = 50000;
    cfg.target_fe = 20;
    auto res = sim::run_sweep(cfg);
    for (const auto& cell : res.cells) {
        CHECK(cell.frame_errors >= 20);
        CHECK(cell.trials % 1024 == 0);
        CHECK(cell.trials < 50000);
    }
}

TEST_CASE("wilson interval brackets the point estimate") {
    auto [lo, hi] = sim::wilson_interval(10, 100);
    CHECK(lo > 0.0);
    CHECK(hi < 1.0);
    CHECK(lo < 0.1);
    CHECK(hi > 0.1);
    auto [zlo, zhi] = sim::wilson_interval(0, 50);
    CHECK(zlo == 0.0);
    CHECK(zhi > 0.0);
}

TEST_CASE("list gain shows up at desk scale with paired noise") {
    sim::SweepConfig cfg;
    cfg.n = 6;
    cfg.K = 32;
    cfg.decoders = {sim::parse_decoder_id("sc"), sim::parse_decoder_id("scl-2"),
                    sim::parse_decoder_id("scl-4")};
    cfg.ebn0_db = {2.5};
    cfg.trials = 10000;
    cfg.target_fe = 0;
    cfg.seed = 99;
    auto res = sim::run_sweep(cfg);
    REQUIRE(res.cells.size() == 3);
    const auto& sc = res.cells[0];
    const auto& scl2 = res.cells[1];
    const auto& scl = res.cells[2];
    CHECK(scl.fer < sc.fer);
    CHECK(scl.fer_hi < sc.fer_lo);  // non-overlapping 95% intervals
    // larger lists keep improving, up to noise
    auto sigma3 = [&](const sim::CellResult& a, const sim::CellResult& b) {
        return 3.0 * std::sqrt(a.fer * (1 - a.fer) / a.trials + b.fer * (1 - b.fer) / b.trials);
    };
    CHECK(scl.fer <= scl2.fer + sigma3(scl, scl2));
    CHECK(scl2.fer <= sc.fer + sigma3(scl2, sc));
}

TEST_CASE("trial records stay within their bounds") {
    auto cfg = small_config();
    auto spec = sim::code_from_config(cfg);
    for (std::uint64_t t = 0; t < 50; ++t) {
        auto rec = sim::run_single_trial(spec, cfg.decoders[1], 1.0, cfg.seed, t, false);
        CHECK(rec.bit_errors <= static_cast<std::uint32_t>(spec.info_length()));
        if (rec.frame_error) CHECK(rec.bit_errors > 0);
        CHECK_FALSE(rec.crc_pass.has_value());
    }
}
