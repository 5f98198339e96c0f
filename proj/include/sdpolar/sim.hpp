#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdpolar/code_spec.hpp"
#include "sdpolar/types.hpp"

namespace sdpolar::sim {

struct DecoderId {
    enum class Kind { Sc, Sdsc, Scl, CaScl, Sdscl } kind = Kind::Sc;
    int M = 1;
    int L = 1;
    int q = 1;
    std::string text;
};

// Accepted forms: sc | sdsc-M | scl-L | ca-scl-L | sdscl-M-L-q.
DecoderId parse_decoder_id(const std::string& text);

struct SweepConfig {
    int n = 6;
    int K = 32;
    double design_param = 0.5;
    bool crc32c = false;
    std::string frozen_file;  // overrides (n, K) construction when set
    std::vector<DecoderId> decoders;
    std::vector<double> ebn0_db;
    std::uint64_t trials = 10000;
    std::uint64_t target_fe = 100;  // 0 disables early stopping
    std::uint64_t seed = 1;
    int workers = 1;
    std::string out;
    bool exact = false;
};

// One Monte Carlo trial outcome for one decoder cell.
struct TrialRecord {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    double ebn0_db = 0.0;
    std::string decoder;
    std::uint32_t bit_errors = 0;
    std::uint8_t frame_error = 0;
    std::optional<bool> crc_pass;
};

struct CellResult {
    std::string decoder;
    double ebn0_db = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t frame_errors = 0;
    double ber = 0.0;
    double fer = 0.0;
    double fer_lo = 0.0;
    double fer_hi = 0.0;
};

struct SweepResult {
    std::vector<CellResult> cells;
    std::string csv;           // header + one row per cell
    std::string sidecar_json;  // full config and code fingerprint
};

CodeSpec code_from_config(const SweepConfig& cfg);

// One decoder on one trial, standalone; the same payload and noise the sweep
// engine generates for this (seed, trial).
TrialRecord run_single_trial(const CodeSpec& spec, const DecoderId& id, double ebn0_db,
                             std::uint64_t seed, std::uint64_t trial, bool exact);

// Runs every (decoder, Eb/N0) cell with common random numbers: a fixed
// (seed, trial) pair always produces the same payload and the same unit
// noise, whatever the worker count or decoder set.
SweepResult run_sweep(const SweepConfig& cfg);

// Writes csv to cfg.out and the sidecar next to it (cfg.out + ".json").
void write_sweep_outputs(const SweepConfig& cfg, const SweepResult& result);

// Wilson 95% score interval for k successes in n trials.
std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t n);

// FNV-1a over the frozen-set text; identifies the exact code in outputs.
std::uint64_t code_fingerprint(const CodeSpec& spec);

}  // namespace sdpolar::sim
