#include "sdpolar/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "sdpolar/channel.hpp"
#include "sdpolar/list_decoder.hpp"
#include "sdpolar/sc_kernel.hpp"
#include "sdpolar/symbol_kernel.hpp"

namespace sdpolar::sim {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

int parse_positive(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size() || v < 1) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        throw config_error("invalid " + what + ": '" + s + "'");
    }
}

constexpr std::uint64_t kTrialBlock = 1024;

}  // namespace

DecoderId parse_decoder_id(const std::string& text) {
    DecoderId id;
    id.text = text;
    auto parts = split(text, '-');
    if (parts.size() == 1 && parts[0] == "sc") {
        id.kind = DecoderId::Kind::Sc;
        return id;
    }
    if (parts.size() == 2 && parts[0] == "sdsc") {
        id.kind = DecoderId::Kind::Sdsc;
        id.M = parse_positive(parts[1], "symbol width");
        return id;
    }
    if (parts.size() == 2 && parts[0] == "scl") {
        id.kind = DecoderId::Kind::Scl;
        id.L = parse_positive(parts[1], "list size");
        return id;
    }
    if (parts.size() == 3 && parts[0] == "ca" && parts[1] == "scl") {
        id.kind = DecoderId::Kind::CaScl;
        id.L = parse_positive(parts[2], "list size");
        return id;
    }
    if (parts.size() == 4 && parts[0] == "sdscl") {
        id.kind = DecoderId::Kind::Sdscl;
        id.M = parse_positive(parts[1], "symbol width");
        id.L = parse_positive(parts[2], "list size");
        id.q = parse_positive(parts[3], "survivor count");
        return id;
    }
    throw config_error("unknown decoder id: '" + text + "'");
}

CodeSpec code_from_config(const SweepConfig& cfg) {
    std::optional<CrcConfig> crc;
    if (cfg.crc32c) crc = CrcConfig::crc32c();
    if (!cfg.frozen_file.empty()) return load_frozen_set(cfg.frozen_file, crc);
    return construct(cfg.n, cfg.K, cfg.design_param, crc);
}

namespace {

BitVec decode_with(const DecoderId& id, const CodeSpec& spec,
                   std::span<const LLPair> lls, const DecodeOptions& opt,
                   std::optional<bool>* crc_pass) {
    switch (id.kind) {
        case DecoderId::Kind::Sc:
            return sc_decode(spec, lls, opt);
        case DecoderId::Kind::Sdsc:
            return sdsc_decode(spec, lls, id.M, opt);
        case DecoderId::Kind::Scl:
            return scl_decode(spec, lls, id.L, opt);
        case DecoderId::Kind::CaScl: {
            CaSclResult r = ca_scl_decode(spec, lls, id.L, opt);
            if (crc_pass) *crc_pass = r.crc_pass;
            return r.u;
        }
        case DecoderId::Kind::Sdscl:
            return sdscl_decode(spec, lls, id.L, id.M, PruneConfig{id.q}, opt);
    }
    throw config_error("unreachable decoder kind");
}

struct TrialInput {
    BitVec info_block;
    BitVec x;
    std::vector<double> unit_noise;
};

TrialInput make_trial_input(const CodeSpec& spec, std::uint64_t seed, std::uint64_t trial) {
    TrialInput t;
    auto rng = trial_rng(seed, trial);
    BitVec payload(spec.payload_length());
    for (auto& b : payload) b = static_cast<Bit>(rng() & 1u);
    t.info_block = spec.crc() ? attach_crc(spec, payload) : payload;
    t.x = encode(spec, place_info(spec, t.info_block));
    t.unit_noise.resize(spec.block_length());
    for (auto& v : t.unit_noise) v = gaussian(rng);
    return t;
}

void validate(const SweepConfig& cfg, const CodeSpec& spec) {
    if (cfg.decoders.empty()) throw config_error("no decoders configured");
    if (cfg.ebn0_db.empty()) throw config_error("no Eb/N0 points configured");
    if (cfg.trials < 1) throw config_error("trial budget must be at least 1");
    if (cfg.workers < 1) throw config_error("worker count must be at least 1");
    if (spec.info_length() < 1)
        throw config_error("code carries no information bits");
    for (const auto& d : cfg.decoders)
        if (d.kind == DecoderId::Kind::CaScl && !spec.crc())
            throw config_error("decoder '" + d.text + "' needs a CRC-concatenated code");
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.8g", v);
    return buf;
}

}  // namespace

TrialRecord run_single_trial(const CodeSpec& spec, const DecoderId& id, double ebn0_db,
                             std::uint64_t seed, std::uint64_t trial, bool exact) {
    TrialInput in = make_trial_input(spec, seed, trial);
    const double rate = static_cast<double>(spec.info_length()) / spec.block_length();
    const double sigma2 = ChannelParams{ebn0_db, rate, seed}.sigma2();
    const double sigma = std::sqrt(sigma2);
    std::vector<double> y(in.x.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] = (1.0 - 2.0 * in.x[i]) + sigma * in.unit_noise[i];
    auto lls = channel_lls(y, sigma2);

    DecodeOptions opt;
    opt.mode = exact ? KernelMode::ExactSum : KernelMode::MaxApprox;
    TrialRecord rec;
    rec.trial = trial;
    rec.seed = seed;
    rec.ebn0_db = ebn0_db;
    rec.decoder = id.text;
    BitVec u = decode_with(id, spec, lls, opt, &rec.crc_pass);
    BitVec got = extract_info(spec, u);
    for (std::size_t i = 0; i < got.size(); ++i)
        if (got[i] != in.info_block[i]) ++rec.bit_errors;
    const std::size_t plen = spec.payload_length();
    for (std::size_t i = 0; i < plen; ++i)
        if (got[i] != in.info_block[i]) {
            rec.frame_error = 1;
            break;
        }
    return rec;
}

std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t n) {
    if (n == 0) return {0.0, 1.0};
    const double z = 1.959963984540054;  // 95%
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(k) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (p + z2 / (2.0 * nn)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
    const double lo = (k == 0) ? 0.0 : std::max(0.0, center - half);
    const double hi = (k == n) ? 1.0 : std::min(1.0, center + half);
    return {lo, hi};
}

std::uint64_t code_fingerprint(const CodeSpec& spec) {
    const std::string text = frozen_set_to_text(spec);
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

SweepResult run_sweep(const SweepConfig& cfg) {
    const CodeSpec spec = code_from_config(cfg);
    validate(cfg, spec);

    const std::size_t n_dec = cfg.decoders.size();
    const std::size_t n_snr = cfg.ebn0_db.size();
    const std::size_t n_cells = n_dec * n_snr;
    const double rate = static_cast<double>(spec.info_length()) / spec.block_length();

    struct Cell {
        std::uint64_t trials = 0;
        std::uint64_t bit_errors = 0;
        std::uint64_t frame_errors = 0;
        bool active = true;
    };
    std::vector<Cell> cells(n_cells);

    std::vector<double> sigma2(n_snr), sigma(n_snr);
    for (std::size_t e = 0; e < n_snr; ++e) {
        sigma2[e] = ChannelParams{cfg.ebn0_db[e], rate, cfg.seed}.sigma2();
        sigma[e] = std::sqrt(sigma2[e]);
    }

    DecodeOptions opt;
    opt.mode = cfg.exact ? KernelMode::ExactSum : KernelMode::MaxApprox;

    struct Partial {
        std::uint64_t bit_errors = 0;
        std::uint64_t frame_errors = 0;
    };

    auto run_trial_for_cells = [&](std::uint64_t trial, std::vector<Partial>& acc) {
        TrialInput in = make_trial_input(spec, cfg.seed, trial);
        const std::size_t N = in.x.size();
        std::vector<double> y(N);
        std::vector<LLPair> lls;
        const std::size_t plen = spec.payload_length();
        for (std::size_t e = 0; e < n_snr; ++e) {
            bool any = false;
            for (std::size_t d = 0; d < n_dec && !any; ++d) any = cells[d * n_snr + e].active;
            if (!any) continue;
            for (std::size_t i = 0; i < N; ++i)
                y[i] = (1.0 - 2.0 * in.x[i]) + sigma[e] * in.unit_noise[i];
            lls = channel_lls(y, sigma2[e]);
            for (std::size_t d = 0; d < n_dec; ++d) {
                const std::size_t c = d * n_snr + e;
                if (!cells[c].active) continue;
                BitVec u = decode_with(cfg.decoders[d], spec, lls, opt, nullptr);
                BitVec got = extract_info(spec, u);
                std::uint32_t bits = 0;
                for (std::size_t i = 0; i < got.size(); ++i)
                    if (got[i] != in.info_block[i]) ++bits;
                bool frame = false;
                for (std::size_t i = 0; i < plen && !frame; ++i)
                    frame = got[i] != in.info_block[i];
                acc[c].bit_errors += bits;
                acc[c].frame_errors += frame ? 1 : 0;
            }
        }
    };

    std::uint64_t next_trial = 0;
    while (next_trial < cfg.trials) {
        bool any_active = false;
        for (const auto& c : cells) any_active = any_active || c.active;
        if (!any_active) break;

        const std::uint64_t block_end = std::min(cfg.trials, next_trial + kTrialBlock);
        const int workers = std::max(1, cfg.workers);
        std::vector<std::vector<Partial>> partials(workers, std::vector<Partial>(n_cells));

        if (workers == 1) {
            for (std::uint64_t t = next_trial; t < block_end; ++t)
                run_trial_for_cells(t, partials[0]);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (int w = 0; w < workers; ++w) {
                pool.emplace_back([&, w]() {
                    for (std::uint64_t t = next_trial + w; t < block_end; t += workers)
                        run_trial_for_cells(t, partials[w]);
                });
            }
            for (auto& th : pool) th.join();
        }

        const std::uint64_t block_trials = block_end - next_trial;
        for (std::size_t c = 0; c < n_cells; ++c) {
            if (!cells[c].active) continue;
            for (int w = 0; w < std::max(1, cfg.workers); ++w) {
                cells[c].bit_errors += partials[w][c].bit_errors;
                cells[c].frame_errors += partials[w][c].frame_errors;
            }
            cells[c].trials += block_trials;
            if (cfg.target_fe > 0 && cells[c].frame_errors >= cfg.target_fe)
                cells[c].active = false;
        }
        next_trial = block_end;
    }

    SweepResult result;
    std::ostringstream csv;
    csv << "decoder,ebn0_db,trials,bit_errors,frame_errors,ber,fer,fer_lo,fer_hi\n";
    const double K = spec.info_length();
    for (std::size_t d = 0; d < n_dec; ++d) {
        for (std::size_t e = 0; e < n_snr; ++e) {
            const Cell& c = cells[d * n_snr + e];
            CellResult r;
            r.decoder = cfg.decoders[d].text;
            r.ebn0_db = cfg.ebn0_db[e];
            r.trials = c.trials;
            r.bit_errors = c.bit_errors;
            r.frame_errors = c.frame_errors;
            r.ber = c.trials ? static_cast<double>(c.bit_errors) / (K * c.trials) : 0.0;
            r.fer = c.trials ? static_cast<double>(c.frame_errors) / c.trials : 0.0;
            auto [lo, hi] = wilson_interval(c.frame_errors, c.trials);
            r.fer_lo = lo;
            r.fer_hi = hi;
            result.cells.push_back(r);
            csv << r.decoder << ',' << format_double(r.ebn0_db) << ',' << r.trials << ','
                << r.bit_errors << ',' << r.frame_errors << ',' << format_double(r.ber)
                << ',' << format_double(r.fer) << ',' << format_double(r.fer_lo) << ','
                << format_double(r.fer_hi) << '\n';
        }
    }
    result.csv = csv.str();

    nlohmann::json j;
    j["code"] = {{"n", spec.n()},
                 {"N", spec.block_length()},
                 {"K", spec.info_length()},
                 {"payload_bits", spec.payload_length()},
                 {"crc32c", cfg.crc32c},
                 {"design_param", cfg.design_param},
                 {"frozen_file", cfg.frozen_file}};
    char fp[32];
    std::snprintf(fp, sizeof fp, "%016llx",
                  static_cast<unsigned long long>(code_fingerprint(spec)));
    j["code"]["fingerprint"] = fp;
    std::vector<std::string> dec_texts;
    for (const auto& d : cfg.decoders) dec_texts.push_back(d.text);
    j["decoders"] = dec_texts;
    j["ebn0_db"] = cfg.ebn0_db;
    j["trials"] = cfg.trials;
    j["target_fe"] = cfg.target_fe;
    j["seed"] = cfg.seed;
    j["workers"] = cfg.workers;
    j["exact"] = cfg.exact;
    j["out"] = cfg.out;
    result.sidecar_json = j.dump(2) + "\n";
    return result;
}

void write_sweep_outputs(const SweepConfig& cfg, const SweepResult& result) {
    if (cfg.out.empty()) throw io_error("no output path configured");
    std::ofstream csv(cfg.out);
    if (!csv) throw io_error("cannot open for writing: " + cfg.out);
    csv << result.csv;
    if (!csv) throw io_error("write failed: " + cfg.out);
    const std::string sidecar = cfg.out + ".json";
    std::ofstream js(sidecar);
    if (!js) throw io_error("cannot open for writing: " + sidecar);
    js << result.sidecar_json;
    if (!js) throw io_error("write failed: " + sidecar);
}

}  // namespace sdpolar::sim
