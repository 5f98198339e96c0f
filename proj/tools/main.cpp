#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sdpolar/code_spec.hpp"
#include "sdpolar/hw_model.hpp"
#include "sdpolar/oracle_suites.hpp"
#include "sdpolar/sim.hpp"

namespace {

using namespace sdpolar;

std::pair<int, int> parse_code(const std::string& text) {
    std::istringstream is(text);
    int n = 0, K = 0;
    char sep = 0;
    if (!(is >> n >> sep >> K) || sep != ',' || !(is >> std::ws).eof())
        throw config_error("--code expects 'n,K' (block exponent and info length)");
    return {n, K};
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) out.push_back(cur);
    return out;
}

struct SweepArgs {
    std::string code = "6,32";
    double design_param = 0.5;
    bool crc32c = false;
    std::string frozen_file;
    std::string dec;
    std::string ebn0;
    std::uint64_t trials = 10000;
    std::uint64_t target_fe = 100;
    std::uint64_t seed = 1;
    int workers = 1;
    std::string out;
    bool exact = false;
};

int cmd_sweep(const SweepArgs& a) {
    sim::SweepConfig cfg;
    auto [n, K] = parse_code(a.code);
    cfg.n = n;
    cfg.K = K;
    cfg.design_param = a.design_param;
    cfg.crc32c = a.crc32c;
    cfg.frozen_file = a.frozen_file;
    for (const auto& d : split_list(a.dec)) cfg.decoders.push_back(sim::parse_decoder_id(d));
    for (const auto& e : split_list(a.ebn0)) {
        try {
            cfg.ebn0_db.push_back(std::stod(e));
        } catch (const std::exception&) {
            throw config_error("invalid Eb/N0 value: '" + e + "'");
        }
    }
    cfg.trials = a.trials;
    cfg.target_fe = a.target_fe;
    cfg.seed = a.seed;
    cfg.workers = a.workers;
    cfg.out = a.out;
    cfg.exact = a.exact;

    sim::SweepResult result = sim::run_sweep(cfg);
    if (!cfg.out.empty())
        sim::write_sweep_outputs(cfg, result);
    else
        std::cout << result.csv;
    return 0;
}

struct ReportArgs {
    std::int64_t N = 1024;
    std::int64_t L = 4;
    std::int64_t P = 64;
    std::int64_t qch = 4;
    std::int64_t M = 0;  // nonzero adds a custom latency row
    double gamma = 0.0;
    std::int64_t ts = -1;
    std::int64_t tn = 0;
    int q = 4;
    std::string out;
};

int cmd_report(const ReportArgs& a) {
    std::ostringstream kv;
    std::ostringstream csv;
    csv << "kind,params,value\n";

    for (int M : {2, 4, 8}) {
        auto rec = hw::addition_count(M, hw::AddMode::Recursive, M);
        auto dir = hw::addition_count(M, hw::AddMode::Direct, M);
        kv << "addition_count M=" << M << " recursive=" << rec << " direct=" << dir << "\n";
        csv << "addition_count,M=" << M << ";mode=recursive," << rec << "\n";
        csv << "addition_count,M=" << M << ";mode=direct," << dir << "\n";
    }

    auto b_ll = hw::mem_bits_ll(a.N, a.L, a.qch);
    auto b_pcms = hw::mem_bits_pcms(a.N, a.L, a.qch);
    auto saving = hw::pcms_saving(a.N, a.L, a.qch);
    kv << "memory N=" << a.N << " L=" << a.L << " Qch=" << a.qch << " B_LL=" << b_ll
       << " B_PCMS=" << b_pcms << " saving=" << saving << "\n";
    csv << "memory,N=" << a.N << ";L=" << a.L << ";Qch=" << a.qch << ";field=B_LL," << b_ll << "\n";
    csv << "memory,N=" << a.N << ";L=" << a.L << ";Qch=" << a.qch << ";field=B_PCMS," << b_pcms << "\n";
    csv << "memory,N=" << a.N << ";L=" << a.L << ";Qch=" << a.qch << ";field=saving," << saving << "\n";

    auto emit_latency = [&](const hw::HwParams& row) {
        auto rep = hw::latency(row);
        double gain = hw::speed_gain(row);
        char gain_buf[32];
        std::snprintf(gain_buf, sizeof gain_buf, "%.3f", gain);
        kv << "latency " << row.label << " N=" << row.N << " M=" << row.M
           << " L=" << row.L << " P=" << row.P << " gamma=" << row.gamma
           << " T_S=" << rep.t_s << " T_N=" << rep.t_n << " q=" << row.q
           << " cycles=" << rep.total << " speed_gain=" << gain_buf << "\n";
        csv << "latency," << row.label << ";M=" << row.M << ";gamma=" << row.gamma
            << ";Ts=" << rep.t_s << ";Tn=" << rep.t_n << ";q=" << row.q << ","
            << rep.total << "\n";
    };
    for (const auto& row : hw::latency_presets()) emit_latency(row);
    if (a.M > 0) {
        hw::HwParams custom;
        custom.N = a.N;
        custom.M = a.M;
        custom.L = a.L;
        custom.P = a.P;
        custom.q = a.q;
        custom.q_ch = a.qch;
        custom.gamma = a.gamma;
        custom.t_s = a.ts;
        custom.t_n = a.tn;
        custom.label = "custom";
        emit_latency(custom);
    }

    std::cout << kv.str();
    if (!a.out.empty()) {
        std::ofstream f(a.out);
        if (!f) throw io_error("cannot open for writing: " + a.out);
        f << csv.str();
        if (!f) throw io_error("write failed: " + a.out);
    }
    return 0;
}

struct OracleArgs {
    std::string suite = "all";
    int cases = 1000;
    std::uint64_t seed = 1;
};

int cmd_oracle(const OracleArgs& a) {
    std::vector<std::string> names;
    if (a.suite == "all")
        names = oracle::suite_names();
    else
        names.push_back(a.suite);

    bool all_ok = true;
    for (const auto& name : names) {
        auto res = oracle::run_suite(name, a.cases, a.seed);
        std::cout << (res.passed() ? "[PASS] " : "[FAIL] ") << name << ": " << res.cases
                  << " checks, " << res.failures << " failures\n";
        for (const auto& msg : res.messages) std::cout << "       " << msg << "\n";
        all_ok = all_ok && res.passed();
    }
    return all_ok ? 0 : 2;
}

struct ConstructArgs {
    std::string code = "6,32";
    double design_param = 0.5;
    bool crc32c = false;
    std::string out;
};

int cmd_construct(const ConstructArgs& a) {
    auto [n, K] = parse_code(a.code);
    CodeSpec spec = construct(n, K, a.design_param,
                              a.crc32c ? std::optional<CrcConfig>(CrcConfig::crc32c())
                                       : std::nullopt);
    if (a.out.empty())
        std::cout << frozen_set_to_text(spec);
    else
        save_frozen_set(spec, a.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polar code encode/decode simulator and analytical models"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "key=value file with one [subcommand] section mirroring the flags");

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Monte Carlo BER/FER sweep");
    sweep->add_option("--code", sweep_args.code, "n,K block exponent and info length");
    sweep->add_option("--design-param", sweep_args.design_param, "erasure design parameter");
    sweep->add_flag("--crc32c", sweep_args.crc32c, "CRC-32C concatenation");
    sweep->add_option("--frozen-file", sweep_args.frozen_file, "load the frozen set from a file");
    sweep->add_option("--dec", sweep_args.dec, "decoder list, e.g. sc,scl-4,sdscl-4-4-4")
        ->required();
    sweep->add_option("--ebn0", sweep_args.ebn0, "Eb/N0 grid in dB, comma separated")->required();
    sweep->add_option("--trials", sweep_args.trials, "trial budget per cell");
    sweep->add_option("--target-fe", sweep_args.target_fe, "stop a cell at this many frame errors (0 = never)");
    sweep->add_option("--seed", sweep_args.seed, "master seed");
    sweep->add_option("--workers", sweep_args.workers, "worker threads");
    sweep->add_option("--out", sweep_args.out, "CSV output path (JSON sidecar alongside)");
    sweep->add_flag("--exact", sweep_args.exact, "exact-sum kernels instead of max approximation");

    ReportArgs report_args;
    auto* report = app.add_subcommand("report", "analytical memory/latency/addition tables");
    report->add_option("--N", report_args.N, "block length");
    report->add_option("--L", report_args.L, "list size");
    report->add_option("--P", report_args.P, "processing units");
    report->add_option("--qch", report_args.qch, "channel quantization bits");
    report->add_option("--M", report_args.M, "add a custom latency row for this symbol width");
    report->add_option("--gamma", report_args.gamma, "frozen-vector ratio for the custom row");
    report->add_option("--ts", report_args.ts, "combination cycles per symbol (-1 = derive)");
    report->add_option("--tn", report_args.tn, "pruning cycles per symbol for the custom row");
    report->add_option("--q", report_args.q, "first-stage survivor count for the custom row");
    report->add_option("--out", report_args.out, "CSV output path");

    OracleArgs oracle_args;
    auto* oracle_cmd = app.add_subcommand("oracle", "equivalence and exactness property suites");
    oracle_cmd->add_option("--suite", oracle_args.suite,
                           "suite name or 'all' (prop1-vs-direct-mapping, reduction-chain, "
                           "pcms-equivalence, table-exactness)");
    oracle_cmd->add_option("--cases", oracle_args.cases, "random cases per suite");
    oracle_cmd->add_option("--seed", oracle_args.seed, "suite seed");

    ConstructArgs construct_args;
    auto* construct_cmd = app.add_subcommand("construct", "construct a code and dump its frozen set");
    construct_cmd->add_option("--code", construct_args.code, "n,K block exponent and info length");
    construct_cmd->add_option("--design-param", construct_args.design_param,
                              "erasure design parameter");
    construct_cmd->add_flag("--crc32c", construct_args.crc32c, "validate CRC payload sizing");
    construct_cmd->add_option("--out", construct_args.out, "frozen-set output path");

    try {
        app.parse(argc, argv);
        if (sweep->parsed()) return cmd_sweep(sweep_args);
        if (report->parsed()) return cmd_report(report_args);
        if (oracle_cmd->parsed()) return cmd_oracle(oracle_args);
        if (construct_cmd->parsed()) return cmd_construct(construct_args);
        return 1;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const sdpolar::io_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const sdpolar::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
