#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sdpolar/channel.hpp"
#include "sdpolar/code_spec.hpp"
#include "sdpolar/hw_model.hpp"
#include "sdpolar/list_decoder.hpp"
#include "sdpolar/oracle_suites.hpp"
#include "sdpolar/sc_kernel.hpp"
#include "sdpolar/sim.hpp"
#include "sdpolar/symbol_kernel.hpp"

namespace py = pybind11;
using namespace sdpolar;

namespace {

DecodeOptions make_options(bool exact, bool pcms) {
    return DecodeOptions{exact ? KernelMode::ExactSum : KernelMode::MaxApprox, pcms};
}

std::vector<LLPair> to_lls(const std::vector<std::pair<double, double>>& pairs) {
    std::vector<LLPair> out(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        out[i] = LLPair(pairs[i].first, pairs[i].second);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "polar code encoding, bit- and symbol-decision list decoding, and "
              "analytical decoder models";

    py::register_exception<unsupported_operation>(m, "UnsupportedOperation");
    py::register_exception<config_error>(m, "ConfigError");
    py::register_exception<io_error>(m, "IoError");

    py::class_<CrcConfig>(m, "CrcConfig")
        .def(py::init<>())
        .def_readwrite("width", &CrcConfig::width)
        .def_readwrite("poly", &CrcConfig::poly)
        .def_readwrite("init", &CrcConfig::init)
        .def_readwrite("xorout", &CrcConfig::xorout)
        .def_readwrite("reflect_in", &CrcConfig::reflect_in)
        .def_readwrite("reflect_out", &CrcConfig::reflect_out)
        .def_static("crc32c", &CrcConfig::crc32c);

    py::class_<CodeSpec>(m, "CodeSpec")
        .def(py::init([](int n, std::vector<std::uint32_t> frozen, bool crc32c) {
                 return CodeSpec(n, std::move(frozen),
                                 crc32c ? std::optional<CrcConfig>(CrcConfig::crc32c())
                                        : std::nullopt);
             }),
             py::arg("n"), py::arg("frozen"), py::arg("crc32c") = false)
        .def_property_readonly("n", &CodeSpec::n)
        .def_property_readonly("N", &CodeSpec::block_length)
        .def_property_readonly("K", &CodeSpec::info_length)
        .def_property_readonly("payload_length", &CodeSpec::payload_length)
        .def_property_readonly("frozen_positions",
                               [](const CodeSpec& s) { return s.frozen_positions(); })
        .def_property_readonly("info_positions",
                               [](const CodeSpec& s) { return s.info_positions(); })
        .def("is_frozen", &CodeSpec::is_frozen)
        .def("info_bits_in_symbol", &CodeSpec::info_bits_in_symbol)
        .def("__repr__", [](const CodeSpec& s) {
            return "CodeSpec(N=" + std::to_string(s.block_length()) +
                   ", K=" + std::to_string(s.info_length()) + ")";
        });

    m.def(
        "construct",
        [](int n, int K, double design_param, bool crc32c) {
            return construct(n, K, design_param,
                             crc32c ? std::optional<CrcConfig>(CrcConfig::crc32c())
                                    : std::nullopt);
        },
        py::arg("n"), py::arg("K"), py::arg("design_param") = 0.5, py::arg("crc32c") = false);

    m.def("encode", &encode);
    m.def("polar_transform", &polar_transform);
    m.def("attach_crc", &attach_crc);
    m.def("check_crc", &check_crc);
    m.def("place_info", &place_info);
    m.def("extract_info", &extract_info);
    m.def("frozen_set_to_text", &frozen_set_to_text);
    m.def("save_frozen_set", &save_frozen_set);
    m.def(
        "load_frozen_set",
        [](const std::string& path, bool crc32c) {
            return load_frozen_set(path, crc32c ? std::optional<CrcConfig>(CrcConfig::crc32c())
                                                : std::nullopt);
        },
        py::arg("path"), py::arg("crc32c") = false);

    m.def(
        "transmit",
        [](const BitVec& x, double ebn0_db, double rate, std::uint64_t seed,
           std::uint64_t trial) {
            return transmit(x, ChannelParams{ebn0_db, rate, seed}, trial);
        },
        py::arg("x"), py::arg("ebn0_db"), py::arg("rate"), py::arg("seed") = 1,
        py::arg("trial") = 0);

    m.def(
        "channel_lls",
        [](const std::vector<double>& y, double sigma2) {
            auto lls = channel_lls(y, sigma2);
            std::vector<std::pair<double, double>> out(lls.size());
            for (std::size_t i = 0; i < lls.size(); ++i) out[i] = {lls[i].ll(0), lls[i].ll(1)};
            return out;
        },
        py::arg("y"), py::arg("sigma2"));

    m.def(
        "sc_decode",
        [](const CodeSpec& spec, const std::vector<std::pair<double, double>>& lls, bool exact,
           bool pcms) { return sc_decode(spec, to_lls(lls), make_options(exact, pcms)); },
        py::arg("spec"), py::arg("lls"), py::arg("exact") = false, py::arg("pcms") = false);

    m.def(
        "sdsc_decode",
        [](const CodeSpec& spec, const std::vector<std::pair<double, double>>& lls, int M,
           bool exact, bool pcms) {
            return sdsc_decode(spec, to_lls(lls), M, make_options(exact, pcms));
        },
        py::arg("spec"), py::arg("lls"), py::arg("M"), py::arg("exact") = false,
        py::arg("pcms") = false);

    m.def(
        "scl_decode",
        [](const CodeSpec& spec, const std::vector<std::pair<double, double>>& lls, int L,
           bool exact, bool pcms) {
            return scl_decode(spec, to_lls(lls), L, make_options(exact, pcms));
        },
        py::arg("spec"), py::arg("lls"), py::arg("L"), py::arg("exact") = false,
        py::arg("pcms") = false);

    m.def(
        "ca_scl_decode",
        [](const CodeSpec& spec, const std::vector<std::pair<double, double>>& lls, int L,
           bool exact, bool pcms) {
            auto r = ca_scl_decode(spec, to_lls(lls), L, make_options(exact, pcms));
            return py::make_tuple(r.u, r.crc_pass);
        },
        py::arg("spec"), py::arg("lls"), py::arg("L"), py::arg("exact") = false,
        py::arg("pcms") = false);

    m.def(
        "sdscl_decode",
        [](const CodeSpec& spec, const std::vector<std::pair<double, double>>& lls, int L,
           int M, int q, bool exact, bool pcms) {
            return sdscl_decode(spec, to_lls(lls), L, M, PruneConfig{q},
                                make_options(exact, pcms));
        },
        py::arg("spec"), py::arg("lls"), py::arg("L"), py::arg("M"), py::arg("q"),
        py::arg("exact") = false, py::arg("pcms") = false);

    auto hwmod = m.def_submodule("hw", "analytical memory, addition, and latency models");
    hwmod.def("mem_bits_ll", &hw::mem_bits_ll);
    hwmod.def("mem_bits_pcms", &hw::mem_bits_pcms);
    hwmod.def("pcms_saving", &hw::pcms_saving);
    hwmod.def(
        "addition_count",
        [](int M, const std::string& mode, int info_bits) {
            if (mode != "recursive" && mode != "direct")
                throw std::invalid_argument("mode must be 'recursive' or 'direct'");
            return hw::addition_count(
                M, mode == "recursive" ? hw::AddMode::Recursive : hw::AddMode::Direct,
                info_bits);
        },
        py::arg("M"), py::arg("mode"), py::arg("info_bits"));
    hwmod.def(
        "latency",
        [](std::int64_t N, std::int64_t M, std::int64_t L, std::int64_t P, double gamma,
           std::int64_t t_s, std::int64_t t_n, bool pcms) {
            hw::HwParams h;
            h.N = N;
            h.M = M;
            h.L = L;
            h.P = P;
            h.gamma = gamma;
            h.t_s = t_s;
            h.t_n = t_n;
            h.pcms = pcms;
            auto rep = hw::latency(h);
            py::dict d;
            d["t_b"] = rep.t_b;
            d["t_s"] = rep.t_s;
            d["t_n"] = rep.t_n;
            d["symbol_cycles"] = rep.symbol_cycles;
            d["total"] = rep.total;
            d["scheduling"] = rep.scheduling == hw::Scheduling::Serial ? "serial" : "overlapping";
            return d;
        },
        py::arg("N"), py::arg("M"), py::arg("L"), py::arg("P"), py::arg("gamma"),
        py::arg("t_s") = -1, py::arg("t_n") = 0, py::arg("pcms") = true);
    hwmod.def(
        "speed_gain",
        [](std::int64_t N, std::int64_t M, std::int64_t L, std::int64_t P, double gamma,
           std::int64_t t_s, std::int64_t t_n) {
            hw::HwParams h;
            h.N = N;
            h.M = M;
            h.L = L;
            h.P = P;
            h.gamma = gamma;
            h.t_s = t_s;
            h.t_n = t_n;
            return hw::speed_gain(h);
        },
        py::arg("N"), py::arg("M"), py::arg("L"), py::arg("P"), py::arg("gamma"),
        py::arg("t_s") = -1, py::arg("t_n") = 0);
    hwmod.def("gamma_of", &hw::gamma_of);
    hwmod.def("latency_preset_totals", []() {
        std::vector<std::int64_t> totals;
        for (const auto& row : hw::latency_presets()) totals.push_back(hw::latency(row).total);
        return totals;
    });

    m.def(
        "run_sweep",
        [](int n, int K, const std::vector<std::string>& decoders,
           const std::vector<double>& ebn0_db, std::uint64_t trials, std::uint64_t target_fe,
           std::uint64_t seed, int workers, bool exact, bool crc32c, double design_param,
           const std::string& frozen_file) {
            sim::SweepConfig cfg;
            cfg.n = n;
            cfg.K = K;
            cfg.design_param = design_param;
            cfg.crc32c = crc32c;
            cfg.frozen_file = frozen_file;
            for (const auto& d : decoders) cfg.decoders.push_back(sim::parse_decoder_id(d));
            cfg.ebn0_db = ebn0_db;
            cfg.trials = trials;
            cfg.target_fe = target_fe;
            cfg.seed = seed;
            cfg.workers = workers;
            cfg.exact = exact;
            auto res = sim::run_sweep(cfg);
            py::list cells;
            for (const auto& c : res.cells) {
                py::dict d;
                d["decoder"] = c.decoder;
                d["ebn0_db"] = c.ebn0_db;
                d["trials"] = c.trials;
                d["bit_errors"] = c.bit_errors;
                d["frame_errors"] = c.frame_errors;
                d["ber"] = c.ber;
                d["fer"] = c.fer;
                d["fer_lo"] = c.fer_lo;
                d["fer_hi"] = c.fer_hi;
                cells.append(d);
            }
            py::dict out;
            out["cells"] = cells;
            out["csv"] = res.csv;
            out["sidecar_json"] = res.sidecar_json;
            return out;
        },
        py::arg("n"), py::arg("K"), py::arg("decoders"), py::arg("ebn0_db"),
        py::arg("trials") = 10000, py::arg("target_fe") = 100, py::arg("seed") = 1,
        py::arg("workers") = 1, py::arg("exact") = false, py::arg("crc32c") = false,
        py::arg("design_param") = 0.5, py::arg("frozen_file") = std::string());

    m.def(
        "run_oracle_suite",
        [](const std::string& name, int cases, std::uint64_t seed) {
            auto res = oracle::run_suite(name, cases, seed);
            py::dict d;
            d["name"] = res.name;
            d["cases"] = res.cases;
            d["failures"] = res.failures;
            d["messages"] = res.messages;
            return d;
        },
        py::arg("name"), py::arg("cases") = 200, py::arg("seed") = 1);
    m.def("oracle_suite_names", &oracle::suite_names);
}
