#include "sdpolar/hw_model.hpp"

#include <cmath>
#include <stdexcept>

#include "sdpolar/types.hpp"

namespace sdpolar::hw {

namespace {

std::int64_t require_pow2(std::int64_t x, const char* what) {
    if (x < 1 || !is_pow2(static_cast<std::uint64_t>(x)))
        throw std::invalid_argument(std::string(what) + " must be a power of two");
    return ilog2(static_cast<std::uint64_t>(x));
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

std::int64_t mem_bits_ll(std::int64_t N, std::int64_t L, std::int64_t q_ch) {
    std::int64_t logN = require_pow2(N, "N");
    return 2 * (L + 1) * N * q_ch + 4 * L * (N - logN - q_ch - 1);
}

std::int64_t mem_bits_pcms(std::int64_t N, std::int64_t L, std::int64_t q_ch) {
    std::int64_t logN = require_pow2(N, "N");
    return 3 * N * (q_ch + 1) + L * N * (q_ch + 3) - 4 * L * (logN + q_ch + 1);
}

std::int64_t pcms_saving(std::int64_t N, std::int64_t L, std::int64_t q_ch) {
    require_pow2(N, "N");
    return N * (L * q_ch + L - q_ch - 3);
}

std::int64_t addition_count(int M, AddMode mode, int info_bits) {
    const int m = static_cast<int>(require_pow2(M, "M"));
    if (info_bits < 0 || info_bits > M)
        throw std::invalid_argument("info_bits must be in 0..M");
    if (M == 1) return 0;
    if (mode == AddMode::Direct) return (std::int64_t(1) << info_bits) * (M - 1);
    std::int64_t adds = std::int64_t(1) << info_bits;
    for (int i = 1; i <= m - 1; ++i)
        adds += (std::int64_t(1) << i) * (std::int64_t(1) << (M >> i));
    return adds;
}

std::int64_t t_s_default(std::int64_t M, std::int64_t L, std::int64_t P) {
    const std::int64_t m = require_pow2(M, "M");
    require_pow2(L, "L");
    require_pow2(P, "P");
    if (M == 1) return 0;
    const std::int64_t adders = 4 * P;
    const std::int64_t worst = (std::int64_t(1) << M) * L;
    if (worst <= adders) return m;
    if (adders >= (std::int64_t(1) << (M / 2)) * L)
        return m - 1 + ceil_div(worst, adders);
    return t_s_general_bound(M, L, P);
}

std::int64_t t_s_general_bound(std::int64_t M, std::int64_t L, std::int64_t P) {
    const std::int64_t m = require_pow2(M, "M");
    require_pow2(L, "L");
    require_pow2(P, "P");
    std::int64_t total = 0;
    for (std::int64_t i = 1; i <= m; ++i)
        total += ceil_div((std::int64_t(1) << (std::int64_t(1) << i)) * L, 4 * P);
    return total;
}

LatencyReport latency(const HwParams& h) {
    require_pow2(h.M, "M");
    require_pow2(h.N, "N");
    require_pow2(h.L, "L");
    const std::int64_t p = require_pow2(h.P, "P");
    if (h.M > h.N || h.N % h.M != 0)
        throw std::invalid_argument("latency: M must divide N");
    if (h.gamma < 0.0 || h.gamma > 1.0)
        throw std::invalid_argument("latency: gamma must be in [0, 1]");
    if (h.t_n < 0) throw std::invalid_argument("latency: t_n must be nonnegative");
    // log2(NL/(4P)) must be a nonnegative integer for the transform-stage
    // schedule to be well defined.
    const std::int64_t log_nl = ilog2(static_cast<std::uint64_t>(h.N)) +
                                ilog2(static_cast<std::uint64_t>(h.L));
    const std::int64_t log_4p = p + 2;
    if (log_nl < log_4p)
        throw std::invalid_argument("latency: NL must be at least 4P");

    LatencyReport rep;
    rep.t_s = (h.t_s >= 0) ? h.t_s : t_s_default(h.M, h.L, h.P);
    rep.t_n = h.t_n;
    rep.scheduling = ((std::int64_t(1) << h.M) * h.L <= 4 * h.P) ? Scheduling::Serial
                                                                 : Scheduling::Overlapping;
    const std::int64_t nl_over_p = std::int64_t(1) << (log_nl - p);
    const std::int64_t log_ratio = log_nl - log_4p - 1;  // log2(NL/(8P))
    rep.t_b = 2 * (h.N / h.M) + nl_over_p * log_ratio;
    if (!h.pcms) rep.t_b += nl_over_p;

    rep.symbol_cycles =
        (1.0 - h.gamma) * static_cast<double>(h.N / h.M) * static_cast<double>(rep.t_s + rep.t_n);
    rep.total = rep.t_b + static_cast<std::int64_t>(std::ceil(rep.symbol_cycles));
    return rep;
}

double speed_gain(const HwParams& h) {
    LatencyReport rep = latency(h);
    HwParams ref = h;
    ref.M = 1;
    ref.t_s = 0;
    ref.t_n = 0;
    ref.gamma = 0.0;
    ref.pcms = h.pcms;
    const double t1 = static_cast<double>(latency(ref).total);
    const double ratio = t1 / static_cast<double>(rep.total);
    if (h.N * h.L > 8 * h.P && rep.t_s + rep.t_n > 0 && h.M > 1 && !(ratio < h.M))
        throw std::logic_error("speed_gain: ratio must stay below M in this regime");
    return ratio;
}

double gamma_of(const CodeSpec& spec, int M) {
    const int N = spec.block_length();
    if (M < 1 || !is_pow2(static_cast<std::uint64_t>(M)) || N % M != 0)
        throw std::invalid_argument("gamma_of: M must be a power of two dividing N");
    int frozen_vectors = 0;
    for (int j = 0; j < N / M; ++j)
        if (spec.info_bits_in_symbol(j, M) == 0) ++frozen_vectors;
    return static_cast<double>(frozen_vectors) / static_cast<double>(N / M);
}

std::vector<HwParams> latency_presets() {
    std::vector<HwParams> rows(4);
    rows[0] = HwParams{1024, 2, 4, 64, 4, 4, 0.445, -1, 2, true, "SDSCL-2"};
    rows[1] = HwParams{1024, 4, 4, 64, 4, 4, 0.395, -1, 4, true, "SDSCL-4"};
    rows[2] = HwParams{1024, 8, 4, 64, 4, 4, 0.344, -1, 7, true, "SDSCL-8"};
    rows[3] = HwParams{1024, 8, 4, 64, 2, 4, 0.344, -1, 4, true, "SDSCL-8"};
    return rows;
}

}  // namespace sdpolar::hw
