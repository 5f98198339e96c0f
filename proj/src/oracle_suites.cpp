#include "sdpolar/oracle_suites.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "sdpolar/channel.hpp"
#include "sdpolar/hw_model.hpp"
#include "sdpolar/list_decoder.hpp"
#include "sdpolar/sc_kernel.hpp"
#include "sdpolar/symbol_kernel.hpp"

namespace sdpolar::oracle {

namespace {

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

double uniform_ll(std::mt19937_64& rng) {
    return (uniform01(rng) - 0.5) * 20.0;
}

struct Failures {
    SuiteResult& result;

    void note(bool ok, const std::string& detail) {
        ++result.cases;
        if (ok) return;
        ++result.failures;
        if (result.messages.size() < 8) result.messages.push_back(detail);
    }
};

// Distributions agree up to one shared offset on unmasked entries, with
// identical masks.
bool dist_equal_up_to_offset(const SymbolDist& a, const SymbolDist& b, double tol) {
    if (a.ll.size() != b.ll.size()) return false;
    double offset = 0.0;
    bool have_offset = false;
    for (std::size_t z = 0; z < a.ll.size(); ++z) {
        const bool ma = a.ll[z] == kNegInf;
        const bool mb = b.ll[z] == kNegInf;
        if (ma != mb) return false;
        if (ma) continue;
        if (!have_offset) {
            offset = a.ll[z] - b.ll[z];
            have_offset = true;
        } else if (std::abs(a.ll[z] - b.ll[z] - offset) > tol) {
            return false;
        }
    }
    return true;
}

std::set<std::uint32_t> argmax_set(const SymbolDist& d, double tol) {
    double best = kNegInf;
    for (double v : d.ll) best = std::max(best, v);
    std::set<std::uint32_t> out;
    for (std::uint32_t z = 0; z < d.ll.size(); ++z)
        if (d.ll[z] != kNegInf && d.ll[z] >= best - tol) out.insert(z);
    return out;
}

// Builds the symbol memory of a random instance: random channel messages and
// an arbitrary decided prefix of whole symbols.
SymbolPathMemory prepared_memory(const CodeSpec& spec, int M, int j,
                                 const std::vector<LLPair>& lls, std::mt19937_64& rng,
                                 KernelMode mode, std::vector<std::uint32_t>* prefix_out) {
    SymbolPathMemory mem(spec.n(), ilog2(static_cast<std::uint64_t>(M)));
    StageInput in{lls, nullptr, 0};
    for (int jj = 0; jj <= j; ++jj) {
        mem.advance(jj, in, mode);
        if (jj == j) break;
        auto value = static_cast<std::uint32_t>(pick(rng, std::uint64_t(1) << M));
        if (prefix_out) prefix_out->push_back(value);
        mem.push_symbol(value, jj);
    }
    return mem;
}

void prop1_case(std::mt19937_64& rng, Failures& fail) {
    static const int nums[] = {3, 4, 5};
    const int n = nums[pick(rng, 3)];
    const int N = 1 << n;
    static const int ms[] = {2, 4, 8};
    int M = ms[pick(rng, 3)];
    while (M > N) M /= 2;
    const int K = 1 + static_cast<int>(pick(rng, N));
    CodeSpec spec = random_code(n, K, rng);
    const int j = static_cast<int>(pick(rng, N / M));
    auto lls = random_lls(N, rng);

    {
        auto mem = prepared_memory(spec, M, j, lls, rng, KernelMode::ExactSum, nullptr);
        SymbolDist rec = symbol_dist(spec, mem, j, M);
        SymbolDist dir = direct_mapping_dist(spec, mem, j, M);
        std::ostringstream os;
        os << "prop1 exact mismatch: N=" << N << " M=" << M << " j=" << j;
        fail.note(dist_equal_up_to_offset(rec, dir, 1e-9), os.str());
    }
    {
        auto rng2 = rng;
        auto mem = prepared_memory(spec, M, j, lls, rng2, KernelMode::MaxApprox, nullptr);
        SymbolDist rec = symbol_dist(spec, mem, j, M);
        SymbolDist dir = direct_mapping_dist(spec, mem, j, M);
        std::ostringstream os;
        os << "prop1 approx argmax mismatch: N=" << N << " M=" << M << " j=" << j;
        fail.note(argmax_set(rec, 1e-9) == argmax_set(dir, 1e-9), os.str());
    }
}

void reduction_case(std::mt19937_64& rng, Failures& fail) {
    const int n = 3 + static_cast<int>(pick(rng, 3));
    const int N = 1 << n;
    const int K = 1 + static_cast<int>(pick(rng, N));
    CodeSpec spec = random_code(n, K, rng);
    auto lls = random_lls(N, rng);
    const int L = 1 << pick(rng, 3);

    BitVec sc = sc_decode(spec, lls);
    BitVec scl1 = scl_decode(spec, lls, 1);
    fail.note(scl1 == sc, "scl(L=1) != sc");
    BitVec sdsc1 = sdsc_decode(spec, lls, 1);
    fail.note(sdsc1 == sc, "sdsc(M=1) != sc");

    BitVec scl = scl_decode(spec, lls, L);
    BitVec sdscl1 = sdscl_decode(spec, lls, L, 1, PruneConfig{2});
    fail.note(sdscl1 == scl, "sdscl(M=1, q>=L) != scl");

    int M = 2 << pick(rng, 2);
    while (M > N) M /= 2;
    BitVec sdsc = sdsc_decode(spec, lls, M);
    BitVec sdscl_single = sdscl_decode(spec, lls, 1, M, PruneConfig{1 << M});
    fail.note(sdscl_single == sdsc, "sdscl(L=1) != sdsc");
}

void pcms_case(std::mt19937_64& rng, Failures& fail) {
    const int n = 3 + static_cast<int>(pick(rng, 3));
    const int N = 1 << n;
    const int K = 1 + static_cast<int>(pick(rng, N));
    CodeSpec spec = random_code(n, K, rng);
    auto lls = random_lls(N, rng);
    const int L = 1 << (1 + pick(rng, 2));
    const KernelMode mode = pick(rng, 2) ? KernelMode::ExactSum : KernelMode::MaxApprox;
    DecodeOptions plain{mode, false};
    DecodeOptions pre{mode, true};

    fail.note(sc_decode(spec, lls, plain) == sc_decode(spec, lls, pre), "pcms sc mismatch");
    fail.note(scl_decode(spec, lls, L, plain) == scl_decode(spec, lls, L, pre),
              "pcms scl mismatch");
    int M = 2 << pick(rng, 2);
    while (M >= N) M /= 2;
    if (M >= 2) {
        fail.note(sdsc_decode(spec, lls, M, plain) == sdsc_decode(spec, lls, M, pre),
                  "pcms sdsc mismatch");
        fail.note(sdscl_decode(spec, lls, L, M, PruneConfig{L}, plain) ==
                      sdscl_decode(spec, lls, L, M, PruneConfig{L}, pre),
                  "pcms sdscl mismatch");
    }
}

void table_cases(std::mt19937_64& rng, Failures& fail, int cases) {
    fail.note(hw::addition_count(2, hw::AddMode::Recursive, 2) == 4, "add count M=2 rec");
    fail.note(hw::addition_count(2, hw::AddMode::Direct, 2) == 4, "add count M=2 dir");
    fail.note(hw::addition_count(4, hw::AddMode::Recursive, 4) == 24, "add count M=4 rec");
    fail.note(hw::addition_count(4, hw::AddMode::Direct, 4) == 48, "add count M=4 dir");
    fail.note(hw::addition_count(8, hw::AddMode::Recursive, 8) == 304, "add count M=8 rec");
    fail.note(hw::addition_count(8, hw::AddMode::Direct, 8) == 1792, "add count M=8 dir");

    static const std::int64_t expect[] = {2069, 1634, 1540, 1288};
    auto rows = hw::latency_presets();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::ostringstream os;
        os << "latency row " << r;
        fail.note(hw::latency(rows[r]).total == expect[r], os.str());
    }

    fail.note(hw::mem_bits_ll(1024, 4, 4) == 57104, "mem_bits_ll(1024,4,4)");
    fail.note(hw::mem_bits_pcms(1024, 4, 4) == 43792, "mem_bits_pcms(1024,4,4)");
    fail.note(hw::pcms_saving(1024, 4, 4) == 13312, "pcms_saving(1024,4,4)");

    for (int i = 0; i < cases; ++i) {
        const std::int64_t N = 1ll << (3 + pick(rng, 10));
        const std::int64_t L = 1ll << pick(rng, 6);
        const std::int64_t q_ch = 1 + static_cast<std::int64_t>(pick(rng, 8));
        const bool ok = hw::mem_bits_ll(N, L, q_ch) - hw::mem_bits_pcms(N, L, q_ch) ==
                        hw::pcms_saving(N, L, q_ch);
        fail.note(ok, "memory saving identity");
    }
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"prop1-vs-direct-mapping", "reduction-chain", "pcms-equivalence",
            "table-exactness"};
}

SuiteResult run_suite(const std::string& name, int cases, std::uint64_t seed) {
    SuiteResult result;
    result.name = name;
    Failures fail{result};
    std::mt19937_64 rng(splitmix64(seed ^ 0x5eed5eedULL));

    if (name == "prop1-vs-direct-mapping") {
        for (int i = 0; i < cases; ++i) prop1_case(rng, fail);
    } else if (name == "reduction-chain") {
        for (int i = 0; i < cases; ++i) reduction_case(rng, fail);
    } else if (name == "pcms-equivalence") {
        for (int i = 0; i < cases; ++i) pcms_case(rng, fail);
    } else if (name == "table-exactness") {
        table_cases(rng, fail, cases);
    } else {
        throw config_error("unknown oracle suite: '" + name + "'");
    }
    return result;
}

CodeSpec random_code(int n, int K, std::mt19937_64& rng) {
    const std::uint32_t N = 1u << n;
    std::vector<std::uint32_t> order(N);
    std::iota(order.begin(), order.end(), 0u);
    for (std::uint32_t i = N - 1; i > 0; --i)
        std::swap(order[i], order[rng() % (i + 1)]);
    std::vector<std::uint32_t> frozen(order.begin(), order.begin() + (N - K));
    std::sort(frozen.begin(), frozen.end());
    return CodeSpec(n, std::move(frozen));
}

std::vector<LLPair> random_lls(std::size_t count, std::mt19937_64& rng) {
    std::vector<LLPair> lls(count);
    for (auto& p : lls) {
        p.v[0] = uniform_ll(rng);
        p.v[1] = uniform_ll(rng);
    }
    return lls;
}

}  // namespace sdpolar::oracle
