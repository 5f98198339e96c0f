#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sdpolar/code_spec.hpp"
#include "sdpolar/types.hpp"

namespace sdpolar::oracle {

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::vector<std::string> messages;

    bool passed() const { return failures == 0; }
};

// prop1-vs-direct-mapping, reduction-chain, pcms-equivalence, table-exactness.
std::vector<std::string> suite_names();

SuiteResult run_suite(const std::string& name, int cases, std::uint64_t seed);

// Uniformly random frozen set of size N - K. Deterministic for a given
// generator state on every platform.
CodeSpec random_code(int n, int K, std::mt19937_64& rng);

std::vector<LLPair> random_lls(std::size_t count, std::mt19937_64& rng);

}  // namespace sdpolar::oracle
