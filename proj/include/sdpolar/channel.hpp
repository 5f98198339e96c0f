#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "sdpolar/types.hpp"

namespace sdpolar {

struct ChannelParams {
    double ebn0_db = 0.0;
    double rate = 0.5;  // K / N
    std::uint64_t seed = 1;

    // Noise variance for rate-adjusted Eb/N0 with unit-energy BPSK.
    double sigma2() const;
};

std::uint64_t splitmix64(std::uint64_t x);

// One generator per (seed, trial index); streams are independent of each
// other and of evaluation order.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

double uniform01(std::mt19937_64& rng);  // (0, 1]
double gaussian(std::mt19937_64& rng);   // unit variance, Box-Muller

// BPSK over AWGN: y_i = (1 - 2 x_i) + noise(0, sigma^2).
std::vector<double> transmit(const BitVec& x, const ChannelParams& p,
                             std::uint64_t trial = 0);
std::vector<double> transmit(const BitVec& x, double sigma, std::mt19937_64& rng);

LLPair channel_ll(double y, double sigma2);
std::vector<LLPair> channel_lls(std::span<const double> y, double sigma2);

}  // namespace sdpolar
