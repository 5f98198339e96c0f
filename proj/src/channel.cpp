#include "sdpolar/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace sdpolar {

double ChannelParams::sigma2() const {
    if (!(rate > 0.0) || rate > 1.0)
        throw std::invalid_argument("channel rate must be in (0, 1]");
    return 1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0));
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(trial + 1)));
}

double uniform01(std::mt19937_64& rng) {
    return 1.0 - (rng() >> 11) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& rng) {
    // Box-Muller keeps results identical across standard libraries.
    double u1 = uniform01(rng);
    double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::vector<double> transmit(const BitVec& x, double sigma, std::mt19937_64& rng) {
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        y[i] = (1.0 - 2.0 * x[i]) + sigma * gaussian(rng);
    return y;
}

std::vector<double> transmit(const BitVec& x, const ChannelParams& p, std::uint64_t trial) {
    auto rng = trial_rng(p.seed, trial);
    return transmit(x, std::sqrt(p.sigma2()), rng);
}

LLPair channel_ll(double y, double sigma2) {
    if (!(sigma2 > 0.0)) throw std::invalid_argument("sigma^2 must be positive");
    double d0 = y - 1.0;
    double d1 = y + 1.0;
    return LLPair(-d0 * d0 / (2.0 * sigma2), -d1 * d1 / (2.0 * sigma2));
}

std::vector<LLPair> channel_lls(std::span<const double> y, double sigma2) {
    std::vector<LLPair> out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = channel_ll(y[i], sigma2);
    return out;
}

}  // namespace sdpolar
