#include "cogmimo/rng.hpp"

#include <cmath>
#include <numbers>

#include "cogmimo/errors.hpp"

namespace cogmimo {

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
    s += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed), stream_index_(stream_index) {
    std::uint64_t s = master_seed ^ (0x9E3779B97F4A7C15ULL * (stream_index + 1));
    for (auto& w : state_) w = splitmix64(s);
    // xoshiro must not start from the all-zero state
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
}

std::uint64_t RngStream::next_u64() {
    // xoshiro256++
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RngStream::next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double RngStream::next_uniform(double lo, double hi) {
    if (!(lo <= hi)) throw DomainError("RngStream::next_uniform: lo > hi");
    return lo + (hi - lo) * (static_cast<double>(next_u64() >> 11) * 0x1.0p-53);
}

std::complex<double> RngStream::next_complex_gaussian(double variance) {
    if (variance < 0.0) throw DomainError("RngStream::next_complex_gaussian: negative variance");
    // |z|^2 ~ Exp(variance), phase uniform; two draws are always consumed so
    // the stream position does not depend on the variance value
    const double u = next_unit();
    const double v = next_unit();
    if (variance == 0.0) return {0.0, 0.0};
    const double radius = std::sqrt(-variance * std::log(u));
    const double phase = 2.0 * std::numbers::pi * v;
    return {radius * std::cos(phase), radius * std::sin(phase)};
}

}  // namespace cogmimo
