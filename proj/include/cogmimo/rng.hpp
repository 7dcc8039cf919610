#pragma once

#include <complex>
#include <cstdint>

namespace cogmimo {

/// Deterministic random stream addressed by (master_seed, stream_index).
/// Substreams are derived by hashing the index into the seed, so trials can
/// be distributed across workers without coordination: the same address
/// always reproduces the same draw sequence.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

    std::uint64_t next_u64();

    /// Uniform on (0, 1].
    double next_unit();

    /// Uniform on [lo, hi].
    double next_uniform(double lo, double hi);

    /// Circularly symmetric complex Gaussian CN(0, variance).
    std::complex<double> next_complex_gaussian(double variance);

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_index() const { return stream_index_; }

private:
    std::uint64_t state_[4];
    std::uint64_t master_seed_;
    std::uint64_t stream_index_;
};

}  // namespace cogmimo
