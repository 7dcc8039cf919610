#pragma once

#include <cstdint>
#include <vector>

#include "cogmimo/matrix.hpp"
#include "cogmimo/rng.hpp"

namespace cogmimo {

/// Full experiment description. Powers are linear and normalized to the
/// noise floor: noise_power defaults to 1 and tx_power carries the
/// configured p_T/N0 ratio. Service-1 nodes come first in the per-node lists.
struct ScenarioConfig {
    int n_rx = 0;                            ///< receive antennas N
    int m1 = 1;                              ///< Service-1 stream count
    int m2 = 1;                              ///< Service-2 stream count
    double tx_power = 10.0;                  ///< p_T (linear)
    double noise_power = 1.0;                ///< N0 (linear)
    std::vector<double> distances;           ///< normalized distances, reference 1 km
    std::vector<double> pathloss_exponents;  ///< omega_i in [2, 6]
    double alpha = 1.0;                      ///< aging coefficient a in (0, 1]
    double noise_uncertainty_db = 2.0;       ///< L
    double gamma_th = 1.0;                   ///< outage threshold (linear)
    double gamma_t = 1.0;                    ///< switching threshold (linear)
    long long trials = 100000;
    std::uint64_t seed = 12345;
    bool massive_limit = false;              ///< substitute p_hat = p

    int m_total() const { return m1 + m2; }

    /// Throws DomainError when any invariant is violated.
    void validate() const;
};

/// Per-node powers: true p_i, estimate p_hat_i, and residual p_i - a^2 p_hat_i.
struct LinkPowerProfile {
    std::vector<double> p;
    std::vector<double> p_hat;
    std::vector<double> residual;

    int size() const { return static_cast<int>(p.size()); }
};

/// One frame's estimated channel (N x M) and estimation/aging error (N x M).
struct ChannelRealization {
    ComplexMatrix estimated;
    ComplexMatrix error;
};

/// Received power p_T d^{-omega}.
double link_power(double p_t, double d, double omega);

/// MMSE estimate power p_hat = p^2 / (p + 1/(m_total p_T)); 0 < p_hat < p.
double mmse_power(double p, int m_total, double p_t);

/// Aging coefficient J0(2 pi f_D T_s).
double aging_coefficient(double fd_ts);

/// Residual variance p - a^{2 order} p_hat of the aged estimate.
double residual_variance(double p, double p_hat, double a, int order);

/// Element-wise link budget, MMSE power and order-1 residual for a scenario.
LinkPowerProfile build_profile(const ScenarioConfig& config);

/// Entries [offset, offset + count) of a profile.
LinkPowerProfile sub_profile(const LinkPowerProfile& profile, int offset, int count);

/// Draw one frame: estimated column j ~ CN(0, a^2 p_hat_j I), error column j
/// ~ CN(0, (p_j - a^2 p_hat_j) I), mutually independent. The estimated matrix
/// is drawn first, then the error matrix.
ChannelRealization realize_channel(const LinkPowerProfile& profile, const ScenarioConfig& config,
                                   RngStream& rng);

}  // namespace cogmimo
