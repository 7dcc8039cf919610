#include "cogmimo/channel.hpp"

#include <cmath>
#include <numbers>

#include "cogmimo/errors.hpp"
#include "cogmimo/numerics.hpp"

namespace cogmimo {

void ScenarioConfig::validate() const {
    if (m1 < 0 || m2 < 0) throw DomainError("config: stream counts must be nonnegative");
    if (m_total() < 1) throw DomainError("config: need at least one stream");
    if (n_rx < m_total()) throw DomainError("config: n_rx must be >= m1 + m2");
    if (tx_power <= 0.0) throw DomainError("config: tx_power must be positive");
    if (noise_power <= 0.0) throw DomainError("config: noise_power must be positive");
    if (static_cast<int>(distances.size()) != m_total())
        throw DomainError("config: need one distance per stream");
    if (static_cast<int>(pathloss_exponents.size()) != m_total())
        throw DomainError("config: need one path-loss exponent per stream");
    for (double d : distances)
        if (!(d > 0.0)) throw DomainError("config: distances must be positive");
    for (double w : pathloss_exponents)
        if (!(w >= 2.0 && w <= 6.0)) throw DomainError("config: path-loss exponents must lie in [2, 6]");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("config: alpha must lie in (0, 1]");
    if (noise_uncertainty_db < 0.0) throw DomainError("config: noise_uncertainty_db must be >= 0");
    if (!(gamma_th > 0.0)) throw DomainError("config: gamma_th must be positive");
    if (!(gamma_t > 0.0)) throw DomainError("config: gamma_t must be positive");
    if (trials < 1) throw DomainError("config: trials must be >= 1");
}

double link_power(double p_t, double d, double omega) {
    if (!(p_t > 0.0)) throw DomainError("link_power: transmit power must be positive");
    if (!(d > 0.0)) throw DomainError("link_power: distance must be positive");
    if (!(omega >= 2.0 && omega <= 6.0)) throw DomainError("link_power: exponent must lie in [2, 6]");
    return p_t * std::pow(d, -omega);
}

double mmse_power(double p, int m_total, double p_t) {
    if (!(p > 0.0)) throw DomainError("mmse_power: power must be positive");
    if (m_total < 1) throw DomainError("mmse_power: stream count must be >= 1");
    if (!(p_t > 0.0)) throw DomainError("mmse_power: transmit power must be positive");
    return p * p / (p + 1.0 / (static_cast<double>(m_total) * p_t));
}

double aging_coefficient(double fd_ts) {
    if (!(fd_ts >= 0.0)) throw DomainError("aging_coefficient: fd_ts must be >= 0");
    return bessel_j0(2.0 * std::numbers::pi * fd_ts);
}

double residual_variance(double p, double p_hat, double a, int order) {
    if (order < 1) throw DomainError("residual_variance: order must be >= 1");
    if (!(p_hat > 0.0 && p_hat <= p)) throw DomainError("residual_variance: need 0 < p_hat <= p");
    if (!(a > 0.0 && a <= 1.0)) throw DomainError("residual_variance: a must lie in (0, 1]");
    const double r = p - std::pow(a, 2.0 * order) * p_hat;
    if (r < -1e-12) throw NumericalInstabilityError("residual_variance: negative residual");
    return r < 0.0 ? 0.0 : r;
}

LinkPowerProfile build_profile(const ScenarioConfig& config) {
    config.validate();
    LinkPowerProfile profile;
    const int m = config.m_total();
    profile.p.reserve(m);
    profile.p_hat.reserve(m);
    profile.residual.reserve(m);
    for (int i = 0; i < m; ++i) {
        const double p = link_power(config.tx_power, config.distances[i], config.pathloss_exponents[i]);
        const double p_hat = config.massive_limit ? p : mmse_power(p, m, config.tx_power);
        profile.p.push_back(p);
        profile.p_hat.push_back(p_hat);
        profile.residual.push_back(residual_variance(p, p_hat, config.alpha, 1));
    }
    return profile;
}

LinkPowerProfile sub_profile(const LinkPowerProfile& profile, int offset, int count) {
    if (offset < 0 || count < 0 || offset + count > profile.size())
        throw DomainError("sub_profile: range out of bounds");
    LinkPowerProfile out;
    out.p.assign(profile.p.begin() + offset, profile.p.begin() + offset + count);
    out.p_hat.assign(profile.p_hat.begin() + offset, profile.p_hat.begin() + offset + count);
    out.residual.assign(profile.residual.begin() + offset, profile.residual.begin() + offset + count);
    return out;
}

ChannelRealization realize_channel(const LinkPowerProfile& profile, const ScenarioConfig& config,
                                   RngStream& rng) {
    const int m = config.m_total();
    if (profile.size() != m) throw DomainError("realize_channel: profile size does not match config");
    std::vector<double> est_var(m);
    const double a2 = config.alpha * config.alpha;
    for (int i = 0; i < m; ++i) est_var[i] = a2 * profile.p_hat[i];
    ChannelRealization out;
    out.estimated = sample_complex_gaussian(config.n_rx, m, est_var, rng);
    out.error = sample_complex_gaussian(config.n_rx, m, profile.residual, rng);
    return out;
}

}  // namespace cogmimo
