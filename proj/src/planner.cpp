#include "cogmimo/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cogmimo/errors.hpp"

namespace cogmimo {

namespace {

double residual_sum(std::span<const double> p, std::span<const double> p_hat, double a2) {
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) sum += p[i] - a2 * p_hat[i];
    return sum;
}

void check_iid_pair(double p, double p_hat, const char* context) {
    if (!(p > 0.0) || !(p_hat > 0.0) || p_hat > p)
        throw DomainError(std::string(context) + ": need 0 < p_hat <= p");
}

// p - a^2 p_hat with the perfect-CSI degeneracy rejected.
double strict_residual(double a, double p, double p_hat, const char* context) {
    const double r = p - a * a * p_hat;
    if (r <= 0.0) throw DomainError(std::string(context) + ": perfect CSI (p == a^2 p_hat) is degenerate");
    return r;
}

}  // namespace

AsymptoticSnr asymptotic_snr_stage1(int stream_index, const LinkPowerProfile& profile,
                                    const ScenarioConfig& config) {
    const int m = config.m_total();
    if (profile.size() != m) throw DomainError("asymptotic_snr_stage1: profile size does not match config");
    if (stream_index < 0 || stream_index >= m)
        throw DomainError("asymptotic_snr_stage1: stream index out of range");
    const double a2 = config.alpha * config.alpha;
    const double denom = residual_sum(profile.p, profile.p_hat, a2);
    AsymptoticSnr out;
    if (denom <= 0.0) {
        out.unbounded = true;
        out.value = std::numeric_limits<double>::infinity();
        return out;
    }
    out.value = (config.n_rx - m) * a2 * profile.p_hat[stream_index] / denom;
    return out;
}

AsymptoticSnr asymptotic_snr_stage2(int stream_index, const LinkPowerProfile& profile,
                                    const ScenarioConfig& config) {
    if (profile.size() != config.m_total())
        throw DomainError("asymptotic_snr_stage2: profile size does not match config");
    if (stream_index < 0 || stream_index >= config.m2)
        throw DomainError("asymptotic_snr_stage2: stream index out of range");
    const auto group = sub_profile(profile, config.m1, config.m2);
    const double a2 = config.alpha * config.alpha;
    const double denom = residual_sum(group.p, group.p_hat, a2);
    AsymptoticSnr out;
    if (denom <= 0.0) {
        out.unbounded = true;
        out.value = std::numeric_limits<double>::infinity();
        return out;
    }
    out.value = (config.n_rx - config.m2) * a2 * group.p_hat[stream_index] / denom;
    return out;
}

bool optimality_condition(int m2, int n, double a, double p, double p_hat) {
    if (m2 < 1 || m2 > n) throw DomainError("optimality_condition: need 1 <= m2 <= n");
    if (!(a > 0.0 && a <= 1.0)) throw DomainError("optimality_condition: a must lie in (0, 1]");
    check_iid_pair(p, p_hat, "optimality_condition");
    const double c = a * a * p_hat;
    const double r = strict_residual(a, p, p_hat, "optimality_condition");
    const double lhs = std::log1p((static_cast<double>(n) / m2 - 1.0) * c / r) *
                       (c * (n - m2) + m2 * r);
    return lhs >= c * n;
}

double sum_rate_objective(int m2, int n, double a, double p, double p_hat) {
    if (m2 < 1 || m2 > n) throw DomainError("sum_rate_objective: need 1 <= m2 <= n");
    check_iid_pair(p, p_hat, "sum_rate_objective");
    const double c = a * a * p_hat;
    const double r = strict_residual(a, p, p_hat, "sum_rate_objective");
    return m2 * std::log2(1.0 + (static_cast<double>(n) / m2 - 1.0) * c / r);
}

PlannerResult optimal_m2(const ScenarioConfig& config, const LinkPowerProfile& profile) {
    config.validate();
    if (profile.size() != config.m_total()) throw DomainError("optimal_m2: profile size does not match config");
    if (config.n_rx <= config.m1) throw DomainError("optimal_m2: need n_rx > m1");
    // one common (p, p_hat) pair: the scan assumes i.i.d. links
    const double p = profile.p[0];
    const double p_hat_raw = profile.p_hat[0];
    for (int i = 1; i < profile.size(); ++i)
        if (std::abs(profile.p[i] - p) > 1e-9 * p || std::abs(profile.p_hat[i] - p_hat_raw) > 1e-9 * p_hat_raw)
            throw DomainError("optimal_m2: the admission scan requires i.i.d. links");
    const double p_hat = config.massive_limit ? p : p_hat_raw;

    const int n = config.n_rx;
    const double a = config.alpha;
    PlannerResult result;
    result.lambda_diag = std::numeric_limits<double>::quiet_NaN();
    for (int m2 = n - config.m1; m2 >= 1; --m2) {
        ++result.iterations;
        if (!optimality_condition(m2, n, a, p, p_hat)) continue;
        result.m2_star = m2;
        const double c = a * a * p_hat;
        const double r = p - c;
        const double mix = c * (n - m2) + m2 * r;
        const double bracket = std::log1p((static_cast<double>(n) / m2 - 1.0) * c / r) * mix - c * n;
        const double gap = static_cast<double>(n - config.m1 - m2);
        result.lambda_diag = c * gap * gap / (std::numbers::ln2 * config.gamma_th * r * mix) * bracket;
        result.objective = sum_rate_objective(m2, n, a, p, p_hat);
        result.constraint_value =
            config.gamma_th * (config.m1 + m2) * r / ((n - config.m1 - m2) * c) - 1.0;
        break;
    }
    return result;
}

ConvexityReport convexity_certificate(int n, int m1, double a, double p, double p_hat,
                                      double gamma_th, std::span<const int> grid) {
    if (n <= m1 + 1) throw DomainError("convexity_certificate: need n > m1 + 1");
    check_iid_pair(p, p_hat, "convexity_certificate");
    const double c = a * a * p_hat;
    const double r = strict_residual(a, p, p_hat, "convexity_certificate");

    // m2 = 0 enters only as a finite-difference neighbor; the objective
    // limit there is 0
    auto objective = [&](int m2) {
        return m2 == 0 ? 0.0 : m2 * std::log2(1.0 + (static_cast<double>(n) / m2 - 1.0) * c / r);
    };
    // left side of the admission constraint; +inf at the m2 = n - m1 boundary
    auto constraint = [&](int m2) {
        return gamma_th * (m1 + m2) * r / ((static_cast<double>(n) - m1 - m2) * c) - 1.0;
    };

    ConvexityReport report;
    report.objective_all_negative = true;
    report.constraint_all_positive = true;
    for (int m2 : grid) {
        if (m2 < 1 || m2 > n - m1 - 1)
            throw DomainError("convexity_certificate: grid must lie inside (0, n - m1)");
        report.grid.push_back(m2);
        const double d2_obj = objective(m2 + 1) - 2.0 * objective(m2) + objective(m2 - 1);
        const double d2_con = constraint(m2 + 1) - 2.0 * constraint(m2) + constraint(m2 - 1);
        report.objective_second_diff.push_back(d2_obj);
        report.constraint_second_diff.push_back(d2_con);
        if (!(d2_obj < 0.0)) report.objective_all_negative = false;
        if (!(d2_con > 0.0)) report.constraint_all_positive = false;
    }
    return report;
}

CoherenceResult coherence_time(const LinkPowerProfile& profile, const ScenarioConfig& config,
                               double gamma_th) {
    if (profile.size() != config.m_total())
        throw DomainError("coherence_time: profile size does not match config");
    if (!(gamma_th > 0.0)) throw DomainError("coherence_time: gamma_th must be positive");
    const int n = config.n_rx;
    const int m = config.m_total();
    if (n < m) throw DomainError("coherence_time: need n_rx >= m");
    const double a = config.alpha;

    CoherenceResult result;
    if (a == 1.0) {
        result.infinite = true;
        result.t_max = 0;
        result.t_max_real = std::numeric_limits<double>::infinity();
        result.snr_at_tmax = std::numeric_limits<double>::infinity();
        return result;
    }

    const double p_hat_min = *std::min_element(profile.p_hat.begin(), profile.p_hat.end());
    const double p_hat_max = *std::max_element(profile.p_hat.begin(), profile.p_hat.end());
    const bool iid = (p_hat_max - p_hat_min) <= 1e-12 * p_hat_max;
    double ratio;
    if (iid) {
        ratio = m * gamma_th / (static_cast<double>(n) - m + m * gamma_th);
    } else {
        double sum_hat = 0.0;
        for (double v : profile.p_hat) sum_hat += v;
        ratio = gamma_th * sum_hat / (gamma_th * sum_hat + p_hat_min * (n - m));
    }
    result.t_max_real = std::log(ratio) / (2.0 * std::log(a));
    if (result.t_max_real < 0.0) {
        result.infeasible = true;
        result.t_max = 0;
    } else {
        result.t_max = static_cast<long long>(std::floor(result.t_max_real));
    }

    // aged minimum SNR actually delivered at t_max
    const double a2t = std::pow(a, 2.0 * static_cast<double>(result.t_max));
    double denom = 0.0;
    for (std::size_t i = 0; i < profile.p_hat.size(); ++i)
        denom += profile.p_hat[i] - a2t * profile.p_hat[i];
    result.snr_at_tmax = denom > 0.0 ? (n - m) * a2t * p_hat_min / denom
                                     : std::numeric_limits<double>::infinity();
    return result;
}

}  // namespace cogmimo
