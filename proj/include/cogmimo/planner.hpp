#pragma once

#include <span>
#include <vector>

#include "cogmimo/channel.hpp"

namespace cogmimo {

/// Deterministic SNR equivalent; unbounded flags the perfect-CSI case where
/// the interference sum vanishes and the equivalent grows without bound.
struct AsymptoticSnr {
    double value = 0.0;
    bool unbounded = false;
};

/// (N - M) a^2 p_hat_i / sum_j (p_j - a^2 p_hat_j) over the full profile.
AsymptoticSnr asymptotic_snr_stage1(int stream_index, const LinkPowerProfile& profile,
                                    const ScenarioConfig& config);

/// Same with the Service-2 sub-profile and N - M2 surplus. stream_index is
/// 0-based within Service 2.
AsymptoticSnr asymptotic_snr_stage2(int stream_index, const LinkPowerProfile& profile,
                                    const ScenarioConfig& config);

/// KKT optimality test for admitting m2 secondary streams under i.i.d.
/// fading: ln(1 + (n/m2 - 1) c / r) (c (n - m2) + m2 r) >= c n with
/// c = a^2 p_hat and r = p - c.
bool optimality_condition(int m2, int n, double a, double p, double p_hat);

/// Secondary sum rate m2 log2(1 + (n/m2 - 1) c / r).
double sum_rate_objective(int m2, int n, double a, double p, double p_hat);

struct PlannerResult {
    int m2_star = 0;            ///< admitted secondary count, 0 when no value qualifies
    double lambda_diag = 0.0;   ///< Lagrange multiplier at m2_star (NaN when m2_star == 0)
    double objective = 0.0;     ///< sum rate at m2_star
    double constraint_value = 0.0;  ///< admission constraint left side at m2_star (diagnostic)
    long long iterations = 0;   ///< condition evaluations spent
};

/// Descending scan from N - M1 to 1, stopping at the first m2 that satisfies
/// the optimality condition. Requires i.i.d. links; with config.massive_limit
/// the profile already carries p_hat = p.
PlannerResult optimal_m2(const ScenarioConfig& config, const LinkPowerProfile& profile);

/// Signs of central second differences of the sum-rate objective (expected
/// negative) and of the admission constraint (expected positive) on an
/// integer grid inside (0, n - m1).
struct ConvexityReport {
    std::vector<int> grid;
    std::vector<double> objective_second_diff;
    std::vector<double> constraint_second_diff;
    bool objective_all_negative = false;
    bool constraint_all_positive = false;
};

ConvexityReport convexity_certificate(int n, int m1, double a, double p, double p_hat,
                                      double gamma_th, std::span<const int> grid);

struct CoherenceResult {
    long long t_max = 0;
    double t_max_real = 0.0;  ///< pre-floor solution (diagnostic)
    double snr_at_tmax = 0.0;
    bool infinite = false;    ///< a == 1: the channel never ages
    bool infeasible = false;  ///< constraint unsatisfiable even at T = 0
};

/// Largest symbol count T with the aged asymptotic minimum SNR still above
/// gamma_th. Equal estimate powers collapse to the closed i.i.d. form.
CoherenceResult coherence_time(const LinkPowerProfile& profile, const ScenarioConfig& config,
                               double gamma_th);

}  // namespace cogmimo
