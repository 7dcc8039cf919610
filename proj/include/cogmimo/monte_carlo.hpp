#pragma once

#include <cstdint>
#include <vector>

#include "cogmimo/channel.hpp"
#include "cogmimo/outage.hpp"

namespace cogmimo {

/// One simulated frame. snr_first_stage belongs to whichever group was
/// detected first (Service 2 when switched is true).
struct TrialOutcome {
    std::vector<double> snr_first_stage;
    std::vector<double> snr_second_stage;
    bool switched = false;
    double beta_draw = 1.0;
};

/// Per-stream empirical CDF sampled on an ascending threshold grid.
struct EmpiricalCdf {
    std::vector<double> gamma_grid;
    std::vector<double> values;
    long long trial_count = 0;
};

/// Everything one simulation pass can measure. Stage CDFs are collected with
/// switching disabled (forced assignment) so they sample the unconditional
/// per-stream laws; delivered CDFs follow the switching rule.
struct SimulationSummary {
    std::vector<EmpiricalCdf> stage1;     ///< all M streams, full-matrix detection
    std::vector<EmpiricalCdf> stage2;     ///< all M streams, each within its own group block
    std::vector<EmpiricalCdf> delivered;  ///< all M streams, switching applied
    EmpiricalCdf min_service1;            ///< group minimum of delivered Service-1 SNRs
    EmpiricalCdf min_service2;
    double switch_probability = 0.0;
    long long trials = 0;
    long long invalid_redraws = 0;
};

/// Post-detection SNR of one stream:
/// 1 / (||row_i(pinv(estimated)) error||^2 + noise ||row_i(pinv(estimated))||^2).
double snr_zf(const ComplexMatrix& estimated_block, const ComplexMatrix& error_block,
              double noise_variance, int stream_index);

/// One frame of the two-stage detector with the priority switching rule.
/// Throws TrialInvalidError on a numerical rank failure (callers redraw).
TrialOutcome run_trial(const LinkPowerProfile& profile, const ScenarioConfig& config,
                       const NoiseUncertainty& nu, RngStream& rng);

/// Full measurement pass: trials are independent substreams of the seed, so
/// results do not depend on the worker count. workers == 0 picks a default.
SimulationSummary simulate_curves(const LinkPowerProfile& profile, const ScenarioConfig& config,
                                  const NoiseUncertainty& nu, long long trials,
                                  const std::vector<double>& gamma_grid, std::uint64_t seed,
                                  int workers = 0);

/// Empirical counterpart of full_report at the configured thresholds.
OutageReport estimate_outage(const LinkPowerProfile& profile, const ScenarioConfig& config,
                             const NoiseUncertainty& nu, long long trials, std::uint64_t seed,
                             int workers = 0);

/// Forced-stage empirical CDFs (stage-1 law of every stream plus each group's
/// stage-2 law), for validating the closed forms.
SimulationSummary empirical_cdf(const LinkPowerProfile& profile, const ScenarioConfig& config,
                                const NoiseUncertainty& nu, long long trials,
                                const std::vector<double>& gamma_grid, std::uint64_t seed,
                                int workers = 0);

}  // namespace cogmimo
