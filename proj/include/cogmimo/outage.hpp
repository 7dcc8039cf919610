#pragma once

#include <vector>

#include "cogmimo/snr_cdf.hpp"

namespace cogmimo {

struct OutageReport {
    std::vector<double> per_stream_service1;
    std::vector<double> per_stream_service2;
    double total_service1 = 0.0;
    double total_service2 = 0.0;
    double switch_probability = 0.0;  ///< F_min(gamma_t): at least one Service-1 stream under the switching threshold
};

/// Per-stream Service-1 outage. stream_index is 0-based within Service 1.
/// F1(gamma_th; M) (1 - Fmin) + F2(gamma_th; M1) Fmin: when switching fires,
/// Service 1 is detected second with only its own M1 streams present.
double outage_service1(double gamma_th, double gamma_t, int stream_index,
                       const LinkPowerProfile& profile, const ScenarioConfig& config,
                       const NoiseUncertainty& nu);

/// Per-stream Service-2 outage. stream_index is 0-based within Service 2.
double outage_service2(double gamma_th, double gamma_t, int stream_index,
                       const LinkPowerProfile& profile, const ScenarioConfig& config,
                       const NoiseUncertainty& nu);

/// Group outage 1 - prod_i (1 - P_i) for service 1 or 2.
double outage_total(int service, double gamma_th, double gamma_t, const LinkPowerProfile& profile,
                    const ScenarioConfig& config, const NoiseUncertainty& nu);

/// Every outage figure at the configured (gamma_th, gamma_t).
OutageReport full_report(const LinkPowerProfile& profile, const ScenarioConfig& config,
                         const NoiseUncertainty& nu);

}  // namespace cogmimo
