#include "cogmimo/outage.hpp"

#include "cogmimo/errors.hpp"

namespace cogmimo {

double outage_service1(double gamma_th, double gamma_t, int stream_index,
                       const LinkPowerProfile& profile, const ScenarioConfig& config,
                       const NoiseUncertainty& nu) {
    if (stream_index < 0 || stream_index >= config.m1)
        throw DomainError("outage_service1: stream index out of range");
    const int m = config.m_total();
    const double f_min = cdf_min_stage1(gamma_t, profile, config);
    const double f1 = cdf_stage1(gamma_th, stream_index, profile, config, m);
    const auto service1 = sub_profile(profile, 0, config.m1);
    const double f2 = cdf_stage2(gamma_th, stream_index, service1, config, config.m1, nu);
    return f1 * (1.0 - f_min) + f2 * f_min;
}

double outage_service2(double gamma_th, double gamma_t, int stream_index,
                       const LinkPowerProfile& profile, const ScenarioConfig& config,
                       const NoiseUncertainty& nu) {
    if (stream_index < 0 || stream_index >= config.m2)
        throw DomainError("outage_service2: stream index out of range");
    const int m = config.m_total();
    const double f_min = cdf_min_stage1(gamma_t, profile, config);
    const auto service2 = sub_profile(profile, config.m1, config.m2);
    const double f2 = cdf_stage2(gamma_th, stream_index, service2, config, config.m2, nu);
    const double f1 = cdf_stage1(gamma_th, config.m1 + stream_index, profile, config, m);
    return f2 * (1.0 - f_min) + f1 * f_min;
}

double outage_total(int service, double gamma_th, double gamma_t, const LinkPowerProfile& profile,
                    const ScenarioConfig& config, const NoiseUncertainty& nu) {
    if (service != 1 && service != 2) throw DomainError("outage_total: service must be 1 or 2");
    const int count = service == 1 ? config.m1 : config.m2;
    double survive = 1.0;
    for (int i = 0; i < count; ++i) {
        const double p = service == 1 ? outage_service1(gamma_th, gamma_t, i, profile, config, nu)
                                      : outage_service2(gamma_th, gamma_t, i, profile, config, nu);
        survive *= 1.0 - p;
    }
    return 1.0 - survive;
}

OutageReport full_report(const LinkPowerProfile& profile, const ScenarioConfig& config,
                         const NoiseUncertainty& nu) {
    config.validate();
    if (profile.size() != config.m_total())
        throw DomainError("full_report: profile size does not match config");
    OutageReport report;
    report.switch_probability = cdf_min_stage1(config.gamma_t, profile, config);
    for (int i = 0; i < config.m1; ++i)
        report.per_stream_service1.push_back(
            outage_service1(config.gamma_th, config.gamma_t, i, profile, config, nu));
    for (int i = 0; i < config.m2; ++i)
        report.per_stream_service2.push_back(
            outage_service2(config.gamma_th, config.gamma_t, i, profile, config, nu));
    double survive1 = 1.0;
    for (double p : report.per_stream_service1) survive1 *= 1.0 - p;
    report.total_service1 = config.m1 > 0 ? 1.0 - survive1 : 0.0;
    double survive2 = 1.0;
    for (double p : report.per_stream_service2) survive2 *= 1.0 - p;
    report.total_service2 = config.m2 > 0 ? 1.0 - survive2 : 0.0;
    return report;
}

}  // namespace cogmimo
