#include "cogmimo/snr_cdf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "cogmimo/errors.hpp"
#include "cogmimo/numerics.hpp"

namespace cogmimo {

namespace {

constexpr double kLn10 = std::numbers::ln10;

double clamp_probability(double f, const char* context) {
    if (f < -1e-9 || f > 1.0 + 1e-9)
        throw NumericalInstabilityError(std::string(context) + ": probability escaped [0, 1] by " +
                                        std::to_string(std::max(-f, f - 1.0)));
    return std::clamp(f, 0.0, 1.0);
}

void check_gamma(double gamma, const char* context) {
    if (!std::isfinite(gamma) || gamma < 0.0)
        throw DomainError(std::string(context) + ": gamma must be finite and >= 0");
}

void check_kernel_inputs(double est_var, int k_max, const char* context) {
    if (!(est_var > 0.0)) throw DomainError(std::string(context) + ": estimated variance must be positive");
    if (k_max < 0) throw DomainError(std::string(context) + ": insufficient receive antennas");
}

// One Psi-weighted term of Eq.-(15)-style sums, assembled in log space; the
// sign comes solely from the characteristic coefficient.
struct TermAccumulator {
    std::vector<double> terms;
    void add(double coeff, double log_mag, double linear_factor = 1.0) {
        if (coeff == 0.0 || linear_factor == 0.0) return;
        const double sign = (coeff < 0.0 ? -1.0 : 1.0) * (linear_factor < 0.0 ? -1.0 : 1.0);
        terms.push_back(sign * std::exp(std::log(std::abs(coeff)) + log_mag) * std::abs(linear_factor));
    }
    double sum() { return stable_sum(terms); }
};

}  // namespace

double beta_density(double x, double l_db) {
    if (!(l_db > 0.0)) throw DomainError("beta_density: l_db must be positive");
    const double lo = std::pow(10.0, -l_db / 10.0);
    const double hi = std::pow(10.0, l_db / 10.0);
    if (x <= lo || x >= hi) return 0.0;
    return 5.0 / (kLn10 * l_db * x);
}

double stage1_cdf_noise_only(double gamma, double est_var, int k_max, double noise_var) {
    check_gamma(gamma, "stage1_cdf_noise_only");
    check_kernel_inputs(est_var, k_max, "stage1_cdf_noise_only");
    if (gamma == 0.0) return 0.0;
    return regularized_gamma_p(k_max + 1, noise_var * gamma / est_var);
}

double stage2_cdf_noise_only(double gamma, double est_var, int k_max, const NoiseUncertainty& nu) {
    check_gamma(gamma, "stage2_cdf_noise_only");
    check_kernel_inputs(est_var, k_max, "stage2_cdf_noise_only");
    if (gamma == 0.0) return 0.0;
    if (nu.l_db == 0.0) return stage1_cdf_noise_only(gamma, est_var, k_max, nu.n_hat0);
    const double c = std::pow(10.0, nu.l_db / 10.0);
    const double t_lo = nu.n_hat0 * gamma / (est_var * c);
    const double t_hi = nu.n_hat0 * gamma * c / est_var;
    const double scale = 5.0 / (nu.l_db * kLn10);
    double s = scale * (exponential_integral_e1(t_lo) - exponential_integral_e1(t_hi));
    for (int k = 1; k <= k_max; ++k)
        s += scale * regularized_gamma_q_difference(k, t_lo, t_hi) / k;
    return clamp_probability(1.0 - s, "stage2_cdf_noise_only");
}

double stage1_cdf_kernel(double gamma, double est_var, const ResidualSpectrum& interference,
                         int k_max, double noise_var) {
    check_gamma(gamma, "stage1_cdf");
    check_kernel_inputs(est_var, k_max, "stage1_cdf");
    if (!(noise_var > 0.0)) throw DomainError("stage1_cdf: noise variance must be positive");
    if (gamma == 0.0) return 0.0;

    const double log_gamma_term = -noise_var * gamma / est_var;
    TermAccumulator acc;
    for (int v = 0; v < interference.distinct_count(); ++v) {
        const double lam = interference.distinct[v];
        const double log_d = std::log(gamma / est_var + 1.0 / lam);
        for (int j = 1; j <= interference.multiplicity[v]; ++j) {
            const double coeff = interference.char_coeff[v][j - 1];
            if (coeff == 0.0) continue;
            const double base = -std::lgamma(static_cast<double>(j)) - j * std::log(lam);
            for (int k = 0; k <= k_max; ++k) {
                for (int l = 0; l <= k; ++l) {
                    const double log_mag = log_binomial(k, l) + std::lgamma(static_cast<double>(j + l)) -
                                           std::lgamma(k + 1.0) + (k - l) * std::log(noise_var) +
                                           k * std::log(gamma) - k * std::log(est_var) + base -
                                           (j + l) * log_d + log_gamma_term;
                    acc.add(coeff, log_mag);
                }
            }
        }
    }
    return clamp_probability(1.0 - acc.sum(), "stage1_cdf");
}

double stage1_cdf_high_snr_kernel(double gamma, double est_var, const ResidualSpectrum& interference,
                                  int k_max, double noise_var) {
    check_gamma(gamma, "stage1_cdf_high_snr");
    check_kernel_inputs(est_var, k_max, "stage1_cdf_high_snr");
    if (!(noise_var > 0.0)) throw DomainError("stage1_cdf_high_snr: noise variance must be positive");
    if (gamma == 0.0) return 0.0;

    TermAccumulator acc;
    for (int v = 0; v < interference.distinct_count(); ++v) {
        const double lam = interference.distinct[v];
        const double log_d = std::log(gamma / est_var + 1.0 / lam);
        for (int j = 1; j <= interference.multiplicity[v]; ++j) {
            const double coeff = interference.char_coeff[v][j - 1];
            if (coeff == 0.0) continue;
            const double base = -std::lgamma(static_cast<double>(j)) - j * std::log(lam);
            for (int k = 0; k <= k_max; ++k) {
                for (int l = 0; l <= k; ++l) {
                    const double log_mag = log_binomial(k, l) + std::lgamma(static_cast<double>(j + l)) -
                                           std::lgamma(k + 1.0) + (k - l) * std::log(noise_var) +
                                           k * std::log(gamma) - k * std::log(est_var) + base -
                                           (j + l) * log_d;
                    acc.add(coeff, log_mag);
                }
            }
        }
    }
    const double f = 1.0 - acc.sum();
    if (f < -0.5 || f > 1.0 + 1e-6)
        throw NumericalInstabilityError("stage1_cdf_high_snr: approximation left its sane range");
    return std::min(f, 1.0);
}

double stage2_cdf_kernel(double gamma, double est_var, const ResidualSpectrum& interference,
                         int k_max, const NoiseUncertainty& nu) {
    check_gamma(gamma, "stage2_cdf");
    check_kernel_inputs(est_var, k_max, "stage2_cdf");
    if (!(nu.n_hat0 > 0.0)) throw DomainError("stage2_cdf: nominal noise must be positive");
    if (nu.l_db < 0.0) throw DomainError("stage2_cdf: l_db must be >= 0");
    if (nu.l_db == 0.0) return stage2_cdf_conditional_kernel(gamma, est_var, interference, k_max, nu.n_hat0, 1.0);
    if (gamma == 0.0) return 0.0;

    const double c = std::pow(10.0, nu.l_db / 10.0);
    const double t_lo = nu.n_hat0 * gamma / (est_var * c);
    const double t_hi = nu.n_hat0 * gamma * c / est_var;
    const double log_scale = std::log(5.0) - std::log(nu.l_db * kLn10);

    TermAccumulator acc;
    for (int v = 0; v < interference.distinct_count(); ++v) {
        const double lam = interference.distinct[v];
        const double log_d = std::log(gamma / est_var + 1.0 / lam);
        for (int j = 1; j <= interference.multiplicity[v]; ++j) {
            const double coeff = interference.char_coeff[v][j - 1];
            if (coeff == 0.0) continue;
            const double base = -std::lgamma(static_cast<double>(j)) - j * std::log(lam) + log_scale;
            for (int k = 0; k <= k_max; ++k) {
                for (int l = 0; l <= k; ++l) {
                    const double log_mag = log_binomial(k, l) + std::lgamma(static_cast<double>(j + l)) -
                                           std::lgamma(k + 1.0) + l * std::log(gamma) -
                                           l * std::log(est_var) + base - (j + l) * log_d;
                    // bracketed difference of upper incomplete gammas, the k = l
                    // term through the exponential-integral limit
                    double gamma_diff;
                    if (k == l) {
                        gamma_diff = exponential_integral_e1(t_lo) - exponential_integral_e1(t_hi);
                        acc.add(coeff, log_mag, gamma_diff);
                    } else {
                        gamma_diff = regularized_gamma_q_difference(k - l, t_lo, t_hi);
                        acc.add(coeff, log_mag + std::lgamma(static_cast<double>(k - l)), gamma_diff);
                    }
                }
            }
        }
    }
    return clamp_probability(1.0 - acc.sum(), "stage2_cdf");
}

double stage2_cdf_conditional_kernel(double gamma, double est_var,
                                     const ResidualSpectrum& interference, int k_max,
                                     double n_hat0, double beta) {
    if (!(beta > 0.0)) throw DomainError("stage2_cdf_conditional: beta must be positive");
    return stage1_cdf_kernel(gamma, est_var, interference, k_max, n_hat0 / beta);
}

double stage2_cdf_high_snr_kernel(double gamma, double est_var, const ResidualSpectrum& interference,
                                  int k_max, const NoiseUncertainty& nu) {
    check_gamma(gamma, "stage2_cdf_high_snr");
    check_kernel_inputs(est_var, k_max, "stage2_cdf_high_snr");
    if (gamma == 0.0) return 0.0;

    // ln(N^0 gamma / (est 10^{-L/10})) - ln(N^0 gamma / (est 10^{L/10})):
    // independent of gamma, equal to L ln(10)/5.
    double bracket_factor = 1.0;
    if (nu.l_db > 0.0) {
        const double c = std::pow(10.0, nu.l_db / 10.0);
        const double log_hi = std::log(nu.n_hat0 * gamma * c / est_var);
        const double log_lo = std::log(nu.n_hat0 * gamma / (est_var * c));
        bracket_factor = 5.0 * (log_hi - log_lo) / (nu.l_db * kLn10);
    }

    TermAccumulator acc;
    for (int v = 0; v < interference.distinct_count(); ++v) {
        const double lam = interference.distinct[v];
        const double log_d = std::log(gamma / est_var + 1.0 / lam);
        for (int j = 1; j <= interference.multiplicity[v]; ++j) {
            const double coeff = interference.char_coeff[v][j - 1];
            if (coeff == 0.0) continue;
            const double base = -std::lgamma(static_cast<double>(j)) - j * std::log(lam);
            for (int k = 0; k <= k_max; ++k) {
                const double log_mag = std::lgamma(static_cast<double>(j + k)) - std::lgamma(k + 1.0) +
                                       k * std::log(gamma) - k * std::log(est_var) + base -
                                       (j + k) * log_d;
                acc.add(coeff, log_mag, bracket_factor);
            }
        }
    }
    const double f = 1.0 - acc.sum();
    if (f < -0.5 || f > 1.0 + 1e-6)
        throw NumericalInstabilityError("stage2_cdf_high_snr: approximation left its sane range");
    return std::min(f, 1.0);
}

namespace {

struct WrapperInputs {
    double est_var;
    int k_max;
    bool degenerate;
    ResidualSpectrum spectrum;
};

WrapperInputs prepare(int stream_index, const LinkPowerProfile& profile, const ScenarioConfig& config,
                      int t, const char* context) {
    if (t != profile.size())
        throw DomainError(std::string(context) + ": stream count does not match the detection profile");
    if (stream_index < 0 || stream_index >= t)
        throw DomainError(std::string(context) + ": stream index out of range");
    if (config.n_rx < t) throw DomainError(std::string(context) + ": insufficient receive antennas");
    WrapperInputs in;
    in.est_var = config.alpha * config.alpha * profile.p_hat[stream_index];
    in.k_max = config.n_rx - t;
    in.degenerate = *std::max_element(profile.residual.begin(), profile.residual.end()) == 0.0;
    if (!in.degenerate) in.spectrum = residual_spectrum(profile.residual);
    return in;
}

}  // namespace

double cdf_stage1(double gamma, int stream_index, const LinkPowerProfile& profile,
                  const ScenarioConfig& config, int t1) {
    const auto in = prepare(stream_index, profile, config, t1, "cdf_stage1");
    if (in.degenerate) return stage1_cdf_noise_only(gamma, in.est_var, in.k_max, config.noise_power);
    return stage1_cdf_kernel(gamma, in.est_var, in.spectrum, in.k_max, config.noise_power);
}

double cdf_stage2(double gamma, int stream_index, const LinkPowerProfile& profile,
                  const ScenarioConfig& config, int t2, const NoiseUncertainty& nu) {
    const auto in = prepare(stream_index, profile, config, t2, "cdf_stage2");
    if (in.degenerate) return stage2_cdf_noise_only(gamma, in.est_var, in.k_max, nu);
    return stage2_cdf_kernel(gamma, in.est_var, in.spectrum, in.k_max, nu);
}

double cdf_stage1_high_snr(double gamma, int stream_index, const LinkPowerProfile& profile,
                           const ScenarioConfig& config, int t1) {
    const auto in = prepare(stream_index, profile, config, t1, "cdf_stage1_high_snr");
    if (in.degenerate)
        throw DegenerateSpectrumError("cdf_stage1_high_snr: no high-SNR limit under perfect CSI");
    return stage1_cdf_high_snr_kernel(gamma, in.est_var, in.spectrum, in.k_max, config.noise_power);
}

double cdf_stage2_high_snr(double gamma, int stream_index, const LinkPowerProfile& profile,
                           const ScenarioConfig& config, int t2, const NoiseUncertainty& nu) {
    const auto in = prepare(stream_index, profile, config, t2, "cdf_stage2_high_snr");
    if (in.degenerate)
        throw DegenerateSpectrumError("cdf_stage2_high_snr: no high-SNR limit under perfect CSI");
    return stage2_cdf_high_snr_kernel(gamma, in.est_var, in.spectrum, in.k_max, nu);
}

double cdf_min_stage1(double gamma_t, const LinkPowerProfile& profile, const ScenarioConfig& config) {
    if (!(gamma_t >= 0.0)) throw DomainError("cdf_min_stage1: gamma_t must be >= 0");
    if (profile.size() != config.m_total())
        throw DomainError("cdf_min_stage1: profile must describe the full detection set");
    double survive = 1.0;
    for (int i = 0; i < config.m1; ++i)
        survive *= 1.0 - cdf_stage1(gamma_t, i, profile, config, config.m_total());
    return 1.0 - survive;
}

}  // namespace cogmimo
