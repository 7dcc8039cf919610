#pragma once

#include "cogmimo/channel.hpp"
#include "cogmimo/spectrum.hpp"

namespace cogmimo {

/// Stage-2 noise model: the estimated nominal noise n_hat0 is fixed and the
/// effective noise variance n_hat0 / beta is random, beta being dB-uniform on
/// [-l_db, l_db].
struct NoiseUncertainty {
    double l_db = 2.0;
    double n_hat0 = 1.0;
};

/// Density of the noise uncertainty factor: 5 / (ln(10) L x) on
/// (10^{-L/10}, 10^{L/10}) and zero outside.
double beta_density(double x, double l_db);

// ---------------------------------------------------------------------------
// Kernels. est_var is the probed stream's estimated-channel variance a^2
// p_hat_i, interference the residual spectrum of every stream present in the
// detection (the probed one included), and k_max = N - t the antenna surplus.
// Results within 1e-9 of [0, 1] are clamped; larger excursions throw
// NumericalInstabilityError.
// ---------------------------------------------------------------------------

double stage1_cdf_kernel(double gamma, double est_var, const ResidualSpectrum& interference,
                         int k_max, double noise_var);

double stage2_cdf_kernel(double gamma, double est_var, const ResidualSpectrum& interference,
                         int k_max, const NoiseUncertainty& nu);

/// Stage-2 CDF conditioned on a fixed noise uncertainty draw.
double stage2_cdf_conditional_kernel(double gamma, double est_var,
                                     const ResidualSpectrum& interference, int k_max,
                                     double n_hat0, double beta);

/// Interference-free chi-squared branch used when every residual vanishes.
double stage1_cdf_noise_only(double gamma, double est_var, int k_max, double noise_var);
double stage2_cdf_noise_only(double gamma, double est_var, int k_max, const NoiseUncertainty& nu);

/// High-SNR forms: the exact sums with the exponential factor dropped
/// (stage 1) and with only the surviving incomplete-gamma limits kept
/// (stage 2). These are approximations, not CDFs: slightly negative values
/// below the validity region are returned as-is.
double stage1_cdf_high_snr_kernel(double gamma, double est_var, const ResidualSpectrum& interference,
                                  int k_max, double noise_var);
double stage2_cdf_high_snr_kernel(double gamma, double est_var, const ResidualSpectrum& interference,
                                  int k_max, const NoiseUncertainty& nu);

// ---------------------------------------------------------------------------
// Profile-level wrappers. The profile passed in is the detection set: all t1
// streams seen by the first stage, or the t2 streams remaining in the second
// stage. stream_index (0-based) picks the probed stream within that set; the
// redundant t argument must match the profile size.
// ---------------------------------------------------------------------------

double cdf_stage1(double gamma, int stream_index, const LinkPowerProfile& profile,
                  const ScenarioConfig& config, int t1);

double cdf_stage2(double gamma, int stream_index, const LinkPowerProfile& profile,
                  const ScenarioConfig& config, int t2, const NoiseUncertainty& nu);

double cdf_stage1_high_snr(double gamma, int stream_index, const LinkPowerProfile& profile,
                           const ScenarioConfig& config, int t1);

double cdf_stage2_high_snr(double gamma, int stream_index, const LinkPowerProfile& profile,
                           const ScenarioConfig& config, int t2, const NoiseUncertainty& nu);

/// CDF of the minimum first-stage SNR over the Service-1 streams,
/// 1 - prod_i (1 - F_i^{(1)}(gamma_t; M)).
double cdf_min_stage1(double gamma_t, const LinkPowerProfile& profile, const ScenarioConfig& config);

}  // namespace cogmimo
