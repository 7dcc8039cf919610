#include "cogmimo/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "cogmimo/errors.hpp"

namespace cogmimo {

namespace {

constexpr std::uint64_t kRedrawBase = 1ULL << 40;
constexpr int kMaxRedraws = 8;

double row_snr(std::span<const std::complex<double>> w, const ComplexMatrix& error,
               double noise_variance) {
    double interference = 0.0;
    for (int c = 0; c < error.cols(); ++c) {
        std::complex<double> dot{0.0, 0.0};
        for (int r = 0; r < error.rows(); ++r) dot += w[r] * error(r, c);
        interference += std::norm(dot);
    }
    double row_norm_sq = 0.0;
    for (const auto& z : w) row_norm_sq += std::norm(z);
    return 1.0 / (interference + noise_variance * row_norm_sq);
}

// Everything a trial can yield: stage-1 SNRs of all M streams from the full
// matrix, each group's stage-2 SNRs from its own sub-block, and the draw of
// the noise uncertainty factor.
struct TrialData {
    std::vector<double> stage1;        // size M
    std::vector<double> stage2_s1;     // size M1
    std::vector<double> stage2_s2;     // size M2
    double beta = 1.0;
    bool switched = false;
};

TrialData compute_trial(const LinkPowerProfile& profile, const ScenarioConfig& config,
                        const NoiseUncertainty& nu, RngStream& rng) {
    const int m = config.m_total();
    const auto realization = realize_channel(profile, config, rng);
    TrialData data;
    if (nu.l_db > 0.0) data.beta = std::pow(10.0, rng.next_uniform(-nu.l_db, nu.l_db) / 10.0);

    ComplexMatrix pinv_full;
    try {
        pinv_full = pseudo_inverse(realization.estimated);
    } catch (const SingularMatrixError&) {
        throw TrialInvalidError("rank failure in first-stage equalizer");
    }
    data.stage1.resize(m);
    for (int i = 0; i < m; ++i) data.stage1[i] = row_snr(pinv_full.row(i), realization.error, config.noise_power);

    const double stage2_noise = nu.n_hat0 / data.beta;
    try {
        if (config.m1 > 0) {
            const auto est = realization.estimated.columns(0, config.m1);
            const auto err = realization.error.columns(0, config.m1);
            const auto pinv = pseudo_inverse(est);
            data.stage2_s1.resize(config.m1);
            for (int i = 0; i < config.m1; ++i) data.stage2_s1[i] = row_snr(pinv.row(i), err, stage2_noise);
        }
        if (config.m2 > 0) {
            const auto est = realization.estimated.columns(config.m1, config.m2);
            const auto err = realization.error.columns(config.m1, config.m2);
            const auto pinv = pseudo_inverse(est);
            data.stage2_s2.resize(config.m2);
            for (int i = 0; i < config.m2; ++i) data.stage2_s2[i] = row_snr(pinv.row(i), err, stage2_noise);
        }
    } catch (const SingularMatrixError&) {
        throw TrialInvalidError("rank failure in second-stage equalizer");
    }

    // Switch iff some Service-1 stage-1 SNR fails the strict > gamma_t test;
    // with no Service-2 streams there is nothing to swap with.
    if (config.m1 > 0 && config.m2 > 0) {
        const double min_snr = *std::min_element(data.stage1.begin(), data.stage1.begin() + config.m1);
        data.switched = !(min_snr > config.gamma_t);
    }
    return data;
}

struct Accumulator {
    // histogram bin = first grid index >= sample; the last bin collects
    // samples above the grid
    std::vector<std::vector<long long>> stage1, stage2, delivered;
    std::vector<long long> min_s1, min_s2;
    long long switched = 0;
    long long invalid = 0;
    long long count = 0;

    Accumulator(int streams, int grid_size)
        : stage1(streams, std::vector<long long>(grid_size + 1, 0)),
          stage2(streams, std::vector<long long>(grid_size + 1, 0)),
          delivered(streams, std::vector<long long>(grid_size + 1, 0)),
          min_s1(grid_size + 1, 0),
          min_s2(grid_size + 1, 0) {}

    void merge(const Accumulator& other) {
        for (std::size_t s = 0; s < stage1.size(); ++s)
            for (std::size_t g = 0; g < stage1[s].size(); ++g) {
                stage1[s][g] += other.stage1[s][g];
                stage2[s][g] += other.stage2[s][g];
                delivered[s][g] += other.delivered[s][g];
            }
        for (std::size_t g = 0; g < min_s1.size(); ++g) {
            min_s1[g] += other.min_s1[g];
            min_s2[g] += other.min_s2[g];
        }
        switched += other.switched;
        invalid += other.invalid;
        count += other.count;
    }
};

void bin_sample(std::vector<long long>& hist, const std::vector<double>& grid, double sample) {
    const auto it = std::lower_bound(grid.begin(), grid.end(), sample);
    ++hist[static_cast<std::size_t>(it - grid.begin())];
}

void accumulate_chunk(const LinkPowerProfile& profile, const ScenarioConfig& config,
                      const NoiseUncertainty& nu, std::uint64_t seed, long long begin, long long end,
                      const std::vector<double>& grid, Accumulator& acc) {
    const int m1 = config.m1;
    const int m2 = config.m2;
    for (long long trial = begin; trial < end; ++trial) {
        TrialData data;
        bool ok = false;
        for (int attempt = 0; attempt <= kMaxRedraws && !ok; ++attempt) {
            RngStream rng(seed, attempt == 0
                                    ? static_cast<std::uint64_t>(trial)
                                    : kRedrawBase + static_cast<std::uint64_t>(trial) * kMaxRedraws + attempt);
            try {
                data = compute_trial(profile, config, nu, rng);
                ok = true;
            } catch (const TrialInvalidError&) {
                ++acc.invalid;
            }
        }
        if (!ok) throw NumericalInstabilityError("monte carlo: trial could not be redrawn to full rank");

        ++acc.count;
        if (data.switched) ++acc.switched;
        double min1 = std::numeric_limits<double>::infinity();
        double min2 = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m1; ++i) {
            bin_sample(acc.stage1[i], grid, data.stage1[i]);
            bin_sample(acc.stage2[i], grid, data.stage2_s1[i]);
            const double snr = data.switched ? data.stage2_s1[i] : data.stage1[i];
            bin_sample(acc.delivered[i], grid, snr);
            min1 = std::min(min1, snr);
        }
        for (int j = 0; j < m2; ++j) {
            bin_sample(acc.stage1[m1 + j], grid, data.stage1[m1 + j]);
            bin_sample(acc.stage2[m1 + j], grid, data.stage2_s2[j]);
            const double snr = data.switched ? data.stage1[m1 + j] : data.stage2_s2[j];
            bin_sample(acc.delivered[m1 + j], grid, snr);
            min2 = std::min(min2, snr);
        }
        if (m1 > 0) bin_sample(acc.min_s1, grid, min1);
        if (m2 > 0) bin_sample(acc.min_s2, grid, min2);
    }
}

EmpiricalCdf to_cdf(const std::vector<long long>& hist, const std::vector<double>& grid,
                    long long trials) {
    EmpiricalCdf cdf;
    cdf.gamma_grid = grid;
    cdf.trial_count = trials;
    cdf.values.resize(grid.size());
    long long running = 0;
    for (std::size_t g = 0; g < grid.size(); ++g) {
        running += hist[g];
        cdf.values[g] = static_cast<double>(running) / static_cast<double>(trials);
    }
    return cdf;
}

}  // namespace

double snr_zf(const ComplexMatrix& estimated_block, const ComplexMatrix& error_block,
              double noise_variance, int stream_index) {
    if (error_block.rows() != estimated_block.rows())
        throw DomainError("snr_zf: estimated and error blocks must share the antenna dimension");
    if (stream_index < 0 || stream_index >= estimated_block.cols())
        throw DomainError("snr_zf: stream index out of range");
    if (!(noise_variance > 0.0)) throw DomainError("snr_zf: noise variance must be positive");
    ComplexMatrix pinv;
    try {
        pinv = pseudo_inverse(estimated_block);
    } catch (const SingularMatrixError&) {
        throw TrialInvalidError("snr_zf: estimated block is rank deficient");
    }
    return row_snr(pinv.row(stream_index), error_block, noise_variance);
}

TrialOutcome run_trial(const LinkPowerProfile& profile, const ScenarioConfig& config,
                       const NoiseUncertainty& nu, RngStream& rng) {
    config.validate();
    const auto data = compute_trial(profile, config, nu, rng);
    TrialOutcome outcome;
    outcome.switched = data.switched;
    outcome.beta_draw = data.beta;
    if (!data.switched) {
        outcome.snr_first_stage.assign(data.stage1.begin(), data.stage1.begin() + config.m1);
        outcome.snr_second_stage = data.stage2_s2;
    } else {
        outcome.snr_first_stage.assign(data.stage1.begin() + config.m1, data.stage1.end());
        outcome.snr_second_stage = data.stage2_s1;
    }
    return outcome;
}

SimulationSummary simulate_curves(const LinkPowerProfile& profile, const ScenarioConfig& config,
                                  const NoiseUncertainty& nu, long long trials,
                                  const std::vector<double>& gamma_grid, std::uint64_t seed,
                                  int workers) {
    config.validate();
    if (profile.size() != config.m_total())
        throw DomainError("simulate_curves: profile size does not match config");
    if (trials < 1) throw DomainError("simulate_curves: trials must be >= 1");
    if (!std::is_sorted(gamma_grid.begin(), gamma_grid.end()))
        throw DomainError("simulate_curves: gamma grid must be ascending");

    const int m = config.m_total();
    if (workers <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        workers = static_cast<int>(std::clamp<unsigned>(hw == 0 ? 1 : hw, 1, 16));
    }
    if (trials < 4096) workers = 1;
    const long long chunk = (trials + workers - 1) / workers;

    std::vector<Accumulator> accs(workers, Accumulator(m, static_cast<int>(gamma_grid.size())));
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> failures(workers);
    for (int w = 0; w < workers; ++w) {
        const long long begin = w * chunk;
        const long long end = std::min(trials, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&, w, begin, end] {
            try {
                accumulate_chunk(profile, config, nu, seed, begin, end, gamma_grid, accs[w]);
            } catch (...) {
                failures[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& f : failures)
        if (f) std::rethrow_exception(f);

    Accumulator total = accs[0];
    for (int w = 1; w < workers; ++w) total.merge(accs[w]);
    if (total.invalid > std::max<long long>(1, trials / 1000))
        throw NumericalInstabilityError("monte carlo: more than 0.1% of trials were rank deficient");

    SimulationSummary summary;
    summary.trials = total.count;
    summary.invalid_redraws = total.invalid;
    summary.switch_probability = static_cast<double>(total.switched) / static_cast<double>(total.count);
    for (int i = 0; i < m; ++i) {
        summary.stage1.push_back(to_cdf(total.stage1[i], gamma_grid, total.count));
        summary.stage2.push_back(to_cdf(total.stage2[i], gamma_grid, total.count));
        summary.delivered.push_back(to_cdf(total.delivered[i], gamma_grid, total.count));
    }
    summary.min_service1 = to_cdf(total.min_s1, gamma_grid, total.count);
    summary.min_service2 = to_cdf(total.min_s2, gamma_grid, total.count);
    return summary;
}

OutageReport estimate_outage(const LinkPowerProfile& profile, const ScenarioConfig& config,
                             const NoiseUncertainty& nu, long long trials, std::uint64_t seed,
                             int workers) {
    const std::vector<double> grid{config.gamma_th};
    const auto summary = simulate_curves(profile, config, nu, trials, grid, seed, workers);
    OutageReport report;
    report.switch_probability = summary.switch_probability;
    for (int i = 0; i < config.m1; ++i)
        report.per_stream_service1.push_back(summary.delivered[i].values[0]);
    for (int j = 0; j < config.m2; ++j)
        report.per_stream_service2.push_back(summary.delivered[config.m1 + j].values[0]);
    report.total_service1 = config.m1 > 0 ? summary.min_service1.values[0] : 0.0;
    report.total_service2 = config.m2 > 0 ? summary.min_service2.values[0] : 0.0;
    return report;
}

SimulationSummary empirical_cdf(const LinkPowerProfile& profile, const ScenarioConfig& config,
                                const NoiseUncertainty& nu, long long trials,
                                const std::vector<double>& gamma_grid, std::uint64_t seed,
                                int workers) {
    return simulate_curves(profile, config, nu, trials, gamma_grid, seed, workers);
}

}  // namespace cogmimo
