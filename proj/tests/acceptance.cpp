// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit status is the failure count.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cogmimo/commands.hpp"
#include "cogmimo/monte_carlo.hpp"
#include "cogmimo/outage.hpp"
#include "cogmimo/planner.hpp"
#include "cogmimo/scenario.hpp"
#include "cogmimo/snr_cdf.hpp"
#include "oracles.hpp"

using namespace cogmimo;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ScenarioConfig reference_config() {
    ScenarioConfig cfg;
    cfg.n_rx = 4;
    cfg.m1 = 2;
    cfg.m2 = 1;
    cfg.tx_power = 10.0;
    cfg.distances = {0.05, 0.08, 0.1};
    cfg.pathloss_exponents = {4.0, 4.0, 4.0};
    cfg.alpha = 0.9;
    cfg.trials = 100000;
    cfg.seed = 20240715;
    return cfg;
}

ScenarioConfig iid_pair_config() {
    auto cfg = reference_config();
    cfg.m2 = 2;
    cfg.distances = {0.05, 0.08, 0.1, 0.1};
    cfg.pathloss_exponents.assign(4, 4.0);
    return cfg;
}

// smallest gamma with F(gamma) >= q, by doubling then bisection
template <typename F>
double quantile(F cdf, double q, double hint = 1.0) {
    double hi = hint;
    for (int i = 0; i < 200 && cdf(hi) < q; ++i) hi *= 2.0;
    double lo = hi;
    for (int i = 0; i < 200 && cdf(lo) > q && lo > 0.0; ++i) lo /= 2.0;
    for (int i = 0; i < 120; ++i) {
        const double mid = 0.5 * (lo + hi);
        (cdf(mid) < q ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> log_span(double lo, double hi, int points) {
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i)
        grid[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1));
    return grid;
}

void criterion1_admission_table() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<int> n_list{16, 32, 64, 128, 256, 512};
    const std::vector<double> alpha_list{0.9999, 0.8, 0.6};
    const int expected[3][6] = {{6, 22, 54, 116, 232, 464},
                                {6, 13, 27, 54, 108, 217},
                                {5, 10, 20, 40, 80, 160}};
    const auto table = cmd_plan(n_list, 10, alpha_list, 1.0, true);
    const double elapsed = seconds_since(t0);
    const int c_n = table.column_index("n");
    const int c_a = table.column_index("alpha");
    const int c_m = table.column_index("m2_star");
    int mismatches = 0;
    std::string detail;
    for (const auto& row : table.rows) {
        int ni = 0, ai = 0;
        for (int i = 0; i < 6; ++i)
            if (n_list[i] == static_cast<int>(row[c_n])) ni = i;
        for (int i = 0; i < 3; ++i)
            if (std::abs(alpha_list[i] - row[c_a]) < 1e-12) ai = i;
        if (static_cast<int>(row[c_m]) != expected[ai][ni]) {
            ++mismatches;
            detail += " [n=" + std::to_string(n_list[ni]) + " a=" + std::to_string(row[c_a]) +
                      ": got " + std::to_string(static_cast<int>(row[c_m])) + " want " +
                      std::to_string(expected[ai][ni]) + "]";
        }
    }
    const bool pass = mismatches == 0 && elapsed < 1.0;
    report(1, pass, "admission table reproduction, zero tolerance",
           std::to_string(18 - mismatches) + "/18 cells, " + std::to_string(elapsed) + " s" + detail);
    if (mismatches > 0) {
        // The pinned alpha = 0.9999 row is inconsistent with the admission
        // condition it is defined by; the full row is reproduced exactly by
        // a = 0.999999. Evidence:
        const auto alt = cmd_plan(n_list, 10, {0.999999}, 1.0, true);
        std::string alt_cells;
        for (const auto& row : alt.rows)
            alt_cells += " " + std::to_string(static_cast<int>(row[c_m]));
        std::printf("       note: condition-based scan at a=0.999999 yields%s "
                    "(matches the pinned row {6 22 54 116 232 464})\n",
                    alt_cells.c_str());
    }
}

void criterion2_stage1_cross_validation() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto cfg = reference_config();
    const auto profile = build_profile(cfg);
    const NoiseUncertainty nu{2.0, cfg.noise_power};
    double sup = 0.0;
    for (int stream = 0; stream < 3; ++stream) {
        auto cdf = [&](double g) { return cdf_stage1(g, stream, profile, cfg, 3); };
        const double lo = quantile(cdf, 0.001);
        const double hi = quantile(cdf, 0.999);
        const auto grid = log_span(lo, hi, 200);
        const auto summary = empirical_cdf(profile, cfg, nu, cfg.trials, grid, cfg.seed + stream);
        for (std::size_t g = 0; g < grid.size(); ++g)
            sup = std::max(sup, std::abs(cdf(grid[g]) - summary.stage1[stream].values[g]));
    }
    const double elapsed = seconds_since(t0);
    report(2, sup <= 0.015 && elapsed < 30.0, "first-stage CDF vs forced-stage Monte Carlo",
           "sup gap " + std::to_string(sup) + ", " + std::to_string(elapsed) + " s");
}

void criterion3_stage2_cross_validation() {
    const auto t0 = std::chrono::steady_clock::now();
    double sup = 0.0;

    {
        const auto cfg = reference_config();
        const auto profile = build_profile(cfg);
        const NoiseUncertainty nu{2.0, cfg.noise_power};
        const auto sub = sub_profile(profile, 2, 1);
        auto cdf = [&](double g) { return cdf_stage2(g, 0, sub, cfg, 1, nu); };
        const auto grid = log_span(quantile(cdf, 0.001), quantile(cdf, 0.999), 200);
        const auto summary = empirical_cdf(profile, cfg, nu, cfg.trials, grid, cfg.seed + 11);
        for (std::size_t g = 0; g < grid.size(); ++g)
            sup = std::max(sup, std::abs(cdf(grid[g]) - summary.stage2[2].values[g]));
    }
    {
        const auto cfg = iid_pair_config();
        const auto profile = build_profile(cfg);
        const NoiseUncertainty nu{2.0, cfg.noise_power};
        const auto sub = sub_profile(profile, 2, 2);
        for (int j = 0; j < 2; ++j) {
            auto cdf = [&](double g) { return cdf_stage2(g, j, sub, cfg, 2, nu); };
            const auto grid = log_span(quantile(cdf, 0.001), quantile(cdf, 0.999), 200);
            const auto summary = empirical_cdf(profile, cfg, nu, cfg.trials, grid, cfg.seed + 13 + j);
            for (std::size_t g = 0; g < grid.size(); ++g)
                sup = std::max(sup, std::abs(cdf(grid[g]) - summary.stage2[2 + j].values[g]));
        }
    }
    const double elapsed = seconds_since(t0);
    report(3, sup <= 0.015 && elapsed < 30.0,
           "second-stage CDF vs Monte Carlo (t2 = 1 and i.i.d. t2 = 2)",
           "sup gap " + std::to_string(sup) + ", " + std::to_string(elapsed) + " s");
}

void criterion4_outage_vs_switching_simulation() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto cfg = reference_config();  // gamma_th = gamma_t = 1
    const auto profile = build_profile(cfg);
    const NoiseUncertainty nu{2.0, cfg.noise_power};
    const auto closed = full_report(profile, cfg, nu);
    const auto empirical = estimate_outage(profile, cfg, nu, cfg.trials, cfg.seed + 29);
    double worst = 0.0;
    std::string gaps = "per-stream gaps";
    for (int i = 0; i < cfg.m1; ++i) {
        const double gap = std::abs(closed.per_stream_service1[i] - empirical.per_stream_service1[i]);
        worst = std::max(worst, gap);
        gaps += " s1_" + std::to_string(i + 1) + "=" + std::to_string(gap);
    }
    for (int i = 0; i < cfg.m2; ++i) {
        const double gap = std::abs(closed.per_stream_service2[i] - empirical.per_stream_service2[i]);
        worst = std::max(worst, gap);
        gaps += " s2_" + std::to_string(i + 1) + "=" + std::to_string(gap);
    }
    const double elapsed = seconds_since(t0);
    report(4, worst <= 0.02 && elapsed < 60.0, "closed-form outage vs switching simulation",
           gaps + ", switch gap " +
               std::to_string(std::abs(closed.switch_probability - empirical.switch_probability)) +
               ", " + std::to_string(elapsed) + " s");
    if (worst > 0.02) {
        // The closed forms treat each stream's SNR as independent of the
        // Service-1 minimum. At gamma_th = gamma_t the first-branch event
        // "SNR_i <= gamma_th and min > gamma_t" is impossible for a Service-1
        // stream (its own SNR is part of the minimum), yet the product form
        // assigns it F1_i (1 - Fmin) > 0. That structural mass is the floor of
        // the gap; the simulator follows the single-statistic switching rule.
        const double f_min = cdf_min_stage1(cfg.gamma_t, profile, cfg);
        std::string floors = "note: structural first-branch mass F1_i*(1-Fmin):";
        for (int i = 0; i < cfg.m1; ++i) {
            const double f1 = cdf_stage1(cfg.gamma_th, i, profile, cfg, cfg.m_total());
            floors += " s1_" + std::to_string(i + 1) + "=" + std::to_string(f1 * (1.0 - f_min));
        }
        std::printf("       %s\n", floors.c_str());
    }
}

void criterion5_high_snr_approximation() {
    auto cfg = reference_config();
    cfg.tx_power = 1e4;  // 40 dB
    const auto profile = build_profile(cfg);
    const NoiseUncertainty nu{2.0, cfg.noise_power};
    double worst = 0.0;
    for (int stream = 0; stream < 3; ++stream) {
        auto exact = [&](double g) { return cdf_stage1(g, stream, profile, cfg, 3); };
        const auto grid = log_span(quantile(exact, 0.01), quantile(exact, 0.99), 200);
        for (double g : grid)
            worst = std::max(worst, std::abs(cdf_stage1_high_snr(g, stream, profile, cfg, 3) - exact(g)));
    }
    {
        const auto sub = sub_profile(profile, 2, 1);
        auto exact = [&](double g) { return cdf_stage2(g, 0, sub, cfg, 1, nu); };
        const auto grid = log_span(quantile(exact, 0.01), quantile(exact, 0.99), 200);
        for (double g : grid)
            worst = std::max(worst, std::abs(cdf_stage2_high_snr(g, 0, sub, cfg, 1, nu) - exact(g)));
    }
    {
        auto pair_cfg = iid_pair_config();
        pair_cfg.tx_power = 1e4;
        const auto pair_profile = build_profile(pair_cfg);
        const auto sub = sub_profile(pair_profile, 2, 2);
        auto exact = [&](double g) { return cdf_stage2(g, 0, sub, pair_cfg, 2, nu); };
        const auto grid = log_span(quantile(exact, 0.01), quantile(exact, 0.99), 200);
        for (double g : grid)
            worst = std::max(worst, std::abs(cdf_stage2_high_snr(g, 0, sub, pair_cfg, 2, nu) - exact(g)));
    }
    report(5, worst <= 0.01, "high-SNR forms within 0.01 across the 1st-99th percentile range",
           "worst gap " + std::to_string(worst));
}

// Remark-1 i.i.d. substitution written out directly (long double).
double iid_stage1_reference(double gamma, double est_var, double lam, int m, int k_max,
                            double noise) {
    if (gamma == 0.0) return 0.0;
    long double sum = 0.0L;
    const long double d = gamma / est_var + 1.0L / lam;
    for (int k = 0; k <= k_max; ++k) {
        for (int l = 0; l <= k; ++l) {
            long double term = 1.0L;
            for (int i = 1; i <= k; ++i) term *= static_cast<long double>(gamma) / est_var / i;
            for (int i = 0; i < l; ++i) term *= static_cast<long double>(k - i) / (i + 1);
            for (int i = m; i < m + l; ++i) term *= i;
            term *= std::pow(static_cast<long double>(noise), static_cast<long double>(k - l));
            term *= std::exp(-static_cast<long double>(noise) * gamma / est_var);
            term /= std::pow(static_cast<long double>(lam), static_cast<long double>(m));
            term /= std::pow(d, static_cast<long double>(m + l));
            sum += term;
        }
    }
    return static_cast<double>(1.0L - sum);
}

void criterion6_cdf_axioms() {
    std::mt19937_64 gen(987654321);
    auto uniform = [&](double lo, double hi) {
        return lo + (hi - lo) * std::generate_canonical<double, 53>(gen);
    };
    int checked = 0;
    bool pass = true;
    std::string detail;
    for (int rep = 0; rep < 21 && pass; ++rep) {
        ScenarioConfig cfg;
        cfg.m1 = 1 + static_cast<int>(gen() % 3);
        cfg.m2 = 1 + static_cast<int>(gen() % 2);
        cfg.n_rx = cfg.m_total() + static_cast<int>(gen() % 4);
        cfg.tx_power = std::pow(10.0, uniform(0.0, 2.0));
        cfg.alpha = uniform(0.55, 0.999);
        cfg.noise_uncertainty_db = (rep % 3 == 0) ? 0.0 : uniform(0.5, 3.0);
        const int regime = rep % 3;  // 0 i.i.d., 1 all distinct, 2 repeated groups
        for (int i = 0; i < cfg.m_total(); ++i) {
            double d = 0.1;
            if (regime == 1) d = 0.05 + 0.03 * i;
            if (regime == 2) d = (i % 2 == 0) ? 0.06 : 0.11;
            cfg.distances.push_back(d);
            cfg.pathloss_exponents.push_back(4.0);
        }
        const auto profile = build_profile(cfg);
        const NoiseUncertainty nu{cfg.noise_uncertainty_db, cfg.noise_power};
        const auto service2 = sub_profile(profile, cfg.m1, cfg.m2);

        std::vector<std::function<double(double)>> cdfs;
        for (int i = 0; i < cfg.m_total(); ++i)
            cdfs.push_back([&, i](double g) { return cdf_stage1(g, i, profile, cfg, cfg.m_total()); });
        for (int i = 0; i < cfg.m2; ++i)
            cdfs.push_back([&, i](double g) { return cdf_stage2(g, i, service2, cfg, cfg.m2, nu); });
        cdfs.push_back([&](double g) { return cdf_min_stage1(g, profile, cfg); });

        for (auto& cdf : cdfs) {
            ++checked;
            if (std::abs(cdf(0.0)) > 1e-9) {
                pass = false;
                detail = "F(0) != 0 at rep " + std::to_string(rep);
                break;
            }
            double hi = 1.0;
            int doublings = 0;
            while (cdf(hi) < 1.0 - 1e-4 && doublings++ < 100) hi *= 2.0;
            if (cdf(hi) < 1.0 - 1e-4) {
                pass = false;
                detail = "upper limit not reached at rep " + std::to_string(rep);
                break;
            }
            double prev = 0.0;
            for (double g : log_span(hi * 1e-8, hi, 200)) {
                const double f = cdf(g);
                if (f < prev - 1e-12) {
                    pass = false;
                    detail = "monotonicity breach at rep " + std::to_string(rep);
                    break;
                }
                prev = f;
            }
            if (!pass) break;
        }
    }

    // equal-parameter general path against the explicit i.i.d. substitution
    double collapse_gap = 0.0;
    {
        ScenarioConfig cfg;
        cfg.n_rx = 6;
        cfg.m1 = 2;
        cfg.m2 = 1;
        cfg.alpha = 0.88;
        cfg.distances = {0.1, 0.1, 0.1};
        cfg.pathloss_exponents = {4.0, 4.0, 4.0};
        cfg.tx_power = 10.0;
        const auto profile = build_profile(cfg);
        const double est_var = cfg.alpha * cfg.alpha * profile.p_hat[0];
        const double lam = profile.residual[0];
        for (double g : log_span(1e-3 * est_var / lam, 1e3 * est_var / lam, 64)) {
            const double general = cdf_stage1(g, 0, profile, cfg, 3);
            const double iid = iid_stage1_reference(g, est_var, lam, 3, cfg.n_rx - 3, cfg.noise_power);
            collapse_gap = std::max(collapse_gap, std::abs(general - iid));
        }
        if (collapse_gap > 1e-10) {
            pass = false;
            detail = "i.i.d. collapse gap " + std::to_string(collapse_gap);
        }
    }
    report(6, pass, "CDF axioms over randomized configs + i.i.d. collapse",
           pass ? std::to_string(checked) + " CDFs checked, collapse gap " +
                      std::to_string(collapse_gap)
                : detail);
}

void criterion7_characteristic_coefficients() {
    const std::vector<std::vector<double>> spectra{{3.0, 2.0, 1.0}, {2.0, 2.0, 1.0}, {5.0, 1.0, 1.0, 1.0}};
    double worst_density = 0.0;
    double worst_norm = 0.0;
    for (const auto& means : spectra) {
        const auto s = residual_spectrum(means);
        double total = 0.0;
        for (const auto& row : s.char_coeff)
            for (double x : row) total += x;
        worst_norm = std::max(worst_norm, std::abs(total - 1.0));
        const double h = 0.01;
        const int n = 2401;
        const auto reference = oracle::sum_exp_density_grid(means, h, n);
        for (int k = 1; k <= 50; ++k) {
            const int idx = 40 * k;
            worst_density =
                std::max(worst_density, std::abs(spectrum_density(s, idx * h) - reference[idx]));
        }
    }
    report(7, worst_density <= 1e-8 && worst_norm <= 1e-10,
           "characteristic coefficients vs convolution oracle",
           "density gap " + std::to_string(worst_density) + ", normalization gap " +
               std::to_string(worst_norm));
}

void criterion8_convexity_certificates() {
    bool pass = true;
    std::string detail;
    for (const auto& [n, alpha] : std::vector<std::pair<int, double>>{{64, 0.8}, {128, 0.9999}}) {
        std::vector<int> grid;
        for (int m2 = 1; m2 <= n - 10 - 1; ++m2) grid.push_back(m2);
        const auto cert = convexity_certificate(n, 10, alpha, 1.0, 1.0, 1.0, grid);
        if (!cert.objective_all_negative || !cert.constraint_all_positive) {
            pass = false;
            detail += " breach at n=" + std::to_string(n);
        }
    }
    report(8, pass, "objective concavity / constraint convexity certificates",
           pass ? "all second differences carry the expected sign" : detail);
}

void criterion9_coherence_time() {
    bool pass = true;
    std::string detail;
    {
        ScenarioConfig cfg;
        cfg.n_rx = 128;
        cfg.m1 = 10;
        cfg.m2 = 0;
        cfg.alpha = 0.9999;
        cfg.massive_limit = true;
        cfg.distances.assign(10, 0.1);
        cfg.pathloss_exponents.assign(10, 4.0);
        const auto r = coherence_time(build_profile(cfg), cfg, 1.0);
        if (r.t_max != 12746) {
            pass = false;
            detail += " spot value got " + std::to_string(r.t_max);
        }
        cfg.n_rx = 10;
        if (coherence_time(build_profile(cfg), cfg, 1.0).t_max != 0) {
            pass = false;
            detail += " n = m case nonzero";
        }
    }
    int violations = 0;
    const std::vector<int> ns{64, 128, 256};
    const std::vector<int> ms{10, 20, 30};
    const std::vector<double> alphas{0.6, 0.9, 0.9999};
    auto t_of = [](int m, int n, double a) {
        ScenarioConfig cfg;
        cfg.n_rx = n;
        cfg.m1 = m;
        cfg.m2 = 0;
        cfg.alpha = a;
        cfg.massive_limit = true;
        cfg.distances.assign(m, 0.1);
        cfg.pathloss_exponents.assign(m, 4.0);
        return coherence_time(build_profile(cfg), cfg, 1.0).t_max;
    };
    for (std::size_t i = 0; i < ns.size(); ++i)
        for (std::size_t j = 0; j < ms.size(); ++j)
            for (std::size_t k = 0; k < alphas.size(); ++k) {
                if (i + 1 < ns.size() && t_of(ms[j], ns[i], alphas[k]) > t_of(ms[j], ns[i + 1], alphas[k]))
                    ++violations;
                if (j + 1 < ms.size() && t_of(ms[j], ns[i], alphas[k]) < t_of(ms[j + 1], ns[i], alphas[k]))
                    ++violations;
                if (k + 1 < alphas.size() &&
                    t_of(ms[j], ns[i], alphas[k]) > t_of(ms[j], ns[i], alphas[k + 1]))
                    ++violations;
            }
    if (violations > 0) {
        pass = false;
        detail += " monotonicity violations " + std::to_string(violations);
    }
    report(9, pass, "coherence time spot value, edge case and monotonicity",
           pass ? "12746 reproduced, 0 monotonicity violations" : detail);
}

void criterion10_outage_crossing() {
    // ideal CSI, two co-located pairs at 0.95 km and 0.75 km, input-SNR sweep
    double prev_diff = 0.0;
    bool crossed = false;
    bool first = true;
    for (int db = 0; db <= 30; ++db) {
        const std::string text = "n_rx = 4\nm1 = 2\nm2 = 2\n"
                                 "distances_km = 0.95, 0.95, 0.75, 0.75\n"
                                 "alpha = 1\nmassive_limit = true\n"
                                 "pt_over_n0_db = " + std::to_string(db) + "\n";
        std::istringstream in(text);
        const auto cfg = parse_scenario_stream(in);
        const auto profile = build_profile(cfg);
        const NoiseUncertainty nu{cfg.noise_uncertainty_db, cfg.noise_power};
        const auto rep = full_report(profile, cfg, nu);
        const double diff = rep.total_service1 - rep.total_service2;
        if (!first && diff * prev_diff < 0.0) crossed = true;
        if (diff != 0.0) {
            prev_diff = diff;
            first = false;
        }
    }
    report(10, crossed, "service outage curves cross over the input-SNR sweep",
           crossed ? "sign change found in [0, 30] dB" : "no sign change");
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    criterion1_admission_table();
    criterion2_stage1_cross_validation();
    criterion3_stage2_cross_validation();
    criterion4_outage_vs_switching_simulation();
    criterion5_high_snr_approximation();
    criterion6_cdf_axioms();
    criterion7_characteristic_coefficients();
    criterion8_convexity_certificates();
    criterion9_coherence_time();
    criterion10_outage_crossing();
    std::printf("acceptance suite finished in %.1f s, %d failure(s)\n", seconds_since(t0), failures);
    return failures;
}
