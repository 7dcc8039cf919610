#include <cmath>
#include <vector>

#include <doctest.h>

#include "cogmimo/errors.hpp"
#include "cogmimo/planner.hpp"

using namespace cogmimo;

namespace {

ScenarioConfig massive_config(int n, int m1, double alpha) {
    ScenarioConfig cfg;
    cfg.n_rx = n;
    cfg.m1 = m1;
    cfg.m2 = n - m1;
    cfg.alpha = alpha;
    cfg.massive_limit = true;
    cfg.distances.assign(cfg.m_total(), 0.1);
    cfg.pathloss_exponents.assign(cfg.m_total(), 4.0);
    return cfg;
}

}  // namespace

TEST_CASE("asymptotic SNR equivalents") {
    ScenarioConfig cfg;
    cfg.n_rx = 8;
    cfg.m1 = 2;
    cfg.m2 = 2;
    cfg.alpha = 0.9;
    cfg.distances = {1.0, 1.0, 1.0, 1.0};
    cfg.pathloss_exponents.assign(4, 4.0);
    LinkPowerProfile profile;
    profile.p.assign(4, 1.0);
    profile.p_hat.assign(4, 1.0);  // p_hat = p
    profile.residual.assign(4, 1.0 - 0.81);

    const double a2 = 0.81;
    const auto s1 = asymptotic_snr_stage1(0, profile, cfg);
    CHECK_FALSE(s1.unbounded);
    CHECK(s1.value == doctest::Approx((8 - 4) * a2 / (4 * (1.0 - a2))).epsilon(1e-12));

    const auto s2 = asymptotic_snr_stage2(0, profile, cfg);
    CHECK(s2.value == doctest::Approx((8 - 2) * a2 / (2 * (1.0 - a2))).epsilon(1e-12));
    CHECK(s2.value > s1.value);

    // N = M kills the surplus
    cfg.n_rx = 4;
    CHECK(asymptotic_snr_stage1(0, profile, cfg).value == 0.0);

    // doubling the surplus doubles the equivalent
    cfg.n_rx = 6;
    const double v1 = asymptotic_snr_stage1(0, profile, cfg).value;
    cfg.n_rx = 8;
    const double v2 = asymptotic_snr_stage1(0, profile, cfg).value;
    CHECK(v2 == doctest::Approx(2.0 * v1).epsilon(1e-12));

    // m2 = m: both formulas coincide
    ScenarioConfig all2 = cfg;
    all2.m1 = 0;
    all2.m2 = 4;
    CHECK(asymptotic_snr_stage2(0, profile, all2).value ==
          doctest::Approx(asymptotic_snr_stage1(0, profile, all2).value).epsilon(1e-12));

    // perfect CSI: unbounded flag instead of a crash
    profile.residual.assign(4, 0.0);
    profile.p_hat = profile.p;
    ScenarioConfig ideal = cfg;
    ideal.alpha = 1.0;
    CHECK(asymptotic_snr_stage1(0, profile, ideal).unbounded);
}

TEST_CASE("optimality condition boundary cases from the admission table") {
    // alpha = 0.6, n = 16: holds at 5, fails at 6
    CHECK(optimality_condition(5, 16, 0.6, 1.0, 1.0));
    CHECK_FALSE(optimality_condition(6, 16, 0.6, 1.0, 1.0));
    // alpha = 0.9999, n = 16: holds at the upper bound 6
    CHECK(optimality_condition(6, 16, 0.9999, 1.0, 1.0));
    // alpha = 0.8, n = 32: 13 true, 14 false
    CHECK(optimality_condition(13, 32, 0.8, 1.0, 1.0));
    CHECK_FALSE(optimality_condition(14, 32, 0.8, 1.0, 1.0));
}

TEST_CASE("optimality condition is scale invariant in p when p_hat = p") {
    for (int m2 : {3, 7, 12})
        for (double a : {0.5, 0.8, 0.95})
            for (double p : {0.01, 1.0, 250.0})
                CHECK(optimality_condition(m2, 16, a, p, p) ==
                      optimality_condition(m2, 16, a, 10.0 * p, 10.0 * p));
}

TEST_CASE("optimality condition degenerate input") {
    CHECK_THROWS_AS(optimality_condition(4, 16, 1.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(optimality_condition(0, 16, 0.8, 1.0, 1.0), DomainError);
}

TEST_CASE("planner scan reproduces known cells and the frontier property") {
    const struct {
        int n;
        double alpha;
        int expected;
    } cells[] = {{16, 0.6, 5}, {32, 0.8, 13}, {64, 0.8, 27}, {512, 0.6, 160}, {16, 0.9999, 6}};
    for (const auto& cell : cells) {
        const auto cfg = massive_config(cell.n, 10, cell.alpha);
        const auto profile = build_profile(cfg);
        const auto result = optimal_m2(cfg, profile);
        CHECK(result.m2_star == cell.expected);
        CHECK(optimality_condition(result.m2_star, cell.n, cell.alpha, 1.0, 1.0));
        // largest admissible value among the scanned range
        for (int m2 = result.m2_star + 1; m2 <= cell.n - 10; ++m2)
            CHECK_FALSE(optimality_condition(m2, cell.n, cell.alpha, 1.0, 1.0));
        CHECK(result.lambda_diag >= 0.0);
        CHECK(result.iterations == cell.n - 10 - cell.expected + 1);
    }
}

TEST_CASE("the multiplier is nonnegative wherever the condition holds") {
    for (const auto& [n, a] : std::vector<std::pair<int, double>>{{32, 0.8}, {64, 0.6}, {128, 0.95}}) {
        const double c = a * a;  // p_hat = p = 1
        const double r = 1.0 - c;
        for (int m2 = 1; m2 <= n - 10; ++m2) {
            if (!optimality_condition(m2, n, a, 1.0, 1.0)) continue;
            const double mix = c * (n - m2) + m2 * r;
            const double bracket = std::log1p((static_cast<double>(n) / m2 - 1.0) * c / r) * mix - c * n;
            const double gap = static_cast<double>(n - 10 - m2);
            const double lambda = c * gap * gap / (std::log(2.0) * 1.0 * r * mix) * bracket;
            CHECK(lambda >= 0.0);
        }
    }
}

TEST_CASE("strict mode uses the finite-M estimate powers") {
    auto cfg = massive_config(64, 10, 0.8);
    cfg.massive_limit = false;
    cfg.tx_power = 10.0;
    const auto profile = build_profile(cfg);
    CHECK(profile.p_hat[0] < profile.p[0]);
    const auto result = optimal_m2(cfg, profile);
    CHECK(result.m2_star >= 1);
    CHECK(result.m2_star <= 54);
}

TEST_CASE("planner verdict is independent of gamma_th") {
    const auto cfg_a = massive_config(64, 10, 0.8);
    auto cfg_b = cfg_a;
    cfg_b.gamma_th = 31.0;
    const auto profile = build_profile(cfg_a);
    CHECK(optimal_m2(cfg_a, profile).m2_star == optimal_m2(cfg_b, profile).m2_star);
}

TEST_CASE("planner rejects non-i.i.d. links") {
    auto cfg = massive_config(16, 10, 0.8);
    cfg.distances[0] = 0.2;
    const auto profile = build_profile(cfg);
    CHECK_THROWS_AS(optimal_m2(cfg, profile), DomainError);
}

TEST_CASE("sum-rate objective values and concavity") {
    CHECK(sum_rate_objective(64, 64, 0.8, 1.0, 1.0) == 0.0);
    // spot value: m2 log2(1 + (n/m2 - 1) a^2 / (1 - a^2))
    const double expected = 10.0 * std::log2(1.0 + (64.0 / 10.0 - 1.0) * 0.64 / 0.36);
    CHECK(sum_rate_objective(10, 64, 0.8, 1.0, 1.0) == doctest::Approx(expected).epsilon(1e-12));
    for (int m2 = 2; m2 <= 62; ++m2) {
        const double mid = sum_rate_objective(m2, 64, 0.8, 1.0, 1.0);
        const double lo = sum_rate_objective(m2 - 1, 64, 0.8, 1.0, 1.0);
        const double hi = sum_rate_objective(m2 + 1, 64, 0.8, 1.0, 1.0);
        CHECK(mid >= 0.5 * (lo + hi));
    }
}

TEST_CASE("convexity certificate signs") {
    for (const auto& [n, alpha] : std::vector<std::pair<int, double>>{{64, 0.8}, {128, 0.9999}}) {
        std::vector<int> grid;
        for (int m2 = 1; m2 <= n - 10 - 1; ++m2) grid.push_back(m2);
        const auto report = convexity_certificate(n, 10, alpha, 1.0, 1.0, 1.0, grid);
        CHECK(report.objective_all_negative);
        CHECK(report.constraint_all_positive);
        // deterministic
        const auto again = convexity_certificate(n, 10, alpha, 1.0, 1.0, 1.0, grid);
        CHECK(report.objective_second_diff == again.objective_second_diff);
    }
    std::vector<int> bad{0};
    CHECK_THROWS_AS(convexity_certificate(64, 10, 0.8, 1.0, 1.0, 1.0, bad), DomainError);
}

TEST_CASE("coherence time spot value and edge cases") {
    // m is the total stream count here, so m2 = 0
    auto coherence_config = [](int n, int m, double alpha) {
        ScenarioConfig cfg;
        cfg.n_rx = n;
        cfg.m1 = m;
        cfg.m2 = 0;
        cfg.alpha = alpha;
        cfg.massive_limit = true;
        cfg.distances.assign(m, 0.1);
        cfg.pathloss_exponents.assign(m, 4.0);
        return cfg;
    };
    {
        const auto cfg = coherence_config(128, 10, 0.9999);
        const auto profile = build_profile(cfg);
        const auto result = coherence_time(profile, cfg, 1.0);
        CHECK(result.t_max == 12746);
        CHECK_FALSE(result.infinite);
        CHECK_FALSE(result.infeasible);
        CHECK(result.snr_at_tmax >= 1.0);
    }
    {
        const auto cfg = coherence_config(10, 10, 0.95);
        const auto profile = build_profile(cfg);
        CHECK(coherence_time(profile, cfg, 1.0).t_max == 0);
    }
    {
        const auto cfg = coherence_config(64, 10, 1.0);
        const auto profile = build_profile(cfg);
        CHECK(coherence_time(profile, cfg, 1.0).infinite);
    }
}

TEST_CASE("coherence time i.i.d. fast path equals the general formula") {
    // strict-mode profile (p_hat < p) with equal links hits the i.i.d. branch;
    // compare the pre-floor value against the general route written by hand
    ScenarioConfig cfg;
    cfg.n_rx = 64;
    cfg.m1 = 10;
    cfg.m2 = 0;
    cfg.alpha = 0.97;
    cfg.tx_power = 10.0;
    cfg.distances.assign(10, 0.1);
    cfg.pathloss_exponents.assign(10, 4.0);
    const auto profile = build_profile(cfg);
    const auto iid = coherence_time(profile, cfg, 1.0);

    double sum_hat = 0.0;
    for (double v : profile.p_hat) sum_hat += v;
    const double p_hat_min = profile.p_hat[0];
    const double ratio = 1.0 * sum_hat / (1.0 * sum_hat + p_hat_min * (64 - 10));
    const double general = std::log(ratio) / (2.0 * std::log(0.97));
    CHECK(std::abs(iid.t_max_real - general) <= 1e-9);
}

TEST_CASE("coherence time monotonicity") {
    // nondecreasing in n and a, nonincreasing in m
    const std::vector<int> ns{64, 128, 256};
    const std::vector<int> ms{10, 20, 30};
    const std::vector<double> alphas{0.6, 0.9, 0.9999};
    auto t_of = [&](int m, int n, double a) {
        const auto cfg = massive_config(n, m, a);
        return coherence_time(build_profile(cfg), cfg, 1.0).t_max;
    };
    for (int m : ms)
        for (double a : alphas) {
            CHECK(t_of(m, 64, a) <= t_of(m, 128, a));
            CHECK(t_of(m, 128, a) <= t_of(m, 256, a));
        }
    for (int n : ns)
        for (double a : alphas) {
            CHECK(t_of(10, n, a) >= t_of(20, n, a));
            CHECK(t_of(20, n, a) >= t_of(30, n, a));
        }
    for (int m : ms)
        for (int n : ns) {
            CHECK(t_of(m, n, 0.6) <= t_of(m, n, 0.9));
            CHECK(t_of(m, n, 0.9) <= t_of(m, n, 0.9999));
        }
}
