#include "cogmimo/commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cogmimo/errors.hpp"
#include "cogmimo/monte_carlo.hpp"
#include "cogmimo/outage.hpp"
#include "cogmimo/planner.hpp"
#include "cogmimo/snr_cdf.hpp"

namespace cogmimo {

namespace {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

std::vector<std::string> curve_columns(const ScenarioConfig& config, bool simulated) {
    std::vector<std::string> cols{"gamma_db"};
    for (int i = 1; i <= config.m1; ++i) {
        cols.push_back("cdf1_s1_" + std::to_string(i));
        cols.push_back("cdf2_s1_" + std::to_string(i));
        cols.push_back("outage_s1_" + std::to_string(i));
    }
    for (int i = 1; i <= config.m2; ++i) {
        cols.push_back("cdf1_s2_" + std::to_string(i));
        cols.push_back("cdf2_s2_" + std::to_string(i));
        cols.push_back("outage_s2_" + std::to_string(i));
    }
    cols.push_back("outage_total_s1");
    cols.push_back("outage_total_s2");
    cols.push_back("switch_prob");
    if (simulated) cols.push_back("trial_count");
    return cols;
}

}  // namespace

std::vector<double> make_db_grid(double min_db, double max_db, int points) {
    if (points < 1) throw DomainError("make_db_grid: need at least one point");
    if (points == 1) return {min_db};
    if (!(max_db > min_db)) throw DomainError("make_db_grid: need max_db > min_db");
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i)
        grid[i] = min_db + (max_db - min_db) * static_cast<double>(i) / (points - 1);
    return grid;
}

CurveTable cmd_analyze(const ScenarioConfig& config, const std::vector<double>& gamma_grid_db) {
    config.validate();
    const auto profile = build_profile(config);
    const NoiseUncertainty nu{config.noise_uncertainty_db, config.noise_power};
    const int m = config.m_total();
    const auto service1 = sub_profile(profile, 0, config.m1);
    const auto service2 = sub_profile(profile, config.m1, config.m2);
    const double switch_prob = cdf_min_stage1(config.gamma_t, profile, config);

    CurveTable table;
    table.columns = curve_columns(config, false);
    for (double gdb : gamma_grid_db) {
        const double gamma = db_to_linear(gdb);
        std::vector<double> row{gdb};
        std::vector<double> outage1(config.m1), outage2(config.m2);
        for (int i = 0; i < config.m1; ++i) {
            row.push_back(cdf_stage1(gamma, i, profile, config, m));
            row.push_back(cdf_stage2(gamma, i, service1, config, config.m1, nu));
            outage1[i] = outage_service1(gamma, config.gamma_t, i, profile, config, nu);
            row.push_back(outage1[i]);
        }
        for (int i = 0; i < config.m2; ++i) {
            row.push_back(cdf_stage1(gamma, config.m1 + i, profile, config, m));
            row.push_back(cdf_stage2(gamma, i, service2, config, config.m2, nu));
            outage2[i] = outage_service2(gamma, config.gamma_t, i, profile, config, nu);
            row.push_back(outage2[i]);
        }
        double survive1 = 1.0, survive2 = 1.0;
        for (double p : outage1) survive1 *= 1.0 - p;
        for (double p : outage2) survive2 *= 1.0 - p;
        row.push_back(config.m1 > 0 ? 1.0 - survive1 : 0.0);
        row.push_back(config.m2 > 0 ? 1.0 - survive2 : 0.0);
        row.push_back(switch_prob);
        table.append_row(std::move(row));
    }
    return table;
}

CurveTable cmd_simulate(const ScenarioConfig& config, const std::vector<double>& gamma_grid_db) {
    config.validate();
    const auto profile = build_profile(config);
    const NoiseUncertainty nu{config.noise_uncertainty_db, config.noise_power};
    std::vector<double> gamma_grid;
    gamma_grid.reserve(gamma_grid_db.size());
    for (double gdb : gamma_grid_db) gamma_grid.push_back(db_to_linear(gdb));
    if (!std::is_sorted(gamma_grid.begin(), gamma_grid.end()))
        throw DomainError("cmd_simulate: gamma grid must be ascending");

    const auto summary =
        simulate_curves(profile, config, nu, config.trials, gamma_grid, config.seed);

    CurveTable table;
    table.columns = curve_columns(config, true);
    for (std::size_t g = 0; g < gamma_grid.size(); ++g) {
        std::vector<double> row{gamma_grid_db[g]};
        for (int i = 0; i < config.m1; ++i) {
            row.push_back(summary.stage1[i].values[g]);
            row.push_back(summary.stage2[i].values[g]);
            row.push_back(summary.delivered[i].values[g]);
        }
        for (int i = 0; i < config.m2; ++i) {
            row.push_back(summary.stage1[config.m1 + i].values[g]);
            row.push_back(summary.stage2[config.m1 + i].values[g]);
            row.push_back(summary.delivered[config.m1 + i].values[g]);
        }
        row.push_back(config.m1 > 0 ? summary.min_service1.values[g] : 0.0);
        row.push_back(config.m2 > 0 ? summary.min_service2.values[g] : 0.0);
        row.push_back(summary.switch_probability);
        row.push_back(static_cast<double>(summary.trials));
        table.append_row(std::move(row));
    }
    return table;
}

ValidationReport cmd_validate(const ScenarioConfig& config, const std::vector<double>& gamma_grid_db,
                              double tolerance) {
    if (!(tolerance > 0.0)) throw DomainError("cmd_validate: tolerance must be positive");
    const auto analytic = cmd_analyze(config, gamma_grid_db);
    const auto simulated = cmd_simulate(config, gamma_grid_db);

    ValidationReport report;
    report.tolerance = tolerance;
    report.passed = true;
    for (std::size_t c = 0; c < analytic.columns.size(); ++c) {
        const std::string& name = analytic.columns[c];
        if (name == "gamma_db") continue;
        const int sc = simulated.column_index(name);
        if (sc < 0) continue;
        double sup = 0.0;
        for (std::size_t r = 0; r < analytic.rows.size(); ++r)
            sup = std::max(sup, std::abs(analytic.rows[r][c] - simulated.rows[r][sc]));
        report.entries.push_back({name, sup});
        if (sup > report.worst_gap) {
            report.worst_gap = sup;
            report.worst_column = name;
        }
        if (sup > tolerance) report.passed = false;
    }
    return report;
}

CurveTable cmd_plan(const std::vector<int>& n_list, int m1, const std::vector<double>& alpha_list,
                    double gamma_th, bool massive) {
    if (m1 < 1) throw DomainError("cmd_plan: m1 must be >= 1");
    CurveTable table;
    table.columns = {"n", "alpha", "m2_star", "lambda", "objective", "constraint", "iterations"};
    for (int n : n_list) {
        for (double alpha : alpha_list) {
            if (n <= m1) {
                table.append_row({static_cast<double>(n), alpha, 0.0,
                                  std::numeric_limits<double>::quiet_NaN(), 0.0, 0.0, 0.0});
                continue;
            }
            ScenarioConfig cfg;
            cfg.n_rx = n;
            cfg.m1 = m1;
            cfg.m2 = n - m1;
            cfg.alpha = alpha;
            cfg.gamma_th = gamma_th;
            cfg.massive_limit = massive;
            cfg.distances.assign(cfg.m_total(), 0.1);
            cfg.pathloss_exponents.assign(cfg.m_total(), 4.0);
            const auto profile = build_profile(cfg);
            const auto result = optimal_m2(cfg, profile);
            table.append_row({static_cast<double>(n), alpha, static_cast<double>(result.m2_star),
                              result.lambda_diag, result.objective, result.constraint_value,
                              static_cast<double>(result.iterations)});
        }
    }
    return table;
}

CurveTable cmd_coherence(const std::vector<int>& m_list, const std::vector<int>& n_list,
                         const std::vector<double>& alpha_list,
                         const std::vector<double>& gamma_th_db_list) {
    CurveTable table;
    table.columns = {"m", "n", "alpha", "gamma_th_db", "t_max", "infinite", "infeasible"};
    for (int m : m_list) {
        for (int n : n_list) {
            if (n < m) throw DomainError("cmd_coherence: every n must be >= every m");
            for (double alpha : alpha_list) {
                for (double gdb : gamma_th_db_list) {
                    ScenarioConfig cfg;
                    cfg.n_rx = n;
                    cfg.m1 = m;
                    cfg.m2 = 0;
                    cfg.alpha = alpha;
                    cfg.massive_limit = true;
                    cfg.distances.assign(m, 0.1);
                    cfg.pathloss_exponents.assign(m, 4.0);
                    const auto profile = build_profile(cfg);
                    const auto result = coherence_time(profile, cfg, db_to_linear(gdb));
                    table.append_row({static_cast<double>(m), static_cast<double>(n), alpha, gdb,
                                      static_cast<double>(result.t_max),
                                      result.infinite ? 1.0 : 0.0, result.infeasible ? 1.0 : 0.0});
                }
            }
        }
    }
    return table;
}

}  // namespace cogmimo
