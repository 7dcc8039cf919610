#pragma once

#include <string>
#include <vector>

#include "cogmimo/channel.hpp"
#include "cogmimo/table.hpp"

namespace cogmimo {

/// Evenly spaced dB grid, endpoints included.
std::vector<double> make_db_grid(double min_db, double max_db, int points);

/// Closed-form curves over the outage-threshold grid: per-stream stage CDFs,
/// per-stream and total outage for both services, and the switch probability
/// (constant in gamma since gamma_t is fixed by the config).
CurveTable cmd_analyze(const ScenarioConfig& config, const std::vector<double>& gamma_grid_db);

/// Monte Carlo counterpart with the same schema plus a trial_count column.
/// Byte-identical across reruns for a fixed seed.
CurveTable cmd_simulate(const ScenarioConfig& config, const std::vector<double>& gamma_grid_db);

struct ValidationEntry {
    std::string column;
    double sup_gap = 0.0;
};

struct ValidationReport {
    std::vector<ValidationEntry> entries;
    double tolerance = 0.0;
    bool passed = false;
    double worst_gap = 0.0;
    std::string worst_column;
};

/// Runs both engines and reports the per-column sup-norm discrepancy.
ValidationReport cmd_validate(const ScenarioConfig& config, const std::vector<double>& gamma_grid_db,
                              double tolerance);

/// Admission table: one row per (n, alpha) pair with the planner verdict.
CurveTable cmd_plan(const std::vector<int>& n_list, int m1, const std::vector<double>& alpha_list,
                    double gamma_th = 1.0, bool massive = true);

/// Coherence-time table over the Cartesian grid of (m, n, alpha, gamma_th_db).
CurveTable cmd_coherence(const std::vector<int>& m_list, const std::vector<int>& n_list,
                         const std::vector<double>& alpha_list,
                         const std::vector<double>& gamma_th_db_list);

}  // namespace cogmimo
