#pragma once

#include <istream>
#include <string>

#include "cogmimo/channel.hpp"

namespace cogmimo {

/// Parse a `key = value` scenario file (UTF-8, # comments). Unknown keys are
/// rejected and every error names its line. Omitted keys fall back to the
/// reference defaults (omega = 4, L = 2 dB, gamma_th = gamma_t = 0 dB,
/// p_T/N0 = 10 dB); n_rx has no default and must be supplied.
///
/// Keys: n_rx, m1, m2, pt_over_n0_db, distances_km (comma list),
/// pathloss_exponents (comma list or scalar broadcast), alpha | fd_ts
/// (mutually exclusive), noise_uncertainty_db, gamma_th_db, gamma_t_db,
/// trials, seed, massive_limit (bool).
ScenarioConfig parse_scenario(const std::string& path);
ScenarioConfig parse_scenario_stream(std::istream& in);

}  // namespace cogmimo
