#include "cogmimo/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "cogmimo/errors.hpp"

namespace cogmimo {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& value, int line) {
    std::size_t pos = 0;
    double out;
    try {
        out = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw ParseError("malformed number '" + value + "'", line);
    }
    if (pos != value.size()) throw ParseError("malformed number '" + value + "'", line);
    return out;
}

long long parse_integer(const std::string& value, int line) {
    std::size_t pos = 0;
    long long out;
    try {
        out = std::stoll(value, &pos);
    } catch (const std::exception&) {
        throw ParseError("malformed integer '" + value + "'", line);
    }
    if (pos != value.size()) throw ParseError("malformed integer '" + value + "'", line);
    return out;
}

std::uint64_t parse_seed(const std::string& value, int line) {
    std::size_t pos = 0;
    std::uint64_t out;
    try {
        out = std::stoull(value, &pos);
    } catch (const std::exception&) {
        throw ParseError("malformed seed '" + value + "'", line);
    }
    if (pos != value.size()) throw ParseError("malformed seed '" + value + "'", line);
    return out;
}

bool parse_bool(const std::string& value, int line) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ParseError("malformed boolean '" + value + "' (use true/false)", line);
}

std::vector<double> parse_list(const std::string& value, int line) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ParseError("empty list element", line);
        out.push_back(parse_double(item, line));
    }
    if (out.empty()) throw ParseError("empty list", line);
    return out;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace

ScenarioConfig parse_scenario_stream(std::istream& in) {
    std::map<std::string, std::pair<std::string, int>> entries;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string text = trim(raw);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", line);
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key.empty()) throw ParseError("missing key", line);
        if (value.empty()) throw ParseError("missing value for '" + key + "'", line);
        if (entries.count(key)) throw ParseError("duplicate key '" + key + "'", line);
        entries[key] = {value, line};
    }

    static const std::vector<std::string> known = {
        "n_rx",          "m1",       "m2",     "pt_over_n0_db", "distances_km",
        "pathloss_exponents", "alpha", "fd_ts", "noise_uncertainty_db", "gamma_th_db",
        "gamma_t_db",    "trials",   "seed",   "massive_limit"};
    for (const auto& [key, value] : entries) {
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ParseError("unknown key '" + key + "'", value.second);
    }

    auto take = [&](const char* key) -> std::optional<std::pair<std::string, int>> {
        const auto it = entries.find(key);
        if (it == entries.end()) return std::nullopt;
        return it->second;
    };

    ScenarioConfig cfg;
    const auto n_rx = take("n_rx");
    if (!n_rx) throw ParseError("n_rx required", line == 0 ? 1 : line);
    cfg.n_rx = static_cast<int>(parse_integer(n_rx->first, n_rx->second));
    if (const auto v = take("m1")) cfg.m1 = static_cast<int>(parse_integer(v->first, v->second));
    if (const auto v = take("m2")) cfg.m2 = static_cast<int>(parse_integer(v->first, v->second));
    if (const auto v = take("pt_over_n0_db")) cfg.tx_power = db_to_linear(parse_double(v->first, v->second));
    if (const auto v = take("noise_uncertainty_db"))
        cfg.noise_uncertainty_db = parse_double(v->first, v->second);
    if (const auto v = take("gamma_th_db")) cfg.gamma_th = db_to_linear(parse_double(v->first, v->second));
    if (const auto v = take("gamma_t_db")) cfg.gamma_t = db_to_linear(parse_double(v->first, v->second));
    if (const auto v = take("trials")) cfg.trials = parse_integer(v->first, v->second);
    if (const auto v = take("seed")) cfg.seed = parse_seed(v->first, v->second);
    if (const auto v = take("massive_limit")) cfg.massive_limit = parse_bool(v->first, v->second);

    const auto alpha = take("alpha");
    const auto fd_ts = take("fd_ts");
    if (alpha && fd_ts)
        throw ParseError("'alpha' and 'fd_ts' are mutually exclusive", std::max(alpha->second, fd_ts->second));
    if (alpha) cfg.alpha = parse_double(alpha->first, alpha->second);
    if (fd_ts) {
        const double fdts = parse_double(fd_ts->first, fd_ts->second);
        if (fdts < 0.0) throw ParseError("fd_ts must be >= 0", fd_ts->second);
        cfg.alpha = aging_coefficient(fdts);
        if (!(cfg.alpha > 0.0))
            throw ParseError("fd_ts implies a non-positive aging coefficient", fd_ts->second);
    }

    const int m = cfg.m_total();
    if (const auto v = take("distances_km")) {
        cfg.distances = parse_list(v->first, v->second);
        if (static_cast<int>(cfg.distances.size()) != m)
            throw ParseError("distances_km needs exactly m1 + m2 entries", v->second);
    } else {
        cfg.distances.assign(m, 0.1);
    }
    if (const auto v = take("pathloss_exponents")) {
        auto list = parse_list(v->first, v->second);
        if (list.size() == 1) list.assign(m, list[0]);
        if (static_cast<int>(list.size()) != m)
            throw ParseError("pathloss_exponents needs one entry or m1 + m2 entries", v->second);
        cfg.pathloss_exponents = std::move(list);
    } else {
        cfg.pathloss_exponents.assign(m, 4.0);
    }

    try {
        cfg.validate();
    } catch (const DomainError& err) {
        throw ParseError(err.what(), line == 0 ? 1 : line);
    }
    return cfg;
}

ScenarioConfig parse_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("parse_scenario: cannot open '" + path + "'");
    return parse_scenario_stream(in);
}

}  // namespace cogmimo
