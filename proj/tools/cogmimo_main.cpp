#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cogmimo/commands.hpp"
#include "cogmimo/errors.hpp"
#include "cogmimo/scenario.hpp"
#include "cogmimo/table.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationBreach = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNumericalError = 3;

struct OutputOptions {
    std::string path;
    std::string format = "csv";
};

void emit(const cogmimo::CurveTable& table, const OutputOptions& opts) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!opts.path.empty()) {
        file.open(opts.path);
        if (!file) throw cogmimo::DomainError("cannot open output file '" + opts.path + "'");
        out = &file;
    }
    if (opts.format == "csv") {
        cogmimo::write_csv(table, *out);
    } else if (opts.format == "json") {
        cogmimo::write_json(table, *out);
    } else {
        throw cogmimo::DomainError("unknown format '" + opts.format + "' (use csv or json)");
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        const auto end = text.find(',', begin);
        const std::string item = text.substr(begin, end == std::string::npos ? end : end - begin);
        if (item.empty()) throw cogmimo::DomainError("empty list element in '" + text + "'");
        out.push_back(std::stoi(item));
        if (end == std::string::npos) break;
        begin = end + 1;
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        const auto end = text.find(',', begin);
        const std::string item = text.substr(begin, end == std::string::npos ? end : end - begin);
        if (item.empty()) throw cogmimo::DomainError("empty list element in '" + text + "'");
        out.push_back(std::stod(item));
        if (end == std::string::npos) break;
        begin = end + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Priority-based two-stage zero-forcing multiuser MIMO toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    double gamma_min_db = -20.0;
    double gamma_max_db = 30.0;
    int points = 201;
    double tolerance = 0.02;
    OutputOptions output;

    std::string n_list_text = "16,32,64,128,256,512";
    std::string alpha_list_text = "0.9999,0.8,0.6";
    std::string m_list_text = "10";
    std::string gamma_db_list_text = "0";
    int m1 = 10;
    double gamma_th_db = 0.0;
    bool strict_mode = false;

    auto add_grid_flags = [&](CLI::App* cmd) {
        cmd->add_option("--gamma-min-db", gamma_min_db, "Lower end of the outage-threshold sweep");
        cmd->add_option("--gamma-max-db", gamma_max_db, "Upper end of the outage-threshold sweep");
        cmd->add_option("--points", points, "Grid size");
    };
    auto add_output_flags = [&](CLI::App* cmd) {
        cmd->add_option("--out", output.path, "Write the table here instead of stdout");
        cmd->add_option("--format", output.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    };

    auto* analyze = app.add_subcommand("analyze", "Closed-form CDF and outage curves");
    analyze->add_option("--config", config_path, "Scenario file")->required();
    add_grid_flags(analyze);
    add_output_flags(analyze);

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo curves with the same schema");
    simulate->add_option("--config", config_path, "Scenario file")->required();
    add_grid_flags(simulate);
    add_output_flags(simulate);

    auto* validate = app.add_subcommand("validate", "Cross-check analysis against simulation");
    validate->add_option("--config", config_path, "Scenario file")->required();
    add_grid_flags(validate);
    add_output_flags(validate);
    validate->add_option("--tolerance", tolerance, "Largest acceptable sup-norm gap");

    auto* plan = app.add_subcommand("plan", "Secondary-stream admission table");
    plan->add_option("--n-list", n_list_text, "Comma list of receive antenna counts");
    plan->add_option("--alpha-list", alpha_list_text, "Comma list of aging coefficients");
    plan->add_option("--m1", m1, "Primary stream count");
    plan->add_option("--gamma-th-db", gamma_th_db, "Outage threshold for the multiplier diagnostic");
    plan->add_flag("--strict", strict_mode, "Use finite-M estimate powers instead of the massive limit");
    add_output_flags(plan);

    auto* coherence = app.add_subcommand("coherence", "Coherence-time table");
    coherence->add_option("--m-list", m_list_text, "Comma list of stream counts");
    coherence->add_option("--n-list", n_list_text, "Comma list of receive antenna counts");
    coherence->add_option("--alpha-list", alpha_list_text, "Comma list of aging coefficients");
    coherence->add_option("--gamma-th-db", gamma_db_list_text, "Comma list of outage thresholds in dB");
    add_output_flags(coherence);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (analyze->parsed()) {
            const auto config = cogmimo::parse_scenario(config_path);
            emit(cogmimo::cmd_analyze(config, cogmimo::make_db_grid(gamma_min_db, gamma_max_db, points)),
                 output);
        } else if (simulate->parsed()) {
            const auto config = cogmimo::parse_scenario(config_path);
            emit(cogmimo::cmd_simulate(config, cogmimo::make_db_grid(gamma_min_db, gamma_max_db, points)),
                 output);
        } else if (validate->parsed()) {
            const auto config = cogmimo::parse_scenario(config_path);
            const auto report = cogmimo::cmd_validate(
                config, cogmimo::make_db_grid(gamma_min_db, gamma_max_db, points), tolerance);
            std::cout << "validation tolerance " << tolerance << "\n";
            for (const auto& entry : report.entries)
                std::cout << (entry.sup_gap <= tolerance ? "  ok    " : "  BREACH") << "  "
                          << entry.column << "  sup_gap=" << entry.sup_gap << "\n";
            std::cout << (report.passed ? "PASS" : "FAIL") << " worst " << report.worst_column << " "
                      << report.worst_gap << "\n";
            if (!report.passed) return kExitValidationBreach;
        } else if (plan->parsed()) {
            emit(cogmimo::cmd_plan(parse_int_list(n_list_text), m1, parse_double_list(alpha_list_text),
                                   std::pow(10.0, gamma_th_db / 10.0), !strict_mode),
                 output);
        } else if (coherence->parsed()) {
            emit(cogmimo::cmd_coherence(parse_int_list(m_list_text), parse_int_list(n_list_text),
                                        parse_double_list(alpha_list_text),
                                        parse_double_list(gamma_db_list_text)),
                 output);
        }
    } catch (const cogmimo::NumericalInstabilityError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumericalError;
    } catch (const cogmimo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
