#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cogmimo/commands.hpp"
#include "cogmimo/errors.hpp"
#include "cogmimo/monte_carlo.hpp"
#include "cogmimo/numerics.hpp"
#include "cogmimo/outage.hpp"
#include "cogmimo/planner.hpp"
#include "cogmimo/scenario.hpp"
#include "cogmimo/snr_cdf.hpp"
#include "cogmimo/table.hpp"

namespace py = pybind11;
using namespace cogmimo;

namespace {

std::string table_csv(const CurveTable& table) {
    std::ostringstream out;
    write_csv(table, out);
    return out.str();
}

std::string table_json(const CurveTable& table) {
    std::ostringstream out;
    write_json(table, out);
    return out.str();
}

}  // namespace

PYBIND11_MODULE(_cogmimo, m) {
    m.doc() = "Priority-based two-stage zero-forcing multiuser MIMO toolkit";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NumericalInstabilityError>(m, "NumericalInstabilityError",
                                                      PyExc_ArithmeticError);

    py::class_<ScenarioConfig>(m, "ScenarioConfig")
        .def(py::init<>())
        .def_readwrite("n_rx", &ScenarioConfig::n_rx)
        .def_readwrite("m1", &ScenarioConfig::m1)
        .def_readwrite("m2", &ScenarioConfig::m2)
        .def_readwrite("tx_power", &ScenarioConfig::tx_power)
        .def_readwrite("noise_power", &ScenarioConfig::noise_power)
        .def_readwrite("distances", &ScenarioConfig::distances)
        .def_readwrite("pathloss_exponents", &ScenarioConfig::pathloss_exponents)
        .def_readwrite("alpha", &ScenarioConfig::alpha)
        .def_readwrite("noise_uncertainty_db", &ScenarioConfig::noise_uncertainty_db)
        .def_readwrite("gamma_th", &ScenarioConfig::gamma_th)
        .def_readwrite("gamma_t", &ScenarioConfig::gamma_t)
        .def_readwrite("trials", &ScenarioConfig::trials)
        .def_readwrite("seed", &ScenarioConfig::seed)
        .def_readwrite("massive_limit", &ScenarioConfig::massive_limit)
        .def("validate", &ScenarioConfig::validate)
        .def("m_total", &ScenarioConfig::m_total);

    py::class_<LinkPowerProfile>(m, "LinkPowerProfile")
        .def_readonly("p", &LinkPowerProfile::p)
        .def_readonly("p_hat", &LinkPowerProfile::p_hat)
        .def_readonly("residual", &LinkPowerProfile::residual);

    py::class_<NoiseUncertainty>(m, "NoiseUncertainty")
        .def(py::init<double, double>(), py::arg("l_db") = 2.0, py::arg("n_hat0") = 1.0)
        .def_readwrite("l_db", &NoiseUncertainty::l_db)
        .def_readwrite("n_hat0", &NoiseUncertainty::n_hat0);

    py::class_<OutageReport>(m, "OutageReport")
        .def_readonly("per_stream_service1", &OutageReport::per_stream_service1)
        .def_readonly("per_stream_service2", &OutageReport::per_stream_service2)
        .def_readonly("total_service1", &OutageReport::total_service1)
        .def_readonly("total_service2", &OutageReport::total_service2)
        .def_readonly("switch_probability", &OutageReport::switch_probability);

    py::class_<PlannerResult>(m, "PlannerResult")
        .def_readonly("m2_star", &PlannerResult::m2_star)
        .def_readonly("lambda_diag", &PlannerResult::lambda_diag)
        .def_readonly("objective", &PlannerResult::objective)
        .def_readonly("constraint_value", &PlannerResult::constraint_value)
        .def_readonly("iterations", &PlannerResult::iterations);

    py::class_<CoherenceResult>(m, "CoherenceResult")
        .def_readonly("t_max", &CoherenceResult::t_max)
        .def_readonly("t_max_real", &CoherenceResult::t_max_real)
        .def_readonly("snr_at_tmax", &CoherenceResult::snr_at_tmax)
        .def_readonly("infinite", &CoherenceResult::infinite)
        .def_readonly("infeasible", &CoherenceResult::infeasible);

    py::class_<CurveTable>(m, "CurveTable")
        .def_readonly("columns", &CurveTable::columns)
        .def_readonly("rows", &CurveTable::rows)
        .def("to_csv", &table_csv)
        .def("to_json", &table_json);

    m.def("bessel_j0", &bessel_j0, py::arg("x"));
    m.def("upper_incomplete_gamma", &upper_incomplete_gamma, py::arg("a"), py::arg("x"));
    m.def("link_power", &link_power, py::arg("p_t"), py::arg("d"), py::arg("omega"));
    m.def("mmse_power", &mmse_power, py::arg("p"), py::arg("m_total"), py::arg("p_t"));
    m.def("aging_coefficient", &aging_coefficient, py::arg("fd_ts"));
    m.def("residual_variance", &residual_variance, py::arg("p"), py::arg("p_hat"), py::arg("a"),
          py::arg("order"));
    m.def("build_profile", &build_profile, py::arg("config"));
    m.def("beta_density", &beta_density, py::arg("x"), py::arg("l_db"));

    m.def("cdf_stage1", &cdf_stage1, py::arg("gamma"), py::arg("stream_index"), py::arg("profile"),
          py::arg("config"), py::arg("t1"));
    m.def("cdf_stage2", &cdf_stage2, py::arg("gamma"), py::arg("stream_index"), py::arg("profile"),
          py::arg("config"), py::arg("t2"), py::arg("nu"));
    m.def("cdf_stage1_high_snr", &cdf_stage1_high_snr, py::arg("gamma"), py::arg("stream_index"),
          py::arg("profile"), py::arg("config"), py::arg("t1"));
    m.def("cdf_stage2_high_snr", &cdf_stage2_high_snr, py::arg("gamma"), py::arg("stream_index"),
          py::arg("profile"), py::arg("config"), py::arg("t2"), py::arg("nu"));
    m.def("cdf_min_stage1", &cdf_min_stage1, py::arg("gamma_t"), py::arg("profile"), py::arg("config"));
    m.def("sub_profile", &sub_profile, py::arg("profile"), py::arg("offset"), py::arg("count"));

    m.def("outage_service1", &outage_service1, py::arg("gamma_th"), py::arg("gamma_t"),
          py::arg("stream_index"), py::arg("profile"), py::arg("config"), py::arg("nu"));
    m.def("outage_service2", &outage_service2, py::arg("gamma_th"), py::arg("gamma_t"),
          py::arg("stream_index"), py::arg("profile"), py::arg("config"), py::arg("nu"));
    m.def("full_report", &full_report, py::arg("profile"), py::arg("config"), py::arg("nu"));
    m.def("estimate_outage", &estimate_outage, py::arg("profile"), py::arg("config"), py::arg("nu"),
          py::arg("trials"), py::arg("seed"), py::arg("workers") = 0);

    m.def("optimality_condition", &optimality_condition, py::arg("m2"), py::arg("n"), py::arg("a"),
          py::arg("p"), py::arg("p_hat"));
    m.def("sum_rate_objective", &sum_rate_objective, py::arg("m2"), py::arg("n"), py::arg("a"),
          py::arg("p"), py::arg("p_hat"));
    m.def("optimal_m2", &optimal_m2, py::arg("config"), py::arg("profile"));
    m.def("coherence_time", &coherence_time, py::arg("profile"), py::arg("config"), py::arg("gamma_th"));

    m.def("parse_scenario", &parse_scenario, py::arg("path"));
    m.def(
        "parse_scenario_text",
        [](const std::string& text) {
            std::istringstream in(text);
            return parse_scenario_stream(in);
        },
        py::arg("text"));
    m.def("make_db_grid", &make_db_grid, py::arg("min_db"), py::arg("max_db"), py::arg("points"));
    m.def("cmd_analyze", &cmd_analyze, py::arg("config"), py::arg("gamma_grid_db"));
    m.def("cmd_simulate", &cmd_simulate, py::arg("config"), py::arg("gamma_grid_db"),
          py::call_guard<py::gil_scoped_release>());
    m.def("cmd_plan", &cmd_plan, py::arg("n_list"), py::arg("m1"), py::arg("alpha_list"),
          py::arg("gamma_th") = 1.0, py::arg("massive") = true);
    m.def("cmd_coherence", &cmd_coherence, py::arg("m_list"), py::arg("n_list"),
          py::arg("alpha_list"), py::arg("gamma_th_db_list"));
}
