"""Priority-based two-stage zero-forcing multiuser MIMO toolkit."""

from ._cogmimo import (  # noqa: F401
    CoherenceResult,
    CurveTable,
    DomainError,
    LinkPowerProfile,
    NoiseUncertainty,
    NumericalInstabilityError,
    OutageReport,
    PlannerResult,
    ScenarioConfig,
    aging_coefficient,
    bessel_j0,
    beta_density,
    build_profile,
    cdf_min_stage1,
    cdf_stage1,
    cdf_stage1_high_snr,
    cdf_stage2,
    cdf_stage2_high_snr,
    cmd_analyze,
    cmd_coherence,
    cmd_plan,
    cmd_simulate,
    coherence_time,
    estimate_outage,
    full_report,
    link_power,
    make_db_grid,
    mmse_power,
    optimal_m2,
    optimality_condition,
    outage_service1,
    outage_service2,
    parse_scenario,
    parse_scenario_text,
    residual_variance,
    sub_profile,
    sum_rate_objective,
    upper_incomplete_gamma,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
