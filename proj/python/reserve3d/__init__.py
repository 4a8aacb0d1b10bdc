"""Three-dimensional stochastic claims reserving: simulation, reserves, calibration."""

from ._core import (
    ConfigError,
    EstimationError,
    ModelParams,
    RunConfig,
    SimulationPath,
    analytic_moments,
    calibrate_params,
    chain_ladder,
    compare_2d_3d,
    default_config_text,
    default_params,
    estimate_lag_probs,
    estimate_pay_prob,
    estimate_severity,
    estimate_survival,
    expected_occurrence_triangle,
    expected_shortfall,
    known_payments,
    load_config,
    make_expected_counts,
    mean_claim_size,
    parse_config,
    reserve_breakdown,
    run_monte_carlo,
    simulate_path,
    triangle_occurrence,
    triangle_reporting,
    value_at_risk,
)

__all__ = [name for name in dir() if not name.startswith("_")]
