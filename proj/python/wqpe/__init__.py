"""Window-assisted coherent phase-estimation laboratory."""

from wqpe._core import (
    ConfigError,
    EmulationReport,
    GapError,
    InfeasibleError,
    baseline_qubits,
    bessel_i0,
    capped_beta,
    default_c,
    error_bound,
    estimate_case,
    half_bin_overlap,
    make_window,
    max_contamination_overlap,
    nu,
    optimal_beta,
    outer_qubits,
    overlap,
    phase_distribution,
    run_algorithm,
    run_suite,
    success_bound,
    suite_names,
    total_toffoli,
    worst_case_failure,
)

__all__ = [
    "ConfigError",
    "EmulationReport",
    "GapError",
    "InfeasibleError",
    "baseline_qubits",
    "bessel_i0",
    "capped_beta",
    "default_c",
    "error_bound",
    "estimate_case",
    "half_bin_overlap",
    "make_window",
    "max_contamination_overlap",
    "nu",
    "optimal_beta",
    "outer_qubits",
    "overlap",
    "phase_distribution",
    "run_algorithm",
    "run_suite",
    "success_bound",
    "suite_names",
    "total_toffoli",
    "worst_case_failure",
]
