"""Polarized MIMO channel statistics with moving scatterer clusters.

Thin python layer over the C++ core: scenario parsing, space-time
correlation matrices (closed-form quadrature and Monte Carlo discrete sum),
correlated channel realization, ergodic capacity, and the CSV experiment
drivers used by the command line tool.
"""

from ._core import (
    DEFAULT_SEED,
    CorrelationMatrix,
    MotionPathSpec,
    ScenarioConfig,
    UnitDirection,
    VmfComponent,
    VmfMixture,
    brownian_path,
    capacity,
    correlation_matrix_at,
    cos_alpha,
    cross_validate,
    effective_snr,
    ergodic_capacity,
    field_pattern_h,
    field_pattern_v,
    load_scenario,
    matrix_sqrt_psd,
    mixture_pdf,
    motion_path,
    parse_scenario,
    realize_channel,
    run_aoa_map,
    run_capacity_sweep,
    run_motion_demo,
    run_stcf_sweep,
    sample_mixture,
    serialize_scenario,
    stcf_monte_carlo_at,
    unit_vector,
    vmf_pdf,
    wrap_to_sphere,
    xpd_from_db,
)

__all__ = [
    "DEFAULT_SEED",
    "CorrelationMatrix",
    "MotionPathSpec",
    "ScenarioConfig",
    "UnitDirection",
    "VmfComponent",
    "VmfMixture",
    "brownian_path",
    "capacity",
    "correlation_matrix_at",
    "cos_alpha",
    "cross_validate",
    "effective_snr",
    "ergodic_capacity",
    "field_pattern_h",
    "field_pattern_v",
    "load_scenario",
    "matrix_sqrt_psd",
    "mixture_pdf",
    "motion_path",
    "parse_scenario",
    "realize_channel",
    "run_aoa_map",
    "run_capacity_sweep",
    "run_motion_demo",
    "run_stcf_sweep",
    "sample_mixture",
    "serialize_scenario",
    "stcf_monte_carlo_at",
    "unit_vector",
    "vmf_pdf",
    "wrap_to_sphere",
    "xpd_from_db",
]

__version__ = "0.1.0"
