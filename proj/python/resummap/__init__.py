"""Transasymptotic approximations for static and slowly-varying logistic maps."""

from ._core import (  # noqa: F401
    Cycle,
    ResummapError,
    LandmarkSet,
    Region,
    WeightProfile,
    action_A,
    b_dynamic,
    b_weight,
    classify_region,
    cycle_multiplier,
    eps0_static,
    f4,
    f8,
    find_cycle,
    find_z0,
    four_cycle,
    iterate_dynamic,
    iterate_static,
    landmarks,
    leading_coeff_even,
    leading_coeff_odd,
    nonperiodic_fixed_point,
    omega_e0,
    omega_e1,
    omega_o0,
    omega_o1,
    onset_index,
    overline_sigma0,
    overline_tau0,
    periodicity_of,
    profile_f4,
    profile_f8,
    r2_app,
    r4_app,
    r10,
    r_app_dynamic,
    residual_2per,
    rm0_table,
    sigma0_coefficients,
    sigma1_coefficients,
    sigma1_matching_oracle,
    solve_K,
    theta_leading,
    two_cycle,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "1.0.0"
