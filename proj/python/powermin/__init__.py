"""Global minimizers of repulsive-attractive power-law interaction energies."""

from ._core import (
    BracketFailure,
    CoincidentPoints,
    Configuration,
    InitStrategy,
    MinimizeResult,
    OptimizerOptions,
    Potential,
    PotentialClass,
    PowerLawFit,
    WrongPotentialClass,
    bound_diameter_case1,
    canonicalize,
    diameter,
    eval_energy,
    eval_energy_continuum,
    eval_gradient,
    fit_power_law,
    global_minimize,
    local_minimize,
    min_gap,
    parse_sweep_csv,
    quadratic_newtonian_minimizer,
    run_verify_suite,
    solve_min_gap,
    spreading_lower_bound,
    verify_suite_names,
    wasserstein1_to_uniform,
)

__all__ = [name for name in dir() if not name.startswith("_")]
