"""Quantum discord of two-qubit X-states.

Thin Python wrapper over the C++ core: canonical X-state handling, the
analytic optimal-measurement classifier, the von Neumann measurement-angle
minimizer, the 3-outcome POVM upper bound, and the X3 / X_m state families.
"""

from ._xdiscord import (
    AnalyticClass,
    BlochParams,
    CanonicalXState,
    DiscordMethod,
    DiscordResult,
    InvalidPovmError,
    InvalidStateError,
    JdPoint,
    MinimizeOptions,
    NoRootError,
    Povm,
    PovmElement,
    RawXState,
    RegionCell,
    SampleConstraint,
    SearchReport,
    Spectrum,
    XmPoint,
    __version__,
    bell_diagonal,
    binary_entropy,
    bloch_params,
    boundary_bx,
    boundary_bz,
    canonicalize,
    classical_correlation,
    classify_analytic,
    conditional_entropy_povm,
    conditional_entropy_vn,
    discord_given_measurement,
    discord_sigma_x,
    discord_sigma_z,
    discord_upper_povm,
    entropy,
    entropy_a,
    entropy_b,
    from_bloch_params,
    jd_diagram,
    minimize_discord_vn,
    mutual_information,
    random_search,
    region_map,
    scan_xm_curve,
    solve_xm,
    spectrum,
    three_outcome_povm,
    x3_state,
    xm_default_grid,
)

__all__ = [
    "AnalyticClass",
    "BlochParams",
    "CanonicalXState",
    "DiscordMethod",
    "DiscordResult",
    "InvalidPovmError",
    "InvalidStateError",
    "JdPoint",
    "MinimizeOptions",
    "NoRootError",
    "Povm",
    "PovmElement",
    "RawXState",
    "RegionCell",
    "SampleConstraint",
    "SearchReport",
    "Spectrum",
    "XmPoint",
    "__version__",
    "bell_diagonal",
    "binary_entropy",
    "bloch_params",
    "boundary_bx",
    "boundary_bz",
    "canonicalize",
    "classical_correlation",
    "classify_analytic",
    "conditional_entropy_povm",
    "conditional_entropy_vn",
    "discord_given_measurement",
    "discord_sigma_x",
    "discord_sigma_z",
    "discord_upper_povm",
    "entropy",
    "entropy_a",
    "entropy_b",
    "from_bloch_params",
    "jd_diagram",
    "minimize_discord_vn",
    "mutual_information",
    "random_search",
    "region_map",
    "scan_xm_curve",
    "solve_xm",
    "spectrum",
    "three_outcome_povm",
    "x3_state",
    "xm_default_grid",
]
