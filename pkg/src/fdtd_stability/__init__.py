"""Stability laboratory for Yee-type FD-TD schemes in dispersive media.

Analytic root-location verdicts (polyloc, schemes, analyzer) are
cross-validated by an actual time-stepping simulator; the cli module drives
both and writes CSV reports.
"""

from .errors import InvalidInputError, NumericalFailureError
from .polyloc import (
    Polynomial,
    RootProfile,
    conjugate_poly,
    is_schur,
    is_simple_von_neumann,
    reduce_step,
    root_profile,
)
from .schemes import (
    AmpMatrix,
    DimensionlessParams,
    MediumModel,
    Scheme,
    Wavenumber,
    amplification_matrix,
    char_poly_2d,
    char_poly_closed,
    char_poly_from_matrix,
    courant_q,
    dimensionless_params,
    tm_factor_2d,
)
from .analyzer import (
    Argument,
    BoundednessReport,
    StabilityVerdict,
    classify_at_q,
    classify_point,
    classify_point_2d,
    gn_bounded,
    reproduce_argument_table,
    stability_boundary_k,
    worst_case_verdict,
)
from .simulator import (
    FieldState,
    GrowthReport,
    empirical_verdict,
    init_plane_wave,
    run_growth,
    step,
)

__version__ = "0.1.0"

__all__ = [
    "AmpMatrix",
    "Argument",
    "BoundednessReport",
    "DimensionlessParams",
    "FieldState",
    "GrowthReport",
    "InvalidInputError",
    "MediumModel",
    "NumericalFailureError",
    "Polynomial",
    "RootProfile",
    "Scheme",
    "StabilityVerdict",
    "Wavenumber",
    "amplification_matrix",
    "char_poly_2d",
    "char_poly_closed",
    "char_poly_from_matrix",
    "classify_at_q",
    "classify_point",
    "classify_point_2d",
    "conjugate_poly",
    "courant_q",
    "dimensionless_params",
    "empirical_verdict",
    "gn_bounded",
    "init_plane_wave",
    "is_schur",
    "is_simple_von_neumann",
    "reduce_step",
    "reproduce_argument_table",
    "root_profile",
    "run_growth",
    "stability_boundary_k",
    "step",
    "tm_factor_2d",
    "worst_case_verdict",
]
