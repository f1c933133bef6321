"""Parallel risk curves: geometry, classification, and risk measures.

Everything in the library layer is immutable after construction and every
operation is a pure function, so the whole API is safe to share across
threads.
"""

from .curves import (
    BaseCurve,
    OffsetPoint,
    Polyline,
    curve_height_at,
    normal_line_at,
    offset_point,
    offset_point_general,
    sample_curve,
)
from .errors import (
    AmbiguousAbscissaError,
    DegenerateRangeError,
    DomainError,
    NoFootError,
    OutOfRangeError,
    RiskCurvesError,
    SingularNormalError,
    SolverError,
    ValidationError,
)
from .inverse import FootResult, quartic_coefficients, solve_foot, solve_foot_general
from .levels import (
    IMPACT_CLASSES,
    PROBABILITY_CLASSES,
    CellReport,
    ClassGrid,
    LevelTable,
    ParallelFamily,
    build_family,
    classify_point,
    classify_report,
    default_grid,
    emit_family_curves,
    level_table,
    section_points,
    section_ratios,
)
from .measures import (
    MeasureReport,
    Sample,
    TwoForms,
    mean,
    mean_estimate,
    measure_report,
    power_measure,
    semivariance,
    taguchi,
    threshold_above,
    threshold_below,
    variance_measure,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousAbscissaError",
    "BaseCurve",
    "CellReport",
    "ClassGrid",
    "DegenerateRangeError",
    "DomainError",
    "FootResult",
    "IMPACT_CLASSES",
    "LevelTable",
    "MeasureReport",
    "NoFootError",
    "OffsetPoint",
    "OutOfRangeError",
    "ParallelFamily",
    "Polyline",
    "PROBABILITY_CLASSES",
    "RiskCurvesError",
    "Sample",
    "SingularNormalError",
    "SolverError",
    "TwoForms",
    "ValidationError",
    "build_family",
    "classify_point",
    "classify_report",
    "curve_height_at",
    "default_grid",
    "emit_family_curves",
    "level_table",
    "mean",
    "mean_estimate",
    "measure_report",
    "normal_line_at",
    "offset_point",
    "offset_point_general",
    "power_measure",
    "quartic_coefficients",
    "sample_curve",
    "section_points",
    "section_ratios",
    "semivariance",
    "solve_foot",
    "solve_foot_general",
    "taguchi",
    "threshold_above",
    "threshold_below",
    "variance_measure",
]
