"""Parallel-family construction and probability-impact classification.

Construction walks the classic recipe over an m x n assessment grid:

1. the base curve ``xy = c`` with c = x_m * y_1 passes through the
   highest-probability, lowest-impact corner;
2. B_1 is the intersection of that curve with the ray from the origin to
   the opposite corner V = (x_m, y_n);
3. the normal at B_1 is cut by the top grid line y = y_n at B_{r+1};
4. the segment B_1..B_{r+1} is divided into r equal steps of length
   h_step, one per curve, giving section points B_j and risk values
   R_j = B_j.x * B_j.y.

A grid point's level is the band between consecutive curves that contains
it, found from its signed normal clearance h: level 1 for h <= 0, then
one band per h_step, capped at r + 1 above the outermost curve.  Points
exactly on a curve belong to the band below it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .curves import BaseCurve, Polyline, sample_curve
from .errors import DomainError, ValidationError
from .inverse import solve_foot

#: Probability classes 1..9: (description, probability per hour of exposure).
PROBABILITY_CLASSES: tuple[tuple[str, float], ...] = (
    ("one event at 20 years", 5e-6),
    ("one event at 2 years", 5e-5),
    ("one event per year", 1e-4),
    ("one event at 6 months", 2e-4),
    ("one event per month", 1.4e-3),
    ("two events per month", 3e-3),
    ("one event per week", 6e-3),
    ("one event per day", 4e-2),
    ("one event at each hour", 1.0),
)

#: Impact classes 1..7, from negligible consequences to critical ones.
IMPACT_CLASSES: tuple[str, ...] = (
    "insignificant",
    "very low",
    "low",
    "medium",
    "high",
    "very high",
    "critical",
)

#: On-curve slack: a clearance within this of a curve counts as on it.
ON_CURVE_SLACK = 1e-12

#: Default borderline flag width as a fraction of h_step.
DEFAULT_BOUNDARY_TOL = 0.02

#: Default source-parameter range when drawing the curve family.
DEFAULT_DRAW_RANGE = (0.8, 9.5)


@dataclass(frozen=True)
class ClassGrid:
    """Assessment lattice: probability classes on x, impact classes on y."""

    xs: tuple[float, ...]
    ys: tuple[float, ...]
    x_labels: Optional[tuple[str, ...]] = None
    y_labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        for name, axis in (("x", self.xs), ("y", self.ys)):
            if len(axis) < 2:
                raise ValidationError(f"{name} axis needs at least 2 classes, got {len(axis)}")
            if any(not (math.isfinite(v) and v > 0.0) for v in axis):
                raise ValidationError(f"{name} axis coordinates must be positive reals")
            if any(axis[i] >= axis[i + 1] for i in range(len(axis) - 1)):
                raise ValidationError(f"{name} axis coordinates must be strictly increasing")
        for name, labels, axis in (
            ("x", self.x_labels, self.xs),
            ("y", self.y_labels, self.ys),
        ):
            if labels is not None and len(labels) != len(axis):
                raise ValidationError(
                    f"{name} axis has {len(axis)} classes but {len(labels)} labels"
                )

    @property
    def m(self) -> int:
        return len(self.xs)

    @property
    def n(self) -> int:
        return len(self.ys)


def default_grid() -> ClassGrid:
    """The stock 9 x 7 grid with integer class coordinates and labels."""
    return ClassGrid(
        xs=tuple(float(i) for i in range(1, 10)),
        ys=tuple(float(j) for j in range(1, 8)),
        x_labels=tuple(label for label, _ in PROBABILITY_CLASSES),
        y_labels=IMPACT_CLASSES,
    )


@dataclass(frozen=True)
class ParallelFamily:
    """r parallel risk curves and the section points that define them.

    ``B`` holds the r + 1 equally spaced points B_1..B_{r+1} on the normal
    at B_1; ``R`` holds the risk values R_1..R_r of the curves; ``normal``
    is the (slope, intercept) of the line carrying the B points.
    """

    c: float
    r: int
    h_step: float
    B: tuple[tuple[float, float], ...]
    R: tuple[float, ...]
    normal: tuple[float, float]

    @property
    def offsets(self) -> tuple[float, ...]:
        """Clearance of each curve from the base one: (j - 1) * h_step."""
        return tuple(j * self.h_step for j in range(self.r))


def section_ratios(r: int) -> tuple[float, ...]:
    """Division ratios k_j = |B_1 B_j| / |B_j B_{r+1}| for j = 2..r."""
    return tuple((j - 1) / (r + 1 - j) for j in range(2, r + 1))


def build_family(grid: ClassGrid, r: int) -> ParallelFamily:
    """Construct the complete r-curve family for a grid.

    The returned family already carries all section points and risk
    values; :func:`section_points` re-derives the interior ones from the
    endpoints and is exposed for verification.
    """
    if r < 1:
        raise DomainError(f"need at least one curve, got r={r!r}")
    x_m, y_1, y_n = grid.xs[-1], grid.ys[0], grid.ys[-1]
    c = x_m * y_1
    b1x = x_m * math.sqrt(y_1 / y_n)
    b1y = math.sqrt(y_1 * y_n)
    if not (math.isfinite(b1x) and b1x > 0.0):
        raise ValidationError(f"degenerate grid: base section point abscissa {b1x!r}")
    slope = b1x * b1x / c
    intercept = b1y - slope * b1x
    bex = (y_n - intercept) / slope
    skeleton = ParallelFamily(
        c=c,
        r=r,
        h_step=math.hypot(bex - b1x, y_n - b1y) / r,
        B=((b1x, b1y), (bex, y_n)),
        R=(c,),
        normal=(slope, intercept),
    )
    return section_points(skeleton)


def section_points(family: ParallelFamily) -> ParallelFamily:
    """Fill in B_2..B_r and R_2..R_r between the endpoint section points.

    B_j divides B_1..B_{r+1} in the ratio k_j = (j-1)/(r+1-j), which is
    plain linear interpolation with parameter (j-1)/r.
    """
    r = family.r
    b1, bend = family.B[0], family.B[-1]
    points = []
    risks = []
    for j in range(r + 1):
        t = j / r
        bx = b1[0] + t * (bend[0] - b1[0])
        by = b1[1] + t * (bend[1] - b1[1])
        points.append((bx, by))
        if j < r:
            risks.append(bx * by)
    return ParallelFamily(
        c=family.c,
        r=r,
        h_step=family.h_step,
        B=tuple(points),
        R=tuple(risks),
        normal=family.normal,
    )


@dataclass(frozen=True)
class CellReport:
    """Classification detail for one point: band, clearance, borderline info."""

    level: int
    h_signed: float
    boundary_distance: float
    flagged: bool


def _nearest_boundary_distance(family: ParallelFamily, h: float) -> float:
    """Distance from clearance h to the nearest curve of the family."""
    k = round(h / family.h_step)
    k = min(max(k, 0), family.r - 1)
    return abs(h - k * family.h_step)


def classify_report(
    family: ParallelFamily,
    p: Sequence[float],
    boundary_tol: float = DEFAULT_BOUNDARY_TOL,
) -> CellReport:
    """Classify one point and report its clearance and borderline status."""
    a, b = float(p[0]), float(p[1])
    if not (a > 0.0 and b > 0.0):
        raise DomainError(f"classification needs an open first-quadrant point, got ({a!r}, {b!r})")
    foot = solve_foot(BaseCurve.hyperbola(family.c), a, b)
    h = foot.h_signed
    if h <= ON_CURVE_SLACK:
        level = 1
    else:
        level = min(family.r + 1, math.ceil(h / family.h_step - ON_CURVE_SLACK) + 1)
    dist = _nearest_boundary_distance(family, h)
    return CellReport(
        level=level,
        h_signed=h,
        boundary_distance=dist,
        flagged=dist < boundary_tol * family.h_step,
    )


def classify_point(family: ParallelFamily, p: Sequence[float]) -> int:
    """Risk level 1..r+1 of a probability-impact point."""
    return classify_report(family, p).level


@dataclass(frozen=True)
class LevelTable:
    """Level assignment for every grid cell.

    Matrices are indexed ``[i][j]`` with i over probability classes and j
    over impact classes.  ``boundary_flags`` marks cells whose clearance
    is within the borderline tolerance of a curve, where rounding noise in
    published tables is expected to show up.
    """

    grid: ClassGrid
    levels: tuple[tuple[int, ...], ...]
    offsets: tuple[tuple[float, ...], ...]
    boundary_flags: tuple[tuple[bool, ...], ...]


def level_table(
    family: ParallelFamily,
    grid: ClassGrid,
    boundary_tol: float = DEFAULT_BOUNDARY_TOL,
) -> LevelTable:
    """Classify every grid point A(x_i, y_j) against the family."""
    expected_c = grid.xs[-1] * grid.ys[0]
    if not math.isclose(family.c, expected_c, rel_tol=1e-12):
        raise ValidationError(
            f"family risk constant {family.c!r} does not match grid corner product {expected_c!r}"
        )
    levels, offsets, flags = [], [], []
    for x in grid.xs:
        row_l, row_h, row_f = [], [], []
        for y in grid.ys:
            rep = classify_report(family, (x, y), boundary_tol)
            row_l.append(rep.level)
            row_h.append(rep.h_signed)
            row_f.append(rep.flagged)
        levels.append(tuple(row_l))
        offsets.append(tuple(row_h))
        flags.append(tuple(row_f))
    return LevelTable(
        grid=grid,
        levels=tuple(levels),
        offsets=tuple(offsets),
        boundary_flags=tuple(flags),
    )


def emit_family_curves(
    family: ParallelFamily,
    samples_per_curve: int,
    x_lo: float = DEFAULT_DRAW_RANGE[0],
    x_hi: float = DEFAULT_DRAW_RANGE[1],
) -> list[Polyline]:
    """Discretise every curve of the family for plotting or export.

    Curve j is the offset of the base hyperbola at (j - 1) * h_step; the
    base curve itself is emitted as C1.
    """
    if samples_per_curve < 2:
        raise DomainError(f"need at least 2 samples per curve, got {samples_per_curve!r}")
    base = BaseCurve.hyperbola(family.c)
    return [
        sample_curve(base, h, x_lo, x_hi, samples_per_curve, label=f"C{j + 1}")
        for j, h in enumerate(family.offsets)
    ]
