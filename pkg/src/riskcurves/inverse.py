"""Inverse offset problem: project a point onto the base risk curve.

Given a point N(a, b), the foot of the normal on the hyperbola ``xy = c``
has an abscissa that is a positive root of

    x**4 - a*x**3 + b*c*x - c**2 = 0

and the signed clearance from the curve follows as

    h = (a - x) / c * sqrt(c**2 + x**4)

which is positive above the curve (a*b > c), zero on it, and negative
below.  When several positive roots exist the point has several normal
feet; the root minimising |h| is returned because that is the actual
nearest-point projection, with ties broken toward the smaller abscissa
for determinism.  All roots are located by a sign-change scan refined by
bisection; no closed-form quartic formula is used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curves import BaseCurve
from .errors import DomainError, NoFootError, SingularNormalError, SolverError
from .rootfind import bisect, scan_brackets

_SCAN_CELLS = 2048
_ROOT_XTOL = 1e-13


@dataclass(frozen=True)
class FootResult:
    """Nearest normal-foot of a point on the base curve.

    ``candidates`` lists every positive root found (every normal of the
    curve through the queried point); more than one entry means the point
    lies beyond the curve's focal zone and the projection was chosen by
    the minimal-|h| rule.
    """

    x_foot: float
    h_signed: float
    residual: float
    candidates: tuple[float, ...]

    @property
    def multiple_feet(self) -> bool:
        return len(self.candidates) > 1


def quartic_coefficients(a: float, b: float, c: float) -> tuple[float, float, float, float, float]:
    """Descending-power coefficients of the normal-foot quartic."""
    if not (math.isfinite(c) and c > 0.0):
        raise DomainError(f"risk constant must be positive, got {c!r}")
    return (1.0, -float(a), 0.0, float(b) * float(c), -float(c) * float(c))


def _eval_quartic(coeffs: tuple[float, ...], x: float) -> float:
    acc = 0.0
    for co in coeffs:
        acc = acc * x + co
    return acc


def _positive_roots(a: float, b: float, c: float) -> tuple[float, ...]:
    """All positive real roots of the foot quartic, sorted ascending.

    Sign-change scan over [1e-6, a + c + 10] in 2048 cells, each bracket
    refined by bisection to 1e-13 interval width.  The upper bound is safe:
    a foot beyond a + 1 would force x**3 * (x - a) < c**2.
    """
    coeffs = quartic_coefficients(a, b, c)
    hi = a + c + 10.0
    xs = np.linspace(1e-6, hi, _SCAN_CELLS + 1)
    vals = (((xs + coeffs[1]) * xs + coeffs[2]) * xs + coeffs[3]) * xs + coeffs[4]
    roots: list[float] = []
    for blo, bhi in scan_brackets(vals.tolist(), xs.tolist()):
        if blo == bhi:
            roots.append(blo)
        else:
            roots.append(
                bisect(lambda x: _eval_quartic(coeffs, x), blo, bhi, xtol=_ROOT_XTOL)
            )
    deduped: list[float] = []
    for r in sorted(roots):
        if not deduped or r - deduped[-1] > 1e-9:
            deduped.append(r)
    return tuple(deduped)


def _h_at_root(a: float, c: float, x: float) -> float:
    return (a - x) / c * math.sqrt(c * c + x**4)


def solve_foot(curve: BaseCurve, a: float, b: float) -> FootResult:
    """Nearest-foot projection of the first-quadrant point (a, b).

    ``h_signed`` is zero exactly when a*b = c, negative when the point is
    below the curve, and its magnitude equals the minimum Euclidean
    distance from (a, b) to the curve.
    """
    if curve.kind != "hyperbola":
        raise DomainError("solve_foot requires a hyperbola curve; use solve_foot_general")
    if not (math.isfinite(a) and math.isfinite(b) and a > 0.0 and b > 0.0):
        raise DomainError(f"foot solving requires a first-quadrant point, got ({a!r}, {b!r})")
    c = curve.c
    roots = _positive_roots(a, b, c)
    if not roots:
        raise SolverError(f"no positive foot abscissa found for ({a:.6g}, {b:.6g})")
    x_foot = min(roots, key=lambda x: (abs(_h_at_root(a, c, x)), x))
    coeffs = quartic_coefficients(a, b, c)
    scale = max(1.0, max(abs(co) for co in coeffs))
    residual = abs(_eval_quartic(coeffs, x_foot)) / scale
    return FootResult(
        x_foot=x_foot,
        h_signed=_h_at_root(a, c, x_foot),
        residual=residual,
        candidates=roots,
    )


def solve_foot_general(curve: BaseCurve, a: float, b: float) -> FootResult:
    """Nearest-foot projection of (a, b) onto a general curve y = f(x).

    The foot condition comes from requiring (a, b) on the normal at x:

        f'(x) * (b - f(x)) + (a - x) = 0

    For f(x) = c/x this reduces (times -x**3) to the hyperbola quartic.
    ``h_signed`` is the component of (a - x, b - f(x)) along the unit
    normal oriented the same way positive offsets move, so the hyperbola
    and general paths agree identically.
    """
    if curve.kind != "general":
        raise DomainError("solve_foot_general requires a general curve")
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"point coordinates must be finite, got ({a!r}, {b!r})")
    f, df = curve.f, curve.df
    lo, hi = curve.domain

    def g(x: float) -> float:
        return df(x) * (b - f(x)) + (a - x)

    xs = np.linspace(lo, hi, _SCAN_CELLS + 1)
    vals = [g(float(x)) for x in xs]
    brackets = scan_brackets(vals, [float(x) for x in xs])
    if not brackets:
        raise NoFootError(
            f"the normal projection of ({a:.6g}, {b:.6g}) falls outside "
            f"the curve domain [{lo:.6g}, {hi:.6g}]"
        )
    roots: list[float] = []
    for blo, bhi in brackets:
        r = blo if blo == bhi else bisect(g, blo, bhi, xtol=_ROOT_XTOL)
        if not roots or r - roots[-1] > 1e-9:
            roots.append(r)

    def h_at(x: float) -> float:
        d = df(x)
        if d == 0.0:
            raise SingularNormalError(f"df vanishes at the foot x={x:.6g}")
        root = math.sqrt(1.0 + d * d)
        nx, ny = abs(d) / root, -(abs(d) / d) / root
        return (a - x) * nx + (b - f(x)) * ny

    x_foot = min(roots, key=lambda x: (abs(h_at(x)), x))
    scale = max(1.0, abs(a), abs(b), abs(f(x_foot)))
    return FootResult(
        x_foot=x_foot,
        h_signed=h_at(x_foot),
        residual=abs(g(x_foot)) / scale,
        candidates=tuple(roots),
    )
