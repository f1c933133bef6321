"""Geometry of the base risk curve and its normal offsets.

The base curve is either the hyperbola ``x * y = c`` (the product of a
probability class and an impact class held at the constant risk value c)
or a user-supplied decreasing function ``y = f(x)``.  An offset at signed
distance h moves each curve point along its normal; the locus of offset
points is the curve running parallel to the base at clearance ``|h|``.

For the hyperbola the offset of the point (x, c/x) is

    X = x + c*h / sqrt(c**2 + x**4)
    Y = c/x + h*x**2 / sqrt(c**2 + x**4)

so positive h moves away from the origin (toward higher risk) and
negative h moves toward it.  All values here are immutable and every
operation is a pure function, safe for concurrent read-only use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import (
    AmbiguousAbscissaError,
    DegenerateRangeError,
    DomainError,
    OutOfRangeError,
    SingularNormalError,
    ValidationError,
)
from .rootfind import bisect

_DF_SAMPLES = 257  # construction-time derivative check resolution


@dataclass(frozen=True)
class BaseCurve:
    """A base risk curve: hyperbola ``xy = c`` or a general ``y = f(x)``.

    Build instances through :meth:`hyperbola` or :meth:`general`; the
    constructor itself performs no validation.
    """

    kind: str
    c: Optional[float] = None
    f: Optional[Callable[[float], float]] = None
    df: Optional[Callable[[float], float]] = None
    domain: Optional[tuple[float, float]] = None

    @classmethod
    def hyperbola(cls, c: float) -> "BaseCurve":
        if not (math.isfinite(c) and c > 0.0):
            raise ValidationError(f"risk constant must be a positive real, got {c!r}")
        return cls(kind="hyperbola", c=float(c))

    @classmethod
    def general(
        cls,
        f: Callable[[float], float],
        df: Callable[[float], float],
        domain: tuple[float, float],
    ) -> "BaseCurve":
        lo, hi = float(domain[0]), float(domain[1])
        if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
            raise ValidationError(f"curve domain must be a finite interval, got {domain!r}")
        for x in np.linspace(lo, hi, _DF_SAMPLES):
            fx, dx = f(float(x)), df(float(x))
            if not (math.isfinite(fx) and math.isfinite(dx)):
                raise ValidationError(f"f or df is not finite at x={float(x):.6g}")
            if dx == 0.0:
                raise ValidationError(f"df vanishes at x={float(x):.6g}; the normal is undefined there")
        return cls(kind="general", f=f, df=df, domain=(lo, hi))

    def height(self, x: float) -> float:
        """y-coordinate of the base curve at abscissa x."""
        if self.kind == "hyperbola":
            return self.c / x
        return self.f(x)

    def slope(self, x: float) -> float:
        """dy/dx of the base curve at abscissa x."""
        if self.kind == "hyperbola":
            return -self.c / (x * x)
        return self.df(x)


@dataclass(frozen=True)
class OffsetPoint:
    """A point of the offset curve together with its source parameter.

    The Euclidean distance from (x, base(x)) to (X, Y) equals ``|h|`` and
    (X, Y) lies on the normal line of the base curve at x.
    """

    x: float
    X: float
    Y: float
    h: float


@dataclass(frozen=True)
class Polyline:
    """Discretised curve with strictly increasing X along the vertex list.

    ``dropped`` reports the source parameters whose offset points violated
    X-monotonicity and were removed (offsets wider than the local radius
    of curvature fold back on themselves).
    """

    points: tuple[tuple[float, float], ...]
    label: str
    h: float
    dropped: tuple[float, ...] = field(default=())


def _offset_hyperbola(c: float, x: float, h: float) -> tuple[float, float]:
    s = math.sqrt(c * c + x**4)
    return x + c * h / s, c / x + h * x * x / s


def _offset_general(f, df, x: float, h: float) -> tuple[float, float]:
    d = df(x)
    if d == 0.0:
        raise SingularNormalError(f"df vanishes at x={x:.6g}; the normal is undefined there")
    root = math.sqrt(1.0 + d * d)
    return x + h * abs(d) / root, f(x) - h * (abs(d) / d) / root


def offset_point(curve: BaseCurve, x: float, h: float) -> OffsetPoint:
    """Offset of the hyperbola point (x, c/x) at signed distance h.

    Negative h offsets toward the origin side of the curve.
    """
    if curve.kind != "hyperbola":
        raise DomainError("offset_point requires a hyperbola curve; use offset_point_general")
    if not (math.isfinite(x) and x > 0.0):
        raise DomainError(f"source abscissa must be positive, got {x!r}")
    X, Y = _offset_hyperbola(curve.c, x, h)
    return OffsetPoint(x=x, X=X, Y=Y, h=h)


def offset_point_general(curve: BaseCurve, x: float, h: float) -> OffsetPoint:
    """Offset of the point (x, f(x)) of a general curve at signed distance h.

    With the derivative d = f'(x) the offset is

        X = x + h*|d| / sqrt(1 + d**2)
        Y = f(x) - h*(|d|/d) / sqrt(1 + d**2)

    which reduces to the hyperbola formulas when f(x) = c/x.
    """
    if curve.kind != "general":
        raise DomainError("offset_point_general requires a general curve")
    lo, hi = curve.domain
    if not (lo <= x <= hi):
        raise DomainError(f"x={x!r} outside curve domain [{lo:.6g}, {hi:.6g}]")
    X, Y = _offset_general(curve.f, curve.df, x, h)
    return OffsetPoint(x=x, X=X, Y=Y, h=h)


def normal_line_at(curve: BaseCurve, x0: float) -> tuple[float, float]:
    """Slope and intercept of the normal to ``xy = c`` at abscissa x0.

    The tangent slope is -c/x0**2, so the normal slope is x0**2/c and the
    line passes through (x0, c/x0).
    """
    if curve.kind != "hyperbola":
        raise DomainError("normal_line_at requires a hyperbola curve")
    if not (math.isfinite(x0) and x0 > 0.0):
        raise DomainError(f"abscissa must be positive, got {x0!r}")
    slope = x0 * x0 / curve.c
    intercept = curve.c / x0 - slope * x0
    return slope, intercept


def sample_curve(
    curve: BaseCurve,
    h: float,
    x_lo: float,
    x_hi: float,
    n: int,
    label: Optional[str] = None,
) -> Polyline:
    """Offset polyline for n source parameters equally spaced in [x_lo, x_hi].

    Vertices whose X does not strictly increase past the running maximum
    are dropped (and reported via ``Polyline.dropped``) so the output can
    always be read as a graph over X.
    """
    if not (0.0 < x_lo < x_hi):
        raise DomainError(f"need 0 < x_lo < x_hi, got ({x_lo!r}, {x_hi!r})")
    if n < 2:
        raise DomainError(f"need at least 2 samples, got {n!r}")
    if curve.kind == "general":
        lo, hi = curve.domain
        if x_lo < lo or x_hi > hi:
            raise DomainError(
                f"sampling range [{x_lo:.6g}, {x_hi:.6g}] outside curve domain [{lo:.6g}, {hi:.6g}]"
            )
    points: list[tuple[float, float]] = []
    dropped: list[float] = []
    last_x = -math.inf
    for i in range(n):
        t = x_lo + (x_hi - x_lo) * i / (n - 1)
        if curve.kind == "hyperbola":
            X, Y = _offset_hyperbola(curve.c, t, h)
        else:
            X, Y = _offset_general(curve.f, curve.df, t, h)
        if X > last_x:
            points.append((X, Y))
            last_x = X
        else:
            dropped.append(t)
    if len(points) < 2:
        raise DegenerateRangeError(
            f"monotonicity filtering left {len(points)} point(s) for h={h:.6g} "
            f"over [{x_lo:.6g}, {x_hi:.6g}]"
        )
    return Polyline(
        points=tuple(points),
        label=label if label is not None else f"h={h:g}",
        h=h,
        dropped=tuple(dropped),
    )


def curve_height_at(curve: BaseCurve, h: float, X_target: float) -> float:
    """Y of the hyperbola's offset curve read as a graph at X = X_target.

    The parameter x cannot be eliminated in closed form, so the equation
    X(x) = X_target is solved numerically: a sign-change scan over the
    reachable parameter range followed by bisection.  Raises
    OutOfRangeError when the offset curve never reaches X_target and
    AmbiguousAbscissaError (listing all candidate parameters) when it
    crosses that abscissa more than once.
    """
    if curve.kind != "hyperbola":
        raise DomainError("curve_height_at requires a hyperbola curve")
    c = curve.c
    # |X - x| <= |h|, so any solution parameter lies within |h| of X_target.
    lo = max(1e-9, X_target - abs(h) - 1.0)
    hi = X_target + abs(h) + 1.0
    if hi <= lo:
        raise OutOfRangeError(f"X={X_target!r} is not reachable for h={h!r}")
    xs = np.linspace(lo, hi, 2049)
    s = np.sqrt(c * c + xs**4)
    g = xs + c * h / s - X_target
    brackets: list[tuple[float, float]] = []
    sign = np.sign(g)
    for i in range(len(xs) - 1):
        if g[i] == 0.0:
            brackets.append((float(xs[i]), float(xs[i])))
        elif sign[i] * sign[i + 1] < 0:
            brackets.append((float(xs[i]), float(xs[i + 1])))
    if g[-1] == 0.0:
        brackets.append((float(xs[-1]), float(xs[-1])))
    if not brackets:
        raise OutOfRangeError(
            f"the offset curve at h={h:.6g} does not reach X={X_target:.6g}"
        )

    def gg(x: float) -> float:
        return x + c * h / math.sqrt(c * c + x**4) - X_target

    roots = [a if a == b else bisect(gg, a, b, xtol=1e-12) for a, b in brackets]
    if len(roots) > 1:
        raise AmbiguousAbscissaError(
            f"X={X_target:.6g} is crossed {len(roots)} times by the offset curve "
            f"at h={h:.6g}",
            candidates=tuple(roots),
        )
    return _offset_hyperbola(c, roots[0], h)[1]
