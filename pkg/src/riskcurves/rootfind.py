"""Bracketing root location: sign-change scans refined by bisection.

Bisection is used everywhere in this package because every target function
is continuous on its scan interval, so convergence is unconditional once a
sign change has been bracketed.
"""

from __future__ import annotations

from typing import Callable


def bisect(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    *,
    xtol: float = 1e-13,
    max_iter: int = 200,
) -> float:
    """Root of ``f`` inside ``[lo, hi]``, where f(lo) and f(hi) differ in sign.

    Returns the interval midpoint once the interval width drops below
    ``xtol`` or an evaluation hits exactly zero.
    """
    flo = f(lo)
    if flo == 0.0:
        return lo
    fhi = f(hi)
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise ValueError("bisect requires a sign change over [lo, hi]")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if fmid == 0.0 or (hi - lo) < xtol:
            return mid
        if flo * fmid < 0.0:
            hi = mid
        else:
            lo, flo = mid, fmid
    return 0.5 * (lo + hi)


def scan_brackets(values: list[float], grid: list[float]) -> list[tuple[float, float]]:
    """Sub-intervals of ``grid`` whose endpoint values change sign.

    Exact zeros at grid nodes are returned as degenerate (x, x) brackets.
    """
    out: list[tuple[float, float]] = []
    for i in range(len(grid) - 1):
        a, b = values[i], values[i + 1]
        if a == 0.0:
            out.append((grid[i], grid[i]))
        elif a * b < 0.0:
            out.append((grid[i], grid[i + 1]))
    if values[-1] == 0.0:
        out.append((grid[-1], grid[-1]))
    return out
