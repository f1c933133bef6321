"""Shared test data and independent oracles.

``REFERENCE_LEVELS`` is the published 63-cell classification this tool
reproduces (seven bands over the stock 9 x 7 grid).  The brute-force
helpers are deliberately independent of the library's solvers: they only
sample the base curve densely and take minima.
"""

from __future__ import annotations

import math

import numpy as np
import pytest

from riskcurves import build_family, default_grid

# Published reference classification of the stock grid: band -> cells.
REFERENCE_LISTING: dict[int, list[tuple[int, int]]] = {
    1: [(1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7),
        (2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3),
        (4, 1), (4, 2), (5, 1), (6, 1), (7, 1), (8, 1), (9, 1)],
    2: [(2, 5), (2, 6), (2, 7), (3, 4), (4, 3), (5, 2), (6, 2), (7, 2), (8, 2)],
    3: [(3, 5), (3, 6), (3, 7), (4, 4), (5, 3), (6, 3), (7, 3), (8, 3), (9, 2)],
    4: [(4, 5), (4, 6), (4, 7), (5, 4), (6, 4), (7, 4), (9, 3)],
    5: [(5, 5), (5, 6), (5, 7), (6, 5), (7, 5), (8, 4), (9, 4)],
    6: [(6, 6), (6, 7), (7, 6), (8, 5), (9, 5)],
    7: [(7, 7), (8, 6), (8, 7), (9, 6), (9, 7)],
}

REFERENCE_LEVELS: dict[tuple[int, int], int] = {
    cell: level for level, cells in REFERENCE_LISTING.items() for cell in cells
}
assert len(REFERENCE_LEVELS) == 63

# Worked sample data used across the measures tests and the acceptance gate.
EXAMPLE_1 = (15, 14, 18, 15, 12, 11, 5, 0, 3, 5, 4, 5)
EXAMPLE_2 = (21, 21, 30, 22, 32, 19, 3, 3, 5, 8, 12, 11)


def brute_nearest_distance(
    c: float, a: float, b: float, n: int = 100_000, lo: float = 0.05, hi: float = 60.0
) -> float:
    """Distance from (a, b) to the curve xy = c by dense sampling.

    A coarse scan locates the minimum, then a local rescan shrinks the
    sampling error far below 1e-6 even where the curve is steep.
    """
    xs = np.linspace(lo, hi, n)
    d = np.hypot(xs - a, c / xs - b)
    i = int(np.argmin(d))
    fine = np.linspace(xs[max(0, i - 2)], xs[min(n - 1, i + 2)], 4001)
    return float(np.hypot(fine - a, c / fine - b).min())


def cut_distance(c: float, x: float) -> float:
    """Clearance at which the offset ray from (x, c/x) meets the symmetry
    diagonal, beyond which the nearest curve point switches branches."""
    return math.sqrt(c * c + x**4) / x


@pytest.fixture(scope="session")
def grid9x7():
    return default_grid()


@pytest.fixture(scope="session")
def family6(grid9x7):
    return build_family(grid9x7, 6)
