"""Deterministic CSV, JSON, and SVG rendering of tables and curve families.

Identical inputs must produce byte-identical documents, so nothing here
reads clocks, locales, or dictionary iteration order: every float is
written with fixed 6-decimal formatting, JSON keys are emitted sorted,
and colors/positions come from fixed constants.
"""

from __future__ import annotations

import math
from typing import Optional, Sequence

from .curves import Polyline
from .levels import ClassGrid, LevelTable, ParallelFamily

#: Stroke cycle for curve paths (repeats when a family has more curves).
_CURVE_COLORS = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#bcbd22",
    "#17becf",
)


def fmt6(value: float) -> str:
    """Fixed 6-decimal rendering; the single float format of all emitters."""
    out = f"{value:.6f}"
    return "0.000000" if out == "-0.000000" else out


def to_json(obj) -> str:
    """Deterministic JSON: sorted keys, fixed 6-decimal floats, no spaces drift."""
    pieces: list[str] = []
    _write_json(obj, pieces)
    return "".join(pieces)


def _write_json(obj, out: list[str]) -> None:
    if obj is None:
        out.append("null")
    elif isinstance(obj, bool):
        out.append("true" if obj else "false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(fmt6(obj))
    elif isinstance(obj, str):
        out.append('"' + obj.replace("\\", "\\\\").replace('"', '\\"') + '"')
    elif isinstance(obj, dict):
        out.append("{")
        for i, key in enumerate(sorted(obj)):
            if i:
                out.append(", ")
            _write_json(str(key), out)
            out.append(": ")
            _write_json(obj[key], out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, item in enumerate(obj):
            if i:
                out.append(", ")
            _write_json(item, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialise {type(obj).__name__}")


def _family_dict(family: ParallelFamily) -> dict:
    return {
        "c": family.c,
        "r": family.r,
        "h_step": family.h_step,
        "B": [[bx, by] for bx, by in family.B],
        "R": list(family.R),
        "normal": {"slope": family.normal[0], "intercept": family.normal[1]},
    }


def _iter_cells(table: LevelTable):
    """Cells in emission order: ascending impact, then ascending probability."""
    grid = table.grid
    for j in range(grid.n):
        for i in range(grid.m):
            yield i, j, grid.xs[i], grid.ys[j]


def levels_to_csv(table: LevelTable) -> str:
    lines = ["probability,impact,level,h_signed,boundary"]
    for i, j, x, y in _iter_cells(table):
        lines.append(
            f"{fmt6(x)},{fmt6(y)},{table.levels[i][j]},"
            f"{fmt6(table.offsets[i][j])},{int(table.boundary_flags[i][j])}"
        )
    return "\n".join(lines) + "\n"


def levels_to_json(table: LevelTable, family: ParallelFamily) -> str:
    cells = [
        {
            "probability": x,
            "impact": y,
            "level": table.levels[i][j],
            "h_signed": table.offsets[i][j],
            "boundary": table.boundary_flags[i][j],
        }
        for i, j, x, y in _iter_cells(table)
    ]
    doc = {
        "grid": {"xs": list(table.grid.xs), "ys": list(table.grid.ys)},
        "family": _family_dict(family),
        "cells": cells,
    }
    return to_json(doc) + "\n"


def curves_to_csv(polylines: Sequence[Polyline]) -> str:
    lines = ["curve,X,Y"]
    for poly in polylines:
        for X, Y in poly.points:
            lines.append(f"{poly.label},{fmt6(X)},{fmt6(Y)}")
    return "\n".join(lines) + "\n"


def curves_to_json(polylines: Sequence[Polyline]) -> str:
    doc = {
        "curves": [
            {
                "label": poly.label,
                "h": poly.h,
                "points": [[X, Y] for X, Y in poly.points],
                "dropped": list(poly.dropped),
            }
            for poly in polylines
        ]
    }
    return to_json(doc) + "\n"


def measure_to_json(report) -> str:
    doc = {
        "measure": report.measure,
        "params": dict(report.params),
        "value": report.value,
        "estimator": report.estimator,
        "mean": report.mean,
        "mean_estimate": report.mean_estimate,
        "variance": report.variance,
        "variance_estimate": report.variance_estimate,
    }
    return to_json(doc) + "\n"


def curves_to_svg(
    polylines: Sequence[Polyline],
    grid: ClassGrid,
    family: Optional[ParallelFamily] = None,
    width: int = 860,
    height: int = 620,
) -> str:
    """Standalone SVG 1.1 chart: curve paths, grid lines, level labels.

    The two axes are scaled independently so grids with very different
    class counts still fill the canvas.
    """
    ml, mr, mt, mb = 70.0, 30.0, 30.0, 60.0
    plot_w, plot_h = width - ml - mr, height - mt - mb
    x_max = grid.xs[-1] + 0.5
    y_max = grid.ys[-1] + 0.5
    for poly in polylines:
        for X, Y in poly.points:
            if 0.0 < X <= x_max * 1.5:
                y_max = max(y_max, min(Y, grid.ys[-1] * 2.0))

    def px(x: float) -> str:
        return fmt6(ml + plot_w * x / x_max)

    def py(y: float) -> str:
        return fmt6(mt + plot_h * (1.0 - y / y_max))

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        '<rect width="100%" height="100%" fill="white"/>',
        '<g font-family="sans-serif" font-size="12">',
    ]
    # assessment lattice
    for x in grid.xs:
        out.append(
            f'<line class="grid-x" x1="{px(x)}" y1="{py(0.0)}" x2="{px(x)}" '
            f'y2="{py(y_max)}" stroke="#cccccc" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{px(x)}" y="{fmt6(mt + plot_h + 16.0)}" '
            f'text-anchor="middle" fill="#333333">{x:g}</text>'
        )
    for y in grid.ys:
        out.append(
            f'<line class="grid-y" x1="{px(0.0)}" y1="{py(y)}" x2="{px(x_max)}" '
            f'y2="{py(y)}" stroke="#cccccc" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{fmt6(ml - 8.0)}" y="{py(y)}" text-anchor="end" '
            f'dy="4" fill="#333333">{y:g}</text>'
        )
    # axes
    out.append(
        f'<line x1="{px(0.0)}" y1="{py(0.0)}" x2="{px(x_max)}" y2="{py(0.0)}" '
        'stroke="#000000" stroke-width="1.5"/>'
    )
    out.append(
        f'<line x1="{px(0.0)}" y1="{py(0.0)}" x2="{px(0.0)}" y2="{py(y_max)}" '
        'stroke="#000000" stroke-width="1.5"/>'
    )
    # curves, clipped to the canvas by dropping out-of-window vertices
    for idx, poly in enumerate(polylines):
        color = _CURVE_COLORS[idx % len(_CURVE_COLORS)]
        coords = [(X, Y) for X, Y in poly.points if X <= x_max and Y <= y_max]
        if len(coords) < 2:
            continue
        d = "M " + " L ".join(f"{px(X)} {py(Y)}" for X, Y in coords)
        out.append(
            f'<path class="curve" d="{d}" fill="none" stroke="{color}" stroke-width="2"/>'
        )
        lx, ly = coords[-1]
        out.append(
            f'<text x="{px(lx)}" y="{py(ly)}" dx="4" dy="-4" fill="{color}">{poly.label}</text>'
        )
    # level band labels along the normal through the section points
    if family is not None:
        b1 = family.B[0]
        slope = family.normal[0]
        norm = math.hypot(1.0, slope)
        ux, uy = 1.0 / norm, slope / norm
        for level in range(1, family.r + 2):
            t = (level - 1.5) * family.h_step if level > 1 else -0.6 * family.h_step
            lx, ly = b1[0] + t * ux, b1[1] + t * uy
            if 0.0 < lx < x_max and 0.0 < ly < y_max:
                out.append(
                    f'<text class="level-label" x="{px(lx)}" y="{py(ly)}" '
                    f'text-anchor="middle" font-weight="bold" fill="#555555">L{level}</text>'
                )
    out.append(
        f'<text x="{fmt6(ml + plot_w / 2.0)}" y="{fmt6(height - 16.0)}" '
        'text-anchor="middle" fill="#000000">Probability class</text>'
    )
    out.append(
        f'<text x="18" y="{fmt6(mt + plot_h / 2.0)}" text-anchor="middle" '
        f'transform="rotate(-90 18 {fmt6(mt + plot_h / 2.0)})" '
        'fill="#000000">Impact class</text>'
    )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
