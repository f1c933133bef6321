"""Command line surface.

Subcommands:

    levels    classify every grid cell and emit the level table
    classify  classify a single probability-impact point
    curves    emit the curve family as CSV, JSON, or SVG
    measure   evaluate a statistical risk measure over a sample file
    inverse   project a point onto the base curve (foot + clearance)

Exit codes: 0 success, 2 validation error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from . import emit
from .config import FORMATS, load_config, load_sample
from .errors import DomainError, SolverError, ValidationError
from .levels import build_family, classify_report, emit_family_curves, level_table
from .inverse import solve_foot
from .curves import BaseCurve
from .measures import measure_report

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3


def _diag(message: str) -> None:
    prefix = "error:"
    if sys.stderr.isatty() and not os.environ.get("NO_COLOR"):
        prefix = "\x1b[31merror:\x1b[0m"
    print(f"{prefix} {message}", file=sys.stderr)


def _write(text: str, out_path: Optional[str]) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="riskcurves",
        description="Parallel risk curves: level tables, classification, and risk measures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_levels = sub.add_parser("levels", help="emit the level table for the whole grid")
    p_levels.add_argument("--config", help="JSON config file")
    p_levels.add_argument("--format", choices=("csv", "json"), help="output format")
    p_levels.add_argument("--out", help="output file (default: stdout)")

    p_classify = sub.add_parser("classify", help="classify one probability-impact point")
    p_classify.add_argument("--config", help="JSON config file")
    p_classify.add_argument("--p", type=float, required=True, help="probability coordinate")
    p_classify.add_argument("--i", type=float, required=True, help="impact coordinate")

    p_curves = sub.add_parser("curves", help="emit the sampled curve family")
    p_curves.add_argument("--config", help="JSON config file")
    p_curves.add_argument("--format", choices=FORMATS, help="output format")
    p_curves.add_argument("--density", type=int, help="samples per curve")
    p_curves.add_argument("--out", help="output file (default: stdout)")

    p_measure = sub.add_parser("measure", help="evaluate a risk measure over a sample file")
    p_measure.add_argument("--file", required=True, help="sample file: 'value [probability]' lines")
    p_measure.add_argument(
        "--measure",
        required=True,
        choices=("variance", "below", "above", "power", "semivar", "taguchi"),
    )
    p_measure.add_argument("--T", type=float, help="threshold / target")
    p_measure.add_argument("--p", type=int, help="hinge power (power measure)")
    p_measure.add_argument("--k", type=float, help="taguchi scale")
    p_measure.add_argument("--out", help="output file (default: stdout)")

    p_inverse = sub.add_parser("inverse", help="project a point onto the base curve")
    p_inverse.add_argument("--config", help="JSON config file")
    p_inverse.add_argument("--a", type=float, required=True, help="point abscissa")
    p_inverse.add_argument("--b", type=float, required=True, help="point ordinate")

    return parser


def _cmd_levels(args) -> int:
    cfg = load_config(args.config)
    fmt = args.format or ("json" if cfg.fmt == "json" else "csv")
    family = build_family(cfg.grid, cfg.r)
    table = level_table(family, cfg.grid, cfg.boundary_tol)
    if fmt == "csv":
        _write(emit.levels_to_csv(table), args.out)
    else:
        _write(emit.levels_to_json(table, family), args.out)
    return EXIT_OK


def _cmd_classify(args) -> int:
    cfg = load_config(args.config)
    family = build_family(cfg.grid, cfg.r)
    rep = classify_report(family, (args.p, args.i), cfg.boundary_tol)
    lo = family.R[rep.level - 2] if rep.level >= 2 else 0.0
    hi = emit.fmt6(family.R[rep.level - 1]) if rep.level <= family.r else "inf"
    print(
        f"level={rep.level} h_signed={emit.fmt6(rep.h_signed)} "
        f"boundary_distance={emit.fmt6(rep.boundary_distance)} "
        f"boundary_flag={int(rep.flagged)} "
        f"risk_bracket=[{emit.fmt6(lo)}, {hi}]"
    )
    return EXIT_OK


def _cmd_curves(args) -> int:
    cfg = load_config(args.config)
    fmt = args.format or cfg.fmt
    density = args.density if args.density is not None else cfg.density
    if density < 2:
        raise ValidationError(f"density must be at least 2, got {density}")
    family = build_family(cfg.grid, cfg.r)
    polylines = emit_family_curves(family, density)
    if fmt == "csv":
        _write(emit.curves_to_csv(polylines), args.out)
    elif fmt == "json":
        _write(emit.curves_to_json(polylines), args.out)
    else:
        _write(emit.curves_to_svg(polylines, cfg.grid, family), args.out)
    return EXIT_OK


def _cmd_measure(args) -> int:
    sample = load_sample(args.file)
    report = measure_report(sample, args.measure, T=args.T, p=args.p, k=args.k)
    _write(emit.measure_to_json(report), args.out)
    return EXIT_OK


def _cmd_inverse(args) -> int:
    cfg = load_config(args.config)
    curve = BaseCurve.hyperbola(cfg.grid.xs[-1] * cfg.grid.ys[0])
    foot = solve_foot(curve, args.a, args.b)
    roots = ", ".join(emit.fmt6(r) for r in foot.candidates)
    print(
        f"x_foot={emit.fmt6(foot.x_foot)} h_signed={emit.fmt6(foot.h_signed)} "
        f"residual={foot.residual:.6e} multiple_feet={int(foot.multiple_feet)} "
        f"roots=[{roots}]"
    )
    return EXIT_OK


_DISPATCH = {
    "levels": _cmd_levels,
    "classify": _cmd_classify,
    "curves": _cmd_curves,
    "measure": _cmd_measure,
    "inverse": _cmd_inverse,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (ValidationError, DomainError) as exc:
        _diag(str(exc))
        return EXIT_VALIDATION
    except SolverError as exc:
        _diag(str(exc))
        return EXIT_NUMERICAL
    except OSError as exc:
        _diag(str(exc))
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
