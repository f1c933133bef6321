"""Run configuration and input-file parsing for the command line tool.

The config file is a single JSON document:

    {
      "grid": {"xs": [1, ..., 9], "ys": [1, ..., 7],
               "labels": {"x": [...], "y": [...]}},
      "r": 6,
      "density": 200,
      "format": "csv",
      "boundary_tol": 0.02
    }

Every key is optional; defaults reproduce the stock 9 x 7 grid with six
curves.  Sample files are plain text, one record per line as
``value [probability]``, with ``#`` starting a comment.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

from .errors import ValidationError
from .levels import DEFAULT_BOUNDARY_TOL, ClassGrid, default_grid
from .measures import Sample

FORMATS = ("csv", "json", "svg")


@dataclass(frozen=True)
class RunConfig:
    grid: ClassGrid
    r: int = 6
    density: int = 200
    fmt: str = "csv"
    boundary_tol: float = DEFAULT_BOUNDARY_TOL

    def __post_init__(self):
        if self.r < 1:
            raise ValidationError(f"r must be at least 1, got {self.r!r}")
        if self.density < 2:
            raise ValidationError(f"density must be at least 2, got {self.density!r}")
        if self.fmt not in FORMATS:
            raise ValidationError(f"format must be one of {FORMATS}, got {self.fmt!r}")
        if not (0.0 <= self.boundary_tol < 0.5):
            raise ValidationError(f"boundary_tol must be in [0, 0.5), got {self.boundary_tol!r}")


def default_config() -> RunConfig:
    return RunConfig(grid=default_grid())


def _grid_from_dict(raw: dict) -> ClassGrid:
    if not isinstance(raw, dict):
        raise ValidationError(f"grid must be an object, got {type(raw).__name__}")
    unknown = set(raw) - {"xs", "ys", "labels"}
    if unknown:
        raise ValidationError(f"unknown grid key(s): {', '.join(sorted(unknown))}")
    base = default_grid()
    xs = raw.get("xs")
    ys = raw.get("ys")
    labels = raw.get("labels") or {}
    if not isinstance(labels, dict) or set(labels) - {"x", "y"}:
        raise ValidationError("grid.labels must be an object with keys 'x' and/or 'y'")

    def axis(name, coords, fallback):
        if coords is None:
            return fallback
        if not isinstance(coords, list) or not all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in coords
        ):
            raise ValidationError(f"grid.{name} must be a list of numbers")
        return tuple(float(v) for v in coords)

    def label_list(name):
        vals = labels.get(name)
        if vals is None:
            return None
        if not isinstance(vals, list) or not all(isinstance(v, str) for v in vals):
            raise ValidationError(f"grid.labels.{name} must be a list of strings")
        return tuple(vals)

    new_xs = axis("xs", xs, base.xs)
    new_ys = axis("ys", ys, base.ys)
    x_labels = label_list("x")
    y_labels = label_list("y")
    if x_labels is None and xs is None:
        x_labels = base.x_labels
    if y_labels is None and ys is None:
        y_labels = base.y_labels
    return ClassGrid(xs=new_xs, ys=new_ys, x_labels=x_labels, y_labels=y_labels)


def load_config(path: Optional[str]) -> RunConfig:
    """Read a config file, or return the defaults when no path is given."""
    if path is None:
        return default_config()
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read config {path!r}: {exc}") from exc
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"config {path!r} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ValidationError("config root must be a JSON object")
    unknown = set(raw) - {"grid", "r", "density", "format", "boundary_tol"}
    if unknown:
        raise ValidationError(f"unknown config key(s): {', '.join(sorted(unknown))}")
    cfg = default_config()
    if "grid" in raw:
        cfg = replace(cfg, grid=_grid_from_dict(raw["grid"]))
    for key, attr, types in (
        ("r", "r", int),
        ("density", "density", int),
        ("format", "fmt", str),
        ("boundary_tol", "boundary_tol", (int, float)),
    ):
        if key in raw:
            val = raw[key]
            if not isinstance(val, types) or isinstance(val, bool):
                raise ValidationError(f"config {key!r} has the wrong type: {val!r}")
            cfg = replace(cfg, **{attr: float(val) if key == "boundary_tol" else val})
    return cfg


def parse_sample_text(text: str, source: str = "<sample>") -> Sample:
    """Parse sample records from text; see the module docstring for the format."""
    values: list[float] = []
    probs: list[float] = []
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) > 2:
            raise ValidationError(
                f"{source} line {lineno}: expected 'value [probability]', got {len(fields)} fields"
            )
        try:
            values.append(float(fields[0]))
        except ValueError:
            raise ValidationError(
                f"{source} line {lineno}: {fields[0]!r} is not a number"
            ) from None
        if len(fields) == 2:
            try:
                probs.append(float(fields[1]))
            except ValueError:
                raise ValidationError(
                    f"{source} line {lineno}: probability {fields[1]!r} is not a number"
                ) from None
        elif probs:
            raise ValidationError(
                f"{source} line {lineno}: probability column started earlier but is missing here"
            )
    if probs and len(probs) != len(values):
        raise ValidationError(f"{source}: probability column is incomplete")
    return Sample(values=tuple(values), probabilities=tuple(probs) if probs else None)


def load_sample(path: str) -> Sample:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read sample file {path!r}: {exc}") from exc
    return parse_sample_text(text, source=path)
