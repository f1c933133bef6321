"""Statistical risk measures over a discrete random variable.

Alongside the geometric classification, risk can be scored as a property
of a discrete sample X = (x_1..x_n; p_1..p_n).  Implemented measures:

- variance (probability-weighted, plus the unbiased n-1 estimator),
- one-sided threshold measures E[((T - X)+)**2] and E[((X - T)+)**2],
- their power generalisation E[((T - X)+)**p],
- semi-variance E[((m - X)+)**2], penalising only below-mean outcomes,
- the Taguchi loss k * (Var(X) + (m - T)**2) around a target T.

``(x)+`` is the hinge max(0, x).  The one-sided forms take the expectation
of the squared (or p-th power) hinge, matching the estimator that squares
inside the sum.  Probabilities are optional; estimator forms never use
them, so a bare value list is enough for estimator-based scoring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import DomainError, ValidationError

_PROB_SUM_TOL = 1e-9


@dataclass(frozen=True)
class Sample:
    """A discrete random variable: values plus optional probabilities.

    Without probabilities every value carries weight 1/n.
    """

    values: tuple[float, ...]
    probabilities: Optional[tuple[float, ...]] = None

    def __post_init__(self):
        if len(self.values) < 2:
            raise ValidationError(f"a sample needs at least 2 values, got {len(self.values)}")
        if any(not math.isfinite(v) for v in self.values):
            raise ValidationError("sample values must be finite")
        if self.probabilities is not None:
            if len(self.probabilities) != len(self.values):
                raise ValidationError(
                    f"{len(self.values)} values but {len(self.probabilities)} probabilities"
                )
            if any(not (math.isfinite(p) and p >= 0.0) for p in self.probabilities):
                raise ValidationError("probabilities must be non-negative reals")
            total = math.fsum(self.probabilities)
            if abs(total - 1.0) > _PROB_SUM_TOL:
                raise ValidationError(f"probabilities sum to {total!r}, expected 1")

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def weights(self) -> tuple[float, ...]:
        if self.probabilities is not None:
            return self.probabilities
        return tuple(1.0 / self.n for _ in self.values)


class TwoForms(NamedTuple):
    """A measure computed both ways: probability-weighted and estimator."""

    weighted: float
    estimator: float


def mean(s: Sample) -> float:
    """Probability-weighted mean; identical to the plain average when the
    sample carries no probabilities."""
    if s.probabilities is None:
        return mean_estimate(s)
    return math.fsum(w * v for w, v in zip(s.weights, s.values))


def mean_estimate(s: Sample) -> float:
    """Plain average of the values, ignoring probabilities."""
    return math.fsum(s.values) / s.n


def variance_measure(s: Sample) -> TwoForms:
    """Dispersion of the sample: weighted variance and unbiased estimator."""
    m = mean(s)
    weighted = math.fsum(w * (v - m) ** 2 for w, v in zip(s.weights, s.values))
    xbar = mean_estimate(s)
    est = math.fsum((xbar - v) ** 2 for v in s.values) / (s.n - 1)
    return TwoForms(weighted, est)


def threshold_below(s: Sample, T: float) -> float:
    """Expected squared shortfall below threshold T; values above T drop out."""
    return math.fsum(w * max(0.0, T - v) ** 2 for w, v in zip(s.weights, s.values))


def threshold_above(s: Sample, T: float) -> float:
    """Expected squared excess above threshold T; values below T drop out."""
    return math.fsum(w * max(0.0, v - T) ** 2 for w, v in zip(s.weights, s.values))


def power_measure(s: Sample, T: float, p: int) -> float:
    """Expected p-th power of the shortfall hinge (T - X)+, p >= 1."""
    if not isinstance(p, int) or p < 1:
        raise DomainError(f"power must be a positive integer, got {p!r}")
    return math.fsum(w * max(0.0, T - v) ** p for w, v in zip(s.weights, s.values))


def semivariance(s: Sample) -> TwoForms:
    """Below-mean dispersion: weighted semi-variance and its estimator.

    Only values under the mean contribute; the estimator divides the sum
    of squared below-mean deviations from the plain average by n - 1.
    """
    m = mean(s)
    weighted = math.fsum(w * max(0.0, m - v) ** 2 for w, v in zip(s.weights, s.values))
    xbar = mean_estimate(s)
    est = math.fsum(max(0.0, xbar - v) ** 2 for v in s.values) / (s.n - 1)
    return TwoForms(weighted, est)


def taguchi(s: Sample, T: float, k: float) -> TwoForms:
    """Variance-plus-bias loss around a target T, scaled by k > 0."""
    if not (math.isfinite(k) and k > 0.0):
        raise DomainError(f"taguchi scale must be positive, got {k!r}")
    var = variance_measure(s)
    weighted = k * (var.weighted + (mean(s) - T) ** 2)
    est = k * (var.estimator + (mean_estimate(s) - T) ** 2)
    return TwoForms(weighted, est)


@dataclass(frozen=True)
class MeasureReport:
    """One measure evaluation plus the sample moments behind it.

    ``value`` is the probability-weighted form; ``estimator`` is the
    matching estimator form where one exists (variance, semivar, taguchi)
    and None for the one-sided threshold and power measures.
    """

    measure: str
    params: dict
    value: float
    estimator: Optional[float]
    mean: float
    mean_estimate: float
    variance: float
    variance_estimate: float


def measure_report(
    s: Sample,
    measure: str,
    T: Optional[float] = None,
    p: Optional[int] = None,
    k: Optional[float] = None,
) -> MeasureReport:
    """Evaluate a named measure and bundle it with the sample moments.

    Measure names: variance, below, above, power, semivar, taguchi.
    ``below``/``above``/``power`` need T (power also p); taguchi needs
    T and k.
    """
    var = variance_measure(s)
    params: dict = {}
    estimator: Optional[float] = None
    if measure == "variance":
        value, estimator = var
    elif measure == "below":
        _require(measure, T=T)
        params = {"T": T}
        value = threshold_below(s, T)
    elif measure == "above":
        _require(measure, T=T)
        params = {"T": T}
        value = threshold_above(s, T)
    elif measure == "power":
        _require(measure, T=T, p=p)
        params = {"T": T, "p": p}
        value = power_measure(s, T, p)
    elif measure == "semivar":
        value, estimator = semivariance(s)
    elif measure == "taguchi":
        _require(measure, T=T, k=k)
        params = {"T": T, "k": k}
        value, estimator = taguchi(s, T, k)
    else:
        raise ValidationError(f"unknown measure {measure!r}")
    return MeasureReport(
        measure=measure,
        params=params,
        value=value,
        estimator=estimator,
        mean=mean(s),
        mean_estimate=mean_estimate(s),
        variance=var.weighted,
        variance_estimate=var.estimator,
    )


def _require(measure: str, **named) -> None:
    missing = [name for name, val in named.items() if val is None]
    if missing:
        raise ValidationError(
            f"measure {measure!r} requires parameter(s): {', '.join(missing)}"
        )
