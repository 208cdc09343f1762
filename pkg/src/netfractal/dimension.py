"""Dimension estimates from covering profiles via log-scale regression.

Two readings of the q-parameterized dimension are exposed: ``slope`` mode
fits entropy against ln(l_B) and negates the slope (entropy falls as boxes
grow, so dimensions come out positive); ``pointwise`` mode evaluates the
per-size ratio S_q(l) / ln(l) directly, which is undefined at l_B = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .boxcover import BoxCovering, CoveringProfile
from .qentropy import box_probabilities, tsallis_entropy


class FitError(ValueError):
    """Not enough usable points, degenerate abscissas, or a mode/range
    combination that the estimator cannot evaluate."""


@dataclass(frozen=True)
class ProfilePoint:
    """One covering reduced to the quantities a fit consumes."""

    l_B: int
    ln_l: float
    n_boxes: int
    entropy: float


@dataclass(frozen=True)
class DimensionEstimate:
    """A fitted dimension. ``q`` is None for the box-counting dimension.

    In slope mode ``dimension`` equals ``-slope`` and ``r_squared`` is set
    only when at least three points supported the fit. In pointwise mode the
    per-size ratios are kept in ``pointwise_values`` and ``dimension`` is
    their mean.
    """

    q: float | None
    dimension: float
    slope: float | None
    intercept: float | None
    r_squared: float | None
    fit_l_range: tuple[int, int]
    mode: str
    pointwise_values: tuple[tuple[int, float], ...] | None = None


def fit_slope(points: Iterable[tuple[float, float]]) -> tuple[float, float, float]:
    """Ordinary least squares line through (x, y) points.

    Returns (slope, intercept, r_squared) with r_squared = 1 - SS_res/SS_tot,
    defined as 1 when SS_tot is zero (constant data fits its own line).
    """
    pts = list(points)
    if len(pts) < 2:
        raise FitError(f"need at least 2 points to fit a slope, got {len(pts)}")
    x = np.array([p[0] for p in pts], dtype=float)
    y = np.array([p[1] for p in pts], dtype=float)
    dx = x - x.mean()
    dy = y - y.mean()
    denom = float(dx @ dx)
    if denom == 0.0:
        raise FitError("all x values equal; slope is undefined")
    slope = float(dx @ dy) / denom
    intercept = float(y.mean() - slope * x.mean())
    ss_res = float(np.sum((y - slope * x - intercept) ** 2))
    ss_tot = float(dy @ dy)
    r_squared = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return slope, intercept, r_squared


def _select(
    profile: CoveringProfile, l_range: tuple[int, int] | None
) -> list[BoxCovering]:
    if l_range is None:
        return list(profile.coverings)
    lo, hi = l_range
    return [c for c in profile.coverings if lo <= c.l_B <= hi]


def _entropy_points(coverings: Sequence[BoxCovering], n: int, q: float) -> list[ProfilePoint]:
    points = []
    for covering in coverings:
        p = box_probabilities(covering, n)
        points.append(
            ProfilePoint(
                l_B=covering.l_B,
                ln_l=math.log(covering.l_B),
                n_boxes=covering.n_boxes,
                entropy=tsallis_entropy(p, q),
            )
        )
    return points


def box_counting_dimension(
    profile: CoveringProfile, l_range: tuple[int, int] | None = None
) -> DimensionEstimate:
    """Negative slope of ln(box count) against ln(box size)."""
    coverings = _select(profile, l_range)
    if len(coverings) < 2:
        raise FitError("box-counting fit needs at least 2 box sizes in range")
    pts = [(math.log(c.l_B), math.log(c.n_boxes)) for c in coverings]
    slope, intercept, r_squared = fit_slope(pts)
    return DimensionEstimate(
        q=None,
        dimension=-slope,
        slope=slope,
        intercept=intercept,
        r_squared=r_squared if len(pts) >= 3 else None,
        fit_l_range=(coverings[0].l_B, coverings[-1].l_B),
        mode="slope",
    )


def tsallis_dimension(
    profile: CoveringProfile,
    q: float,
    mode: str = "slope",
    l_range: tuple[int, int] | None = None,
) -> DimensionEstimate:
    """q-parameterized information dimension of a covering profile.

    ``slope`` mode regresses S_q against ln(l_B) over the selected sizes and
    negates the slope. ``pointwise`` mode evaluates S_q(l)/ln(l) per size and
    averages; it cannot include l_B = 1, so when no range is given the sizes
    are restricted to l_B >= 2, and an explicit range containing 1 is an
    error.
    """
    if mode not in ("slope", "pointwise"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "pointwise":
        if l_range is not None and l_range[0] < 2:
            raise FitError("pointwise mode cannot include l_B = 1 (ln 1 = 0)")
        if l_range is None:
            top = profile.coverings[-1].l_B if profile.coverings else 1
            l_range = (2, top)
    coverings = _select(profile, l_range)
    if mode == "slope":
        if len(coverings) < 2:
            raise FitError("slope fit needs at least 2 box sizes in range")
        points = _entropy_points(coverings, profile.n, q)
        slope, intercept, r_squared = fit_slope(
            [(p.ln_l, p.entropy) for p in points]
        )
        return DimensionEstimate(
            q=q,
            dimension=-slope,
            slope=slope,
            intercept=intercept,
            r_squared=r_squared if len(points) >= 3 else None,
            fit_l_range=(coverings[0].l_B, coverings[-1].l_B),
            mode="slope",
        )
    if not coverings:
        raise FitError("pointwise mode has no box sizes >= 2 in range")
    points = _entropy_points(coverings, profile.n, q)
    ratios = tuple((p.l_B, p.entropy / p.ln_l) for p in points)
    return DimensionEstimate(
        q=q,
        dimension=float(np.mean([r for _, r in ratios])),
        slope=None,
        intercept=None,
        r_squared=None,
        fit_l_range=(coverings[0].l_B, coverings[-1].l_B),
        mode="pointwise",
        pointwise_values=ratios,
    )


def information_dimension(
    profile: CoveringProfile, l_range: tuple[int, int] | None = None
) -> DimensionEstimate:
    """Classical information dimension: the q = 1 slope-mode estimate."""
    return tsallis_dimension(profile, 1.0, "slope", l_range)


def q_sweep(
    profile: CoveringProfile,
    q_list: Sequence[float],
    mode: str = "slope",
    l_range: tuple[int, int] | None = None,
) -> list[DimensionEstimate]:
    """One estimate per q over a single, shared covering profile."""
    if len(q_list) == 0:
        raise ValueError("q_list must not be empty")
    return [tsallis_dimension(profile, q, mode, l_range) for q in q_list]
