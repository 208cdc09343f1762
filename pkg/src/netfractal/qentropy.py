"""Box-occupation probabilities and q-parameterized entropies.

Tsallis entropy S_q = (1 - sum_i p_i^q) / (q - 1) generalizes Shannon
entropy, which it recovers in the q -> 1 limit. The Boltzmann constant is
fixed to 1 throughout, the information-theoretic convention, so values are
in natural-log units.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .boxcover import BoxCovering

#: Below this distance from q = 1 the exact Shannon branch is used; the
#: generic expression has a removable singularity there.
Q_ONE_EPS = 1e-9

_SUM_TOL = 1e-12


def as_probabilities(p: "Sequence[float] | np.ndarray") -> np.ndarray:
    """Validate and return a probability vector as a float array.

    Every entry must be positive (boxes are never empty) and the total must
    be 1 within 1e-12.
    """
    arr = np.asarray(p, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("probability vector must be a non-empty 1-d sequence")
    if not np.all(arr > 0.0):
        raise ValueError("probabilities must all be positive")
    total = float(arr.sum())
    if abs(total - 1.0) > _SUM_TOL:
        raise ValueError(f"probabilities sum to {total!r}, not 1")
    return arr


def box_probabilities(covering: BoxCovering, n: int) -> np.ndarray:
    """Occupation probability of each box: box size over total node count."""
    sizes = [len(box) for box in covering.boxes]
    if sum(sizes) != n:
        raise ValueError(
            f"covering holds {sum(sizes)} nodes but n = {n} was given"
        )
    return np.array(sizes, dtype=float) / float(n)


def q_log(x: float, q: float) -> float:
    """Deformed logarithm ln_q(x) = (x^(1-q) - 1) / (1 - q); ln at q = 1."""
    if x <= 0.0:
        raise ValueError("q_log requires x > 0")
    if abs(q - 1.0) < Q_ONE_EPS:
        return math.log(x)
    with np.errstate(over="ignore"):
        power = float(np.float64(x) ** np.float64(1.0 - q))
    return (power - 1.0) / (1.0 - q)


def _shannon(arr: np.ndarray) -> float:
    # + 0.0 normalizes the -0.0 that -sum yields for a certain outcome
    return float(-np.sum(arr * np.log(arr))) + 0.0


def shannon_entropy(p: "Sequence[float] | np.ndarray") -> float:
    """Shannon entropy -sum p_i ln p_i in natural-log units."""
    return _shannon(as_probabilities(p))


def tsallis_entropy(p: "Sequence[float] | np.ndarray", q: float) -> float:
    """Tsallis entropy (1 - sum p_i^q) / (q - 1), Shannon exactly at q = 1.

    Powers are evaluated as exp(q ln p), stable for any real q because every
    p_i is strictly positive.
    """
    arr = as_probabilities(p)
    if abs(q - 1.0) < Q_ONE_EPS:
        return _shannon(arr)
    with np.errstate(over="ignore"):
        powers = np.exp(q * np.log(arr))
        return float((1.0 - powers.sum()) / (q - 1.0))


def information_volume(p: "Sequence[float] | np.ndarray", q: float) -> float:
    """Information volume of a covering; numerically the Tsallis entropy
    with the constant fixed to 1, provided under its reporting name."""
    return tsallis_entropy(p, q)
