"""Convolutions of Sonine pairs, the Sonine identity and the contraction constant.

Examples:
```python
from cerbernetix.bernstein.core import BernsteinSpec, Stable
from cerbernetix.bernstein.sonine import build_pair, contraction_constant, sonine_residual

pair = build_pair(BernsteinSpec(Stable(0.5)), 1.0)

print(contraction_constant(pair, 1.0))              # 0.6366197723675814 = 2/π
print(sonine_residual(pair, [0.25, 0.5, 1.0]) < 1e-8) # True
```
"""
from __future__ import annotations

import logging
from functools import lru_cache
from typing import Any

import numpy as np

from cerbernetix.bernstein.core import as_float_array, restore_shape
from cerbernetix.bernstein.errors import CensoringConditionError, DomainError
from cerbernetix.bernstein.sonine.pair import SoninePair
from cerbernetix.bernstein.sonine.quadrature import singular_integral

logger = logging.getLogger(__name__)

# The graded grid on which the contraction constant is sampled.
CONTRACTION_POINTS = 512

# The refinement toward 0 of the contraction constant.
REFINEMENT_STEPS = 60
REFINEMENT_TOLERANCE = 1e-10


def convolution(pair: SoninePair, x: Any) -> float | np.ndarray:
    """Evaluates the convolution (μ̄ ∗ k)(x) = ∫₀ˣ μ̄(x - t) k(t) dt.

    The integral is split at x/2 so that each half carries a single endpoint singularity.

    Args:
        pair (SoninePair): The Sonine pair.
        x (Any): The points, in (0, 2T].

    Raises:
        DomainError: If a point is outside (0, 2T].

    Returns:
        float | np.ndarray: The convolution, close to 1.
    """
    points, scalar = as_float_array(x)
    flat = points.ravel()

    if np.any(~(flat > 0.0)) or np.any(flat > 2.0 * pair.horizon):
        raise DomainError(f"a convolution is only evaluated on (0, {2 * pair.horizon}]")

    beta = pair.exponent
    column = flat[:, None]
    near_kernel = singular_integral(
        lambda t: pair.k(t) * pair.mu_bar(column - t), flat / 2.0, beta - 1.0
    )
    near_tail = singular_integral(lambda s: pair.mu_bar(s) * pair.k(column - s), flat / 2.0, -beta)

    return restore_shape((near_kernel + near_tail).reshape(points.shape), scalar)


def sonine_residual(pair: SoninePair, grid: Any) -> float:
    """Measures the Sonine identity max |(μ̄ ∗ k)(x) - 1| over a set of points.

    Args:
        pair (SoninePair): The Sonine pair.
        grid (Any): The points, in (0, T].

    Raises:
        DomainError: If a point is outside (0, T].

    Returns:
        float: The largest deviation from 1.
    """
    points = np.asarray(grid, dtype=float)

    if np.any(points > pair.horizon):
        raise DomainError(f"the Sonine residual is only measured on (0, {pair.horizon}]")

    residual = float(np.max(np.abs(convolution(pair, points) - 1.0)))
    logger.debug("Sonine residual %g over %d points", residual, points.size)
    return residual


def transition_cdf(pair: SoninePair, y: float, v: Any) -> float | np.ndarray:
    """Evaluates the law of the position just before the first jump across 0, started at y.

    The position r has the density μ̄(r) k(y - r) on (0, y). The result is normalized by the
    numerical total mass so that the distribution function reaches exactly 1 at y.

    Args:
        pair (SoninePair): The Sonine pair.
        y (float): The starting position, in (0, 2T].
        v (Any): The points in [0, y] where the distribution function is evaluated.

    Raises:
        DomainError: If y or a point is out of range.

    Returns:
        float | np.ndarray: The probabilities P(r ≤ v).
    """
    y = float(y)
    if not 0.0 < y <= 2.0 * pair.horizon:
        raise DomainError(f"the starting position must lie in (0, {2 * pair.horizon}], got {y}")

    points, scalar = as_float_array(v)
    flat = points.ravel()
    if np.any(~(flat >= 0.0)) or np.any(flat > y):
        raise DomainError(f"the undershoot points must lie in [0, {y}]")

    beta = pair.exponent
    half = y / 2.0

    def near_start(widths):
        return singular_integral(lambda r: pair.mu_bar(r) * pair.k(y - r), widths, -beta)

    def near_end(widths):
        return singular_integral(lambda s: pair.k(s) * pair.mu_bar(y - s), widths, beta - 1.0)

    start_half = near_start(half)
    end_half = near_end(half)
    total = start_half + end_half

    low = near_start(np.minimum(flat, half))
    high = start_half + end_half - near_end(y - np.maximum(flat, half))
    values = np.where(flat <= half, low, high) / total

    return restore_shape(values.reshape(points.shape), scalar)


@lru_cache(maxsize=64)
def _contraction(pair: SoninePair, horizon: float) -> float:
    grid = horizon * (np.arange(1, CONTRACTION_POINTS + 1) / CONTRACTION_POINTS) ** 2
    q = float(np.max(pair.mu_bar(grid) * pair.K(grid)))

    previous = None
    for step in range(1, REFINEMENT_STEPS + 1):
        x = horizon * 2.0**-step
        value = float(pair.mu_bar(x) * pair.K(x))
        q = max(q, value)
        if previous is not None and abs(value - previous) < REFINEMENT_TOLERANCE:
            break
        previous = value

    return q


def contraction_constant(pair: SoninePair, horizon: float = None) -> float:
    """Computes q = sup μ̄(x) K(x) over (0, T].

    The supremum is sampled on a quadratic graded grid, then refined toward 0 on x = T 2^{-j} until
    successive values agree.

    Args:
        pair (SoninePair): The Sonine pair.
        horizon (float, optional): The horizon T, at most twice the horizon of the pair. Defaults to
        the horizon of the pair.

    Raises:
        DomainError: If the horizon is out of range.
        CensoringConditionError: If q ≥ 1.

    Returns:
        float: The contraction constant.

    Examples:
    ```python
    from cerbernetix.bernstein.core import BernsteinSpec, Stable
    from cerbernetix.bernstein.sonine import build_pair, contraction_constant

    pair = build_pair(BernsteinSpec(Stable(0.9)), 1.0)
    print(contraction_constant(pair)) # 0.10929...
    ```
    """
    horizon = pair.horizon if horizon is None else float(horizon)

    if not 0.0 < horizon <= 2.0 * pair.horizon:
        raise DomainError(f"the horizon must lie in (0, {2 * pair.horizon}], got {horizon}")

    q = _contraction(pair, horizon)
    if q >= 1.0:
        raise CensoringConditionError(f"the contraction constant {q} is not below 1")

    return q
