"""Quadrature rules for integrands with a power singularity at 0.

`singular_integral` integrates on geometrically shrinking pieces with Gauss-Legendre rules and
uses a Gauss-Jacobi rule, exact for the power weight, on the innermost piece. `CumulativeIntegral`
tabulates x ↦ ∫₀ˣ g once a known leading power of g is subtracted and integrated exactly.

Examples:
```python
import numpy as np
from cerbernetix.bernstein.sonine import singular_integral

# ∫₀¹ s^{-1/2} ds = 2
print(singular_integral(lambda s: s**-0.5, 1.0, -0.5)) # 2.0
```
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

import numpy as np
from scipy import interpolate, special

from cerbernetix.bernstein.core import Evaluator, as_float_array, restore_shape
from cerbernetix.bernstein.errors import DomainError

# The number of geometric pieces of a singular integral.
DEFAULT_LEVELS = 40

# The number of points of the Gauss rules of a singular integral.
DEFAULT_ORDER = 16

# The number of cells of a cumulative integral table, and the points per cell.
TABLE_CELLS = 256
TABLE_ORDER = 8


@lru_cache(maxsize=None)
def gauss_legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Gives the Gauss-Legendre points and weights on [-1, 1].

    Args:
        order (int): The number of points.

    Returns:
        tuple[np.ndarray, np.ndarray]: The points and the weights.
    """
    points, weights = special.roots_legendre(order)
    return points, weights


@lru_cache(maxsize=None)
def gauss_jacobi(order: int, power: float) -> tuple[np.ndarray, np.ndarray]:
    """Gives the Gauss-Jacobi points and weights on [-1, 1] for the weight (1 + t)^power.

    Args:
        order (int): The number of points.
        power (float): The exponent of the weight, above -1.

    Returns:
        tuple[np.ndarray, np.ndarray]: The points and the weights.
    """
    points, weights = special.roots_jacobi(order, 0.0, power)
    return points, weights


@lru_cache(maxsize=None)
def _unit_rule(power: float, levels: int, order: int) -> tuple[np.ndarray, np.ndarray]:
    # points and weights of ∫₀¹ g(u) du for g(u) ~ u^power at 0
    points, weights = gauss_legendre(order)
    edges = 2.0 ** -np.arange(levels + 1, dtype=float)
    half = (edges[:-1] - edges[1:]) / 2.0
    middle = (edges[:-1] + edges[1:]) / 2.0
    outer_points = (middle[:, None] + half[:, None] * points).ravel()
    outer_weights = (half[:, None] * weights).ravel()

    innermost = edges[-1]
    jacobi_points, jacobi_weights = gauss_jacobi(order, power)
    inner_points = innermost * (1.0 + jacobi_points) / 2.0
    inner_weights = (innermost / 2.0) ** (power + 1.0) * jacobi_weights / inner_points**power

    return (
        np.concatenate([outer_points, inner_points]),
        np.concatenate([outer_weights, inner_weights]),
    )


def singular_integral(
    func: Evaluator,
    widths: Any,
    power: float,
    levels: int = DEFAULT_LEVELS,
    order: int = DEFAULT_ORDER,
) -> float | np.ndarray:
    """Computes ∫₀ʷ g(s) ds for an integrand behaving like s^power near 0.

    The integrand is evaluated once on a 2D array whose rows match the widths, so it may depend on
    the row through broadcasting.

    Args:
        func (Evaluator): The integrand g, evaluated on an array of shape (len(widths), points).
        widths (Any): The upper bounds w, nonnegative.
        power (float): The exponent of the singularity, above -1.
        levels (int, optional): The number of geometric pieces. Defaults to 40.
        order (int, optional): The number of points per piece. Defaults to 16.

    Raises:
        DomainError: If the power is not above -1 or if a width is negative.

    Returns:
        float | np.ndarray: The integrals, 0 for null widths.

    Examples:
    ```python
    import numpy as np
    from cerbernetix.bernstein.sonine import singular_integral

    x = np.array([1.0, 2.0])
    # ∫₀^{x/2} t^{-1/2} (x - t)^{-1/2} dt = π/2
    print(singular_integral(lambda t: t**-0.5 * (x[:, None] - t) ** -0.5, x / 2, -0.5))
    ```
    """
    if not power > -1.0:
        raise DomainError(f"a singular integral needs a power above -1, got {power}")

    bounds, scalar = as_float_array(widths)
    flat = bounds.ravel()

    if np.any(~(flat >= 0.0)):
        raise DomainError("a singular integral needs nonnegative widths")

    safe = np.where(flat > 0.0, flat, 1.0)
    points, weights = _unit_rule(float(power), levels, order)

    values = np.asarray(func(safe[:, None] * points), dtype=float)
    result = np.where(flat > 0.0, safe * (values @ weights), 0.0)

    return restore_shape(result.reshape(bounds.shape), scalar)


@dataclass(frozen=True, eq=False)
class CumulativeIntegral:
    """The evaluator x ↦ ∫₀ˣ g(s) ds on [0, 2T], for g(s) ≈ coef s^power near 0.

    The leading term is integrated exactly. The remainder is integrated by Gauss-Legendre rules on
    the cells of a cubic graded table and interpolated by cubic splines.

    Attributes:
        func (Evaluator): The integrand g, vectorized.
        coef (float): The coefficient of the leading term.
        power (float): The power of the leading term, above -1.
        horizon (float): The horizon T; the table covers [0, 2T].
    """

    func: Evaluator
    coef: float
    power: float
    horizon: float
    _interpolant: Any = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if not self.power > -1.0:
            raise DomainError(f"the leading power must be above -1, got {self.power}")

        limit = 2.0 * self.horizon
        nodes = limit * (np.arange(TABLE_CELLS + 1) / TABLE_CELLS) ** 3
        points, weights = gauss_legendre(TABLE_ORDER)

        half = np.diff(nodes) / 2.0
        middle = (nodes[:-1] + nodes[1:]) / 2.0
        samples = middle[:, None] + half[:, None] * points

        remainder = np.asarray(self.func(samples), dtype=float) - self.coef * samples**self.power
        cumulative = np.concatenate([[0.0], np.cumsum(half * (remainder @ weights))])

        interpolant = interpolate.CubicSpline(nodes, cumulative, extrapolate=False)
        object.__setattr__(self, "_interpolant", interpolant)

    def __call__(self, x: Any) -> float | np.ndarray:
        points, scalar = as_float_array(x)

        if np.any(~(points >= 0.0)) or np.any(points > 2.0 * self.horizon):
            raise DomainError(f"a cumulative integral is only trusted on [0, {2 * self.horizon}]")

        exponent = self.power + 1.0
        values = self.coef * points**exponent / exponent + self._interpolant(points)
        return restore_shape(values, scalar)
