"""The law of the lifetime τ∞ of the censored process.

𝔼ˣ e^{-λτ∞} = Σₙ (-λ)ⁿ I_cⁿ 1(x) and 𝔼ˣ τ∞ⁿ = n! I_cⁿ 1(x). The censored operators are causal,
so both are computed on the nodes up to x only.

Examples:
```python
from cerbernetix.bernstein.core import BernsteinSpec, Stable
from cerbernetix.bernstein.operators import graded_grid
from cerbernetix.bernstein.solvers import lifetime_laplace, lifetime_moments
from cerbernetix.bernstein.sonine import build_pair

pair = build_pair(BernsteinSpec(Stable(0.5)), 1.0)
grid = graded_grid(1.0, 256, 2.0)

print(lifetime_moments(pair, grid, 1.0, [1])) # close to [3.105230]
print(lifetime_laplace(pair, grid, 1.0, 1.0)) # in (0, 1)
```
"""
from __future__ import annotations

import logging
import math
from typing import Iterable

import numpy as np

from cerbernetix.bernstein.errors import DomainError, NumericsError
from cerbernetix.bernstein.operators import Grid
from cerbernetix.bernstein.solvers.resolvent import resolvent_series
from cerbernetix.bernstein.solvers.system import censored_system, check_tolerance
from cerbernetix.bernstein.sonine import SoninePair

logger = logging.getLogger(__name__)

# Certified values are clamped into [0, 1] within this many tolerances of the boundary.
CLAMP_TOLERANCES = 10.0


def _clamp(value: float, tol: float) -> float:
    band = CLAMP_TOLERANCES * tol
    if -band <= value < 0.0 or 1.0 < value <= 1.0 + band:
        clamped = min(max(value, 0.0), 1.0)
        logger.warning("Clamped the lifetime transform %r to %r", value, clamped)
        return clamped
    if not 0.0 <= value <= 1.0:
        raise NumericsError(f"the lifetime transform {value} lies outside [0, 1]")
    return value


def lifetime_laplace(
    pair: SoninePair, grid: Grid, x: float, lam: float, tol: float = 1e-8
) -> float:
    """Computes the Laplace transform 𝔼ˣ e^{-λτ∞} of the lifetime.

    The alternating series is certified like the resolvent series, then clamped into [0, 1] when
    it lies within 10 tolerances of the boundary.

    Args:
        pair (SoninePair): The Sonine pair.
        grid (Grid): The grid of the computation, starting at 0.
        x (float): The starting position, a node of the grid.
        lam (float): The point λ ≥ 0.
        tol (float, optional): The tolerance of the series. Defaults to 1e-8.

    Raises:
        DomainError: If an argument is invalid.
        NumericsError: If the value lies outside [0, 1] beyond the tolerance.

    Returns:
        float: The transform, in [0, 1].
    """
    lam = float(lam)
    tol = check_tolerance(tol)
    if not 0.0 <= lam < math.inf:
        raise DomainError(f"the transform is evaluated at λ ≥ 0, got {lam}")

    system = censored_system(pair, grid)
    index = grid.index(x)
    if lam == 0.0 or index == 0:
        return 1.0

    total, terms, _ = resolvent_series(system, np.ones(index + 1), -lam, tol)
    value = _clamp(float(total[-1]), tol)

    logger.debug("Lifetime transform at λ = %g from x = %g: %r (%d terms)", lam, x, value, terms)
    return value


def lifetime_moments(
    pair: SoninePair, grid: Grid, x: float, orders: Iterable[int], tol: float = 1e-10
) -> np.ndarray:
    """Computes the moments 𝔼ˣ τ∞ⁿ = n! I_cⁿ 1(x) of the lifetime.

    Args:
        pair (SoninePair): The Sonine pair.
        grid (Grid): The grid of the computation, starting at 0.
        x (float): The starting position, a node of the grid.
        orders (Iterable[int]): The orders n, nonnegative integers.
        tol (float, optional): The tolerance of each censored integral. Defaults to 1e-10.

    Raises:
        DomainError: If an argument is invalid.

    Returns:
        np.ndarray: The moments, in the order of the requested orders.
    """
    tol = check_tolerance(tol)
    orders = list(orders)
    for order in orders:
        if isinstance(order, bool) or int(order) != order or order < 0:
            raise DomainError(f"the orders must be nonnegative integers, got {order}")

    system = censored_system(pair, grid)
    index = grid.index(x)
    if index == 0:
        return np.array([1.0 if n == 0 else 0.0 for n in orders])

    iterates = [np.ones(index + 1)]
    for _ in range(int(max(orders, default=0))):
        iterates.append(system.integral(iterates[-1], tol))

    return np.array([math.factorial(int(n)) * iterates[int(n)][-1] for n in orders])
