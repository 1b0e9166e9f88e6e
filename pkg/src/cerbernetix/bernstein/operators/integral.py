"""Bernstein-Riemann-Liouville integrals, the kernel operator and the censored integral.

`rl_integral` is the product integration of the piecewise linear φ against the potential density,
with the cell weights taken from K and ∫K. The kernel operator and the censored integral series
use the discrete integral that inverts the killing derivative exactly on the grid, so the censored
derivative of a censored integral gives back its data up to the truncation of the series.

Examples:
```python
from cerbernetix.bernstein.core import BernsteinSpec, Stable
from cerbernetix.bernstein.operators import GridFunction, censored_integral, graded_grid
from cerbernetix.bernstein.sonine import build_pair

pair = build_pair(BernsteinSpec(Stable(0.5)), 1.0)
ones = GridFunction.constant(graded_grid(1.0, 512, 2.0), 1.0)

# the mean lifetime K(x) / (1 - q)
print(censored_integral(pair, ones, 1e-8).solution.values[-1]) # close to 3.105230
```
"""
from __future__ import annotations

import logging
from typing import Any

import numpy as np

from cerbernetix.bernstein.core import as_float_array, restore_shape
from cerbernetix.bernstein.errors import DomainError, MissingBoundaryError, SeriesDivergenceError
from cerbernetix.bernstein.operators.grid import Grid, GridFunction
from cerbernetix.bernstein.operators.solution import SeriesSolution
from cerbernetix.bernstein.operators.weights import (
    DiscreteInverse,
    check_horizon,
    discrete_inverse,
    effective_contraction,
)
from cerbernetix.bernstein.sonine import SoninePair, contraction_constant

logger = logging.getLogger(__name__)

# The largest number of terms of the censored integral series.
MAX_TERMS = 10000

# The number of points evaluated at once by the pointwise integral.
POINTS_PER_BLOCK = 2048


def _check_integrand(pair: SoninePair, phi: GridFunction) -> None:
    if not phi.is_complete:
        raise DomainError("an integral needs a function defined at every node")
    if not phi.grid.has_origin:
        raise MissingBoundaryError("an integral needs a grid starting at x = 0")
    check_horizon(pair, phi.grid)


def _product_integral(pair: SoninePair, phi: GridFunction, points: np.ndarray) -> np.ndarray:
    # ∫₀ˣ φ(x - z) k(z) dz with φ linear on each cell [x_j, x_{j+1}] cut at x
    nodes = phi.grid.nodes
    slopes = np.diff(phi.values) / phi.grid.steps

    start = np.clip(points[:, None] - nodes[None, 1:], 0.0, None)
    stop = np.clip(points[:, None] - nodes[None, :-1], 0.0, None)

    kernel_start = pair.K(start)
    mass = pair.K(stop) - kernel_start
    moment = pair.K_integral(stop) - pair.K_integral(start) - (stop - start) * kernel_start

    return mass @ phi.values[:-1] + moment @ slopes


def rl_integral(pair: SoninePair, phi: GridFunction) -> GridFunction:
    """Computes the Bernstein-Riemann-Liouville integral x ↦ ∫₀ˣ φ(x - z) k(z) dz at the nodes.

    Each cell carries the exact mass K(b) - K(a) of the kernel and its first moment, obtained
    from ∫K, so the result is exact for piecewise linear φ.

    Args:
        pair (SoninePair): The Sonine pair.
        phi (GridFunction): The function, defined at every node of a grid starting at 0.

    Raises:
        DomainError: If φ is incomplete or if the grid exceeds the horizon.
        MissingBoundaryError: If the grid does not start at 0.

    Returns:
        GridFunction: The integral, 0 at x₀ = 0.

    Examples:
    ```python
    from cerbernetix.bernstein.core import BernsteinSpec, Stable
    from cerbernetix.bernstein.operators import GridFunction, graded_grid, rl_integral
    from cerbernetix.bernstein.sonine import build_pair

    pair = build_pair(BernsteinSpec(Stable(0.5)), 1.0)
    ones = GridFunction.constant(graded_grid(1.0, 32, 2.0), 1.0)
    print(rl_integral(pair, ones).values[-1]) # 1.1283791670955126 = K(1)
    ```
    """
    _check_integrand(pair, phi)
    values = _product_integral(pair, phi, phi.grid.nodes)
    values[0] = 0.0
    return phi.with_values(values)


def rl_integral_at(pair: SoninePair, phi: GridFunction, points: Any) -> float | np.ndarray:
    """Computes the Bernstein-Riemann-Liouville integral of φ at arbitrary points of [0, T].

    Args:
        pair (SoninePair): The Sonine pair.
        phi (GridFunction): The function, defined at every node of a grid starting at 0.
        points (Any): The points x.

    Raises:
        DomainError: If a point is out of [0, T], if φ is incomplete or if the grid exceeds the
        horizon.
        MissingBoundaryError: If the grid does not start at 0.

    Returns:
        float | np.ndarray: The integrals.
    """
    _check_integrand(pair, phi)
    values, scalar = as_float_array(points)
    flat = values.ravel()

    if np.any(~(flat >= 0.0)) or np.any(flat > phi.grid.horizon):
        raise DomainError(f"the integral is only evaluated on [0, {phi.grid.horizon}]")

    result = np.concatenate(
        [
            _product_integral(pair, phi, flat[first : first + POINTS_PER_BLOCK])
            for first in range(0, len(flat), POINTS_PER_BLOCK)
        ]
        or [np.zeros(0)]
    )
    return restore_shape(result.reshape(values.shape), scalar)


def apply_K(pair: SoninePair, phi: GridFunction) -> GridFunction:  # pylint: disable=invalid-name
    """Applies the kernel operator φ ↦ ∫₀ˣ μ̄(r) k(x - r) φ(r) dr, the integral of μ̄φ.

    The discrete operator maps constants to themselves exactly and keeps the value at 0.

    Args:
        pair (SoninePair): The Sonine pair.
        phi (GridFunction): The function, defined at every node of a grid starting at 0.

    Raises:
        DomainError: If φ is incomplete or if the grid exceeds the horizon.
        MissingBoundaryError: If the grid does not start at 0.

    Returns:
        GridFunction: The image of φ.
    """
    _check_integrand(pair, phi)
    return phi.with_values(discrete_inverse(pair, phi.grid).kernel(phi.values))


def censored_series(
    operators: DiscreteInverse, values: np.ndarray, tol: float, q: float
) -> tuple[np.ndarray, int, float]:
    """Sums the censored integral series Σᵢ K_hⁱ I_h g on the first nodes of a grid.

    The partial sums are certified by |K_hⁱ I_h g| ≤ sup|g| qⁱ K_h, and the residual of a partial
    sum of N + 1 terms is at most sup|g| q^{N+1}.

    Args:
        operators (DiscreteInverse): The discrete operators of the grid.
        values (np.ndarray): The data g at the first nodes of the grid, or at all of them.
        tol (float): The tolerance on the tail of the series, positive.
        q (float): The certified contraction constant, below 1.

    Raises:
        SeriesDivergenceError: If the series needs more than 10000 terms.

    Returns:
        tuple[np.ndarray, int, float]: The partial sum, the number of terms after the first one,
        and the bound on the neglected tail.
    """
    values = np.asarray(values, dtype=float)
    scale = float(np.max(np.abs(values[1:]), initial=0.0))
    potential = float(operators.potential[len(values) - 1])

    def bound(terms: int) -> float:
        return scale * q ** (terms + 1) * max(1.0, potential / (1.0 - q))

    term = operators.integral(values)
    total = term.copy()
    terms = 0

    while bound(terms) >= tol:
        if terms >= MAX_TERMS:
            raise SeriesDivergenceError(
                f"the censored integral needs more than {MAX_TERMS} terms at q = {q}"
            )
        terms += 1
        term = operators.kernel(term)
        total += term

    logger.debug("Censored integral: %d terms, tail bound %g, q = %g", terms, bound(terms), q)
    return total, terms, bound(terms)


def censored_integral(pair: SoninePair, g: GridFunction, tol: float) -> SeriesSolution:
    """Computes the censored integral Σᵢ Kⁱ[I g], the solution φ of D_c φ = g with φ(0) = 0.

    The series stops at the first N for which the bound sup|g| q^{N+1} max(1, K(T) / (1 - q)) is
    below the tolerance, where q is the larger of the contraction constants of the pair and of
    the discrete kernel operator. It bounds both the neglected tail and the residual.

    Args:
        pair (SoninePair): The Sonine pair.
        g (GridFunction): The data, defined at every node of a grid starting at 0.
        tol (float): The tolerance on the tail of the series.

    Raises:
        DomainError: If an argument is invalid.
        MissingBoundaryError: If the grid does not start at 0.
        CensoringConditionError: If q ≥ 1.
        SeriesDivergenceError: If the series needs more than 10000 terms.

    Returns:
        SeriesSolution: The partial sum, with residual sup|D_c φ - g| at the interior nodes.
    """
    _check_integrand(pair, g)
    if not tol > 0.0:
        raise DomainError(f"the tolerance must be positive, got {tol}")

    grid = g.grid
    q = effective_contraction(pair, grid, contraction_constant(pair, grid.horizon))
    operators = discrete_inverse(pair, grid)
    total, terms, tail_bound = censored_series(operators, g.values, tol, q)

    derivative = operators.weights.censored(total)
    residual = float(np.max(np.abs(derivative[1:] - g.values[1:])))

    return SeriesSolution(g.with_values(total), terms, tail_bound, residual, q)


def expected_censoring_time(pair: SoninePair, grid: Grid, x: float, n: int) -> float:
    """Computes Kⁿ K(x), the mean of the (n+1)-th waiting time of the censored process from x.

    Args:
        pair (SoninePair): The Sonine pair.
        grid (Grid): The grid of the computation, starting at 0.
        x (float): The starting position, in [0, T].
        n (int): The number of applications of the kernel operator, nonnegative.

    Raises:
        DomainError: If an argument is out of range.

    Returns:
        float: The expected waiting time.
    """
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise DomainError(f"the number of applications must be a nonnegative integer, got {n}")

    potential = GridFunction.from_function(grid, pair.K)
    _check_integrand(pair, potential)

    operators = discrete_inverse(pair, grid)
    values = potential.values
    for _ in range(int(n)):
        values = operators.kernel(values)

    return float(potential.with_values(values).interpolate(x))
