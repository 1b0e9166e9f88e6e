"""Forward Laplace transforms of grid functions and of evaluators.

Grid functions are integrated exactly as piecewise linear functions on [0, T]; nothing is
extrapolated beyond T. Evaluators are integrated on (0, ∞) by adaptive quadrature.

Examples:
```python
from cerbernetix.bernstein.laplace import forward
from cerbernetix.bernstein.operators import GridFunction, graded_grid

identity = GridFunction.from_function(graded_grid(1.0, 8, 1.0), lambda x: x)
print(forward(identity, 1.0)) # 0.2642411... = 1 - 2/e
```
"""
from __future__ import annotations

import math
from typing import TYPE_CHECKING, Any, Callable

import numpy as np
from scipy import integrate

from cerbernetix.bernstein.errors import DomainError

if TYPE_CHECKING:
    from cerbernetix.bernstein.operators import GridFunction

# Below this product λh the cell moments are computed from their Taylor series.
SERIES_THRESHOLD = 1e-3

# The breakpoints of the quadrature of an evaluator, in units of 1/λ.
QUADRATURE_BREAKPOINTS = (0.0, 1e-6, 1e-4, 1e-2, 1.0, 10.0, 50.0)

# The tolerances of the adaptive quadrature, relative only.
QUAD_OPTIONS = {"epsabs": 0.0, "epsrel": 1e-10, "limit": 200}


def _cell_moments(u: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # ∫₀¹ e^{-ut} dt and ∫₀¹ t e^{-ut} dt
    small = u < SERIES_THRESHOLD
    safe = np.where(small, 1.0, u)

    zeroth = np.where(
        small,
        1.0 - u / 2.0 + u**2 / 6.0 - u**3 / 24.0,
        -np.expm1(-safe) / safe,
    )
    first = np.where(
        small,
        0.5 - u / 3.0 + u**2 / 8.0 - u**3 / 30.0,
        (1.0 - np.exp(-safe) * (1.0 + safe)) / safe**2,
    )
    return zeroth, first


def forward(phi: GridFunction, lam: Any) -> float | np.ndarray:
    """Computes ∫₀ᵀ e^{-λx} φ(x) dx for a grid function.

    The function is linear between the nodes and each cell is integrated exactly.

    Args:
        phi (GridFunction): The grid function, defined at every node.
        lam (Any): The points λ, positive.

    Raises:
        DomainError: If the grid has less than 2 nodes, if a value is undefined, or if a point λ is
        not positive.

    Returns:
        float | np.ndarray: The truncated Laplace transform.

    Examples:
    ```python
    import numpy as np
    from cerbernetix.bernstein.laplace import forward
    from cerbernetix.bernstein.operators import GridFunction, graded_grid

    grid = graded_grid(10.0, 64, 1.0)
    ones = GridFunction(grid, np.ones(len(grid)))
    print(forward(ones, 1.0)) # 0.9999546000702375 = 1 - exp(-10)
    ```
    """
    nodes = np.asarray(phi.grid.nodes, dtype=float)
    values = np.asarray(phi.values, dtype=float)

    if len(nodes) < 2:
        raise DomainError("a Laplace transform needs a grid of at least 2 nodes")
    if not np.all(np.isfinite(values)):
        raise DomainError("a Laplace transform needs a function defined at every node")

    points = np.asarray(lam, dtype=float)
    scalar = points.ndim == 0
    points = np.atleast_1d(points)

    if np.any(~(points > 0.0)):
        raise DomainError("a Laplace transform is taken at positive points only")

    widths = np.diff(nodes)
    u = np.outer(points, widths)
    zeroth, first = _cell_moments(u)
    decay = np.exp(-np.outer(points, nodes[:-1]))

    cells = widths * decay * (values[:-1] * zeroth + np.diff(values) * first)
    result = cells.sum(axis=1)

    if scalar:
        return float(result[0])
    return result


def _transform_at(func: Callable[[Any], Any], lam: float) -> float:
    def integrand(x: float) -> float:
        return math.exp(-lam * x) * float(func(x))

    edges = [breakpoint / lam for breakpoint in QUADRATURE_BREAKPOINTS]
    total = sum(
        integrate.quad(integrand, low, high, **QUAD_OPTIONS)[0]
        for low, high in zip(edges[:-1], edges[1:])
    )
    return total + integrate.quad(integrand, edges[-1], np.inf, **QUAD_OPTIONS)[0]


def transform(func: Callable[[Any], Any], lam: Any) -> float | np.ndarray:
    """Computes the Laplace transform ∫₀^∞ e^{-λx} g(x) dx of an evaluator.

    The half-line is split at multiples of 1/λ and each piece is integrated adaptively.

    Args:
        func (Callable): The evaluator g, locally integrable on (0, ∞).
        lam (Any): The points λ, positive.

    Raises:
        DomainError: If a point λ is not positive.

    Returns:
        float | np.ndarray: The transform.

    Examples:
    ```python
    import numpy as np
    from cerbernetix.bernstein.laplace import transform

    print(transform(lambda x: np.exp(-x), 1.0)) # 0.5
    ```
    """
    points = np.asarray(lam, dtype=float)

    if np.any(~(points > 0.0)):
        raise DomainError("a Laplace transform is taken at positive points only")

    if points.ndim == 0:
        return _transform_at(func, float(points))

    return np.array([_transform_at(func, float(point)) for point in points.ravel()]).reshape(
        points.shape
    )
