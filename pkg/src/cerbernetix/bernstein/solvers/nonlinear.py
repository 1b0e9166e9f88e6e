"""The nonlinear equation D_c φ = G(φ) + h with φ(0) = φ₀.

The fixed-point map Sφ = φ₀ + I_c[G∘φ + h] is a contraction on a window [0, ε] as soon as
L K(ε) / (1 - q) < 1, where L is a Lipschitz bound of G. The censored operators are causal, so the
solution is built window after window, each one iterated with the values before it frozen.
"""
from __future__ import annotations

import logging
import math
from typing import Callable

import numpy as np
from scipy import optimize

from cerbernetix.bernstein.errors import DomainError, SeriesDivergenceError
from cerbernetix.bernstein.operators import GridFunction, SeriesSolution
from cerbernetix.bernstein.solvers.system import (
    CensoredSystem,
    censored_system,
    check_real,
    check_tolerance,
)
from cerbernetix.bernstein.sonine import SoninePair

logger = logging.getLogger(__name__)

# The window length satisfies L K(ε) / (1 - q) ≤ WINDOW_FACTOR.
WINDOW_FACTOR = 0.5

# The smallest window length, relative to the horizon.
MIN_WINDOW = 1e-12

# The largest number of fixed-point iterations on a window.
MAX_ITERATIONS = 500

# The share of the tolerance used by the fixed-point corrections and the censored integrals.
INNER_SHARE = 0.1


def window_length(system: CensoredSystem, lipschitz: float) -> float:
    """Finds the largest ε ≤ T with L K(ε) / (1 - q) ≤ 1/2.

    Args:
        system (CensoredSystem): The censored operators.
        lipschitz (float): The Lipschitz bound L.

    Raises:
        SeriesDivergenceError: If no window length is found above the smallest one.

    Returns:
        float: The window length.
    """
    horizon = system.grid.horizon
    ratio = lipschitz / (1.0 - system.contraction)

    def excess(width: float) -> float:
        return ratio * float(system.pair.K(width)) - WINDOW_FACTOR

    if excess(horizon) <= 0.0:
        return horizon

    low = MIN_WINDOW * horizon
    if excess(low) >= 0.0:
        raise SeriesDivergenceError(
            f"no window keeps the fixed-point map contractive for the Lipschitz bound {lipschitz}"
        )
    return optimize.brentq(excess, low, horizon)


def _apply(gfunc: Callable, values: np.ndarray) -> np.ndarray:
    result = np.asarray(gfunc(values), dtype=float)
    return np.broadcast_to(result, values.shape)


def solve_nonlinear(
    pair: SoninePair,
    gfunc: Callable,
    lipschitz: float,
    h: GridFunction,
    phi0: float,
    tol: float,
) -> SeriesSolution:
    """Solves D_c φ = G(φ) + h with φ(0) = φ₀ by fixed-point iterations on successive windows.

    A window is iterated until L times the last correction is below tol / 10. When the
    corrections stop decreasing, the window is halved and iterated again.

    Args:
        pair (SoninePair): The Sonine pair.
        gfunc (Callable): The nonlinearity G, applied elementwise to arrays.
        lipschitz (float): A Lipschitz bound L ≥ 0 of G on the range of the solution.
        h (GridFunction): The source, defined at every node of a grid starting at 0.
        phi0 (float): The initial value.
        tol (float): The tolerance of the iterations.

    Raises:
        DomainError: If an argument is invalid.
        MissingBoundaryError: If the grid does not start at 0.
        CensoringConditionError: If the contraction constant is not below 1.
        SeriesDivergenceError: If the window length underflows.

    Returns:
        SeriesSolution: The solution, with the total number of iterations, the largest final
        correction and the residual sup|D_c φ - G(φ) - h| at the interior nodes.

    Examples:
    ```python
    from cerbernetix.bernstein.core import BernsteinSpec, Stable
    from cerbernetix.bernstein.operators import GridFunction, graded_grid
    from cerbernetix.bernstein.solvers import solve_nonlinear
    from cerbernetix.bernstein.sonine import build_pair

    pair = build_pair(BernsteinSpec(Stable(0.5)), 1.0)
    ones = GridFunction.constant(graded_grid(1.0, 128, 2.0), 1.0)

    solution = solve_nonlinear(pair, lambda u: -(u**2), 2.0, ones, 0.0, 1e-8)
    print(solution.residual) # below 1e-7
    ```
    """
    lipschitz = check_real("the Lipschitz bound", lipschitz)
    if lipschitz < 0.0:
        raise DomainError(f"the Lipschitz bound must be nonnegative, got {lipschitz}")
    phi0 = check_real("the initial value", phi0)
    tol = check_tolerance(tol)

    system = censored_system(pair, h.grid)
    source = system.check(h)
    nodes = system.grid.nodes
    horizon = system.grid.horizon

    correction_tol = INNER_SHARE * tol / max(1.0, lipschitz)
    width = window_length(system, lipschitz)

    values = np.full(len(nodes), phi0)
    last = 0
    iterations = 0
    largest = 0.0

    while last < len(nodes) - 1:
        stop = max(last + 1, int(np.searchsorted(nodes, nodes[last] + width, side="right")) - 1)
        window = slice(last + 1, stop + 1)
        current = values[: stop + 1].copy()
        current[window] = current[last]

        previous = math.inf
        converged = False
        for _ in range(MAX_ITERATIONS):
            iterations += 1
            data = _apply(gfunc, current) + source[: stop + 1]
            update = phi0 + system.integral(data, INNER_SHARE * tol)

            change = float(np.max(np.abs(update[window] - current[window])))
            current[window] = update[window]

            if change <= correction_tol:
                converged = True
                break
            if not math.isfinite(change) or change >= previous:
                break
            previous = change

        if not converged:
            width /= 2.0
            if width < MIN_WINDOW * horizon:
                raise SeriesDivergenceError("the window length of the fixed-point map underflows")
            logger.debug("Halved the window at x = %g to %g", nodes[last], width)
            continue

        values[window] = current[window]
        largest = max(largest, change)
        last = stop

    data = _apply(gfunc, values) + source
    residual = system.residual(values, data)

    logger.info("Solved the nonlinear equation: %d iterations, residual %g", iterations, residual)
    return SeriesSolution(h.with_values(values), iterations, largest, residual, system.contraction)
