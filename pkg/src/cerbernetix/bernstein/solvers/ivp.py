"""The initial value problem of the censored derivative."""
from __future__ import annotations

import logging

from cerbernetix.bernstein.operators import GridFunction, SeriesSolution, censored_integral
from cerbernetix.bernstein.solvers.system import censored_system, check_real
from cerbernetix.bernstein.sonine import SoninePair

logger = logging.getLogger(__name__)


def solve_ivp(pair: SoninePair, g: GridFunction, phi0: float, tol: float) -> SeriesSolution:
    """Solves D_c φ = g with φ(0) = φ₀.

    The censored derivative annihilates constants, so the solution is φ₀ plus the censored
    integral of g.

    Args:
        pair (SoninePair): The Sonine pair.
        g (GridFunction): The right hand side, defined at every node of a grid starting at 0.
        phi0 (float): The initial value.
        tol (float): The tolerance on the tail of the censored integral.

    Raises:
        DomainError: If an argument is invalid.
        MissingBoundaryError: If the grid does not start at 0.
        CensoringConditionError: If the contraction constant is not below 1.
        SeriesDivergenceError: If the censored integral does not converge.

    Returns:
        SeriesSolution: The solution, with residual sup|D_c φ - g| at the interior nodes.

    Examples:
    ```python
    import numpy as np
    from cerbernetix.bernstein.core import BernsteinSpec, Stable
    from cerbernetix.bernstein.operators import GridFunction, graded_grid
    from cerbernetix.bernstein.solvers import solve_ivp
    from cerbernetix.bernstein.sonine import build_pair

    pair = build_pair(BernsteinSpec(Stable(0.5)), 1.0)
    g = GridFunction.from_function(graded_grid(1.0, 256, 2.0), lambda x: np.sqrt(x / np.pi))

    print(solve_ivp(pair, g, 0.0, 1e-8).solution.values[-1]) # close to 1.0
    ```
    """
    phi0 = check_real("the initial value", phi0)
    system = censored_system(pair, g.grid)
    system.check(g)

    series = censored_integral(pair, g, tol)
    values = phi0 + series.solution.values
    residual = system.residual(values, g.values)

    logger.info(
        "Solved the initial value problem: %d terms, residual %g", series.terms_used, residual
    )
    return SeriesSolution(
        g.with_values(values), series.terms_used, series.tail_bound, residual, series.contraction
    )
