"""The resolvent equation D_c φ = λφ + g with φ(0) = φ₀.

The solution is the sum of two series of iterated censored integrals,

    φ = φ₀ Σᵢ λⁱ I_cⁱ 1 + Σᵢ λⁱ I_cⁱ⁺¹ g,

which converge for every λ. Their first terms may grow before the smoothing of I_c takes over,
so a series is only stopped once its terms have decreased three times in a row and the last one
is below the tolerance. The terms of the homogeneous series sum up in absolute value to about
𝔼 e^{|λ|τ∞}, which bounds the loss of accuracy by cancellation when λ < 0.
"""
from __future__ import annotations

import logging
import math

import numpy as np

from cerbernetix.bernstein.errors import SeriesDivergenceError
from cerbernetix.bernstein.operators import GridFunction, SeriesSolution
from cerbernetix.bernstein.solvers.ivp import solve_ivp
from cerbernetix.bernstein.solvers.system import (
    CensoredSystem,
    censored_system,
    check_real,
    check_tolerance,
)
from cerbernetix.bernstein.sonine import SoninePair

logger = logging.getLogger(__name__)

# The largest number of terms of a resolvent series.
MAX_ITERATIONS = 200

# The number of consecutive decreasing terms needed to trust the tail.
DECAY_RUN = 3

# The share of the tolerance left to the censored integrals inside the series.
INNER_SHARE = 0.25


def resolvent_series(
    system: CensoredSystem, first: np.ndarray, lam: float, tol: float
) -> tuple[np.ndarray, int, float]:
    """Sums Σᵢ λⁱ I_cⁱ u on the first nodes of the grid.

    The i-th censored integral is computed with the tolerance tol / (4 (i+1)(i+2) max(1, |λ|)ⁱ), so
    that the residuals it leaves add up to at most tol / 4 once multiplied by λⁱ.

    Args:
        system (CensoredSystem): The censored operators.
        first (np.ndarray): The first term u.
        lam (float): The factor λ.
        tol (float): The tolerance on the last added term, multiplied by max(1, |λ|).

    Raises:
        SeriesDivergenceError: If the terms do not decay within 200 iterations.

    Returns:
        tuple[np.ndarray, int, float]: The partial sum, the index of the last term and the bound
        max(1, |λ|) times the norm of the last term.
    """
    first = np.asarray(first, dtype=float)
    total = first.copy()
    norm = float(np.max(np.abs(first), initial=0.0))
    if norm == 0.0 or lam == 0.0:
        return total, 0, 0.0

    scale = max(1.0, abs(lam))
    peak = norm
    iterate = first
    decreasing = 0

    for i in range(1, MAX_ITERATIONS + 1):
        inner = INNER_SHARE * tol / ((i + 1) * (i + 2)) * math.exp(-i * math.log(scale))
        iterate = system.integral(iterate, inner)
        term = lam**i * iterate
        total += term

        previous, norm = norm, float(np.max(np.abs(term)))
        peak = max(peak, norm)
        decreasing = decreasing + 1 if norm < previous else 0

        if norm == 0.0 or (decreasing >= DECAY_RUN and scale * norm < tol):
            if peak * np.finfo(float).eps > tol:
                logger.warning(
                    "The resolvent series at λ = %g has terms up to %g, its sum may lose "
                    "accuracy by cancellation",
                    lam,
                    peak,
                )
            logger.debug("Resolvent series at λ = %g: %d terms, peak term %g", lam, i, peak)
            return total, i, scale * norm

    raise SeriesDivergenceError(
        f"the resolvent series at λ = {lam} shows no certified decay within {MAX_ITERATIONS} terms"
    )


def solve_resolvent(
    pair: SoninePair, lam: float, g: GridFunction, phi0: float, tol: float
) -> SeriesSolution:
    """Solves D_c φ = λφ + g with φ(0) = φ₀.

    The homogeneous and the inhomogeneous series are truncated independently, so the solution
    is linear in (g, φ₀) up to rounding. λ = 0 is the initial value problem.

    Args:
        pair (SoninePair): The Sonine pair.
        lam (float): The factor λ, a finite real.
        g (GridFunction): The right hand side, defined at every node of a grid starting at 0.
        phi0 (float): The initial value.
        tol (float): The tolerance on the last added terms.

    Raises:
        DomainError: If an argument is invalid.
        MissingBoundaryError: If the grid does not start at 0.
        CensoringConditionError: If the contraction constant is not below 1.
        SeriesDivergenceError: If a series does not converge.

    Returns:
        SeriesSolution: The solution, with residual sup|D_c φ - λφ - g| at the interior nodes.

    Examples:
    ```python
    from cerbernetix.bernstein.core import BernsteinSpec, Stable
    from cerbernetix.bernstein.operators import GridFunction, graded_grid
    from cerbernetix.bernstein.solvers import solve_resolvent
    from cerbernetix.bernstein.sonine import build_pair

    pair = build_pair(BernsteinSpec(Stable(0.5)), 1.0)
    zeros = GridFunction.constant(graded_grid(1.0, 128, 2.0), 0.0)

    # the Laplace transform of the lifetime at 2
    print(solve_resolvent(pair, -2.0, zeros, 1.0, 1e-8).solution.values[-1])
    ```
    """
    lam = check_real("λ", lam)
    phi0 = check_real("the initial value", phi0)
    tol = check_tolerance(tol)

    if lam == 0.0:
        return solve_ivp(pair, g, phi0, tol)

    system = censored_system(pair, g.grid)
    data = system.check(g)
    size = len(data)

    homogeneous, homogeneous_terms, homogeneous_bound = resolvent_series(
        system, np.full(size, phi0), lam, tol
    )

    source = system.integral(data, INNER_SHARE * tol)
    inhomogeneous, inhomogeneous_terms, inhomogeneous_bound = resolvent_series(
        system, source, lam, tol
    )

    values = homogeneous + inhomogeneous
    residual = system.residual(values, lam * values + data)

    logger.info("Solved the resolvent equation at λ = %g: residual %g", lam, residual)
    return SeriesSolution(
        g.with_values(values),
        max(homogeneous_terms, inhomogeneous_terms),
        max(homogeneous_bound, inhomogeneous_bound),
        residual,
        system.contraction,
    )
