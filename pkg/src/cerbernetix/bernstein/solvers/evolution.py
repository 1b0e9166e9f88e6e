"""The Cauchy problem ∂ₜu = -D_c u, u(0, ·) = g₀, by implicit Euler steps."""
from __future__ import annotations

import logging
import math

from cerbernetix.bernstein.errors import DomainError
from cerbernetix.bernstein.operators import GridFunction
from cerbernetix.bernstein.solvers.resolvent import solve_resolvent
from cerbernetix.bernstein.sonine import SoninePair

logger = logging.getLogger(__name__)


def evolve_cauchy(
    pair: SoninePair, g0: GridFunction, dt: float, steps: int, tol: float = 1e-8
) -> list[GridFunction]:
    """Evolves g₀ by the semigroup of the censored process, u(t, x) = 𝔼ˣ g₀(S^c_t).

    Each step solves the resolvent equation D_c φⁿ⁺¹ = λφⁿ⁺¹ + φⁿ/Δt with λ = -1/Δt. The censored
    derivative vanishes at 0, so every φⁿ keeps the initial value g₀(0). The resolvent series
    lose accuracy by cancellation when Δt is small compared to the lifetime from T.

    Args:
        pair (SoninePair): The Sonine pair.
        g0 (GridFunction): The initial function, defined at every node of a grid starting at 0.
        dt (float): The time step Δt > 0.
        steps (int): The number of steps, nonnegative.
        tol (float, optional): The tolerance of each resolvent solve. Defaults to 1e-8.

    Raises:
        DomainError: If an argument is invalid.
        CensoringConditionError: If the contraction constant is not below 1.
        SeriesDivergenceError: If a resolvent series does not converge.

    Returns:
        list[GridFunction]: The trajectory φ⁰ = g₀, φ¹, ..., φ^steps.

    Examples:
    ```python
    from cerbernetix.bernstein.core import BernsteinSpec, Stable
    from cerbernetix.bernstein.operators import GridFunction, graded_grid
    from cerbernetix.bernstein.solvers import evolve_cauchy
    from cerbernetix.bernstein.sonine import build_pair

    pair = build_pair(BernsteinSpec(Stable(0.5)), 1.0)
    g0 = GridFunction.from_function(graded_grid(1.0, 64, 2.0), lambda x: x)

    for phi in evolve_cauchy(pair, g0, 0.5, 4):
        print(phi.values[-1]) # decreasing
    ```
    """
    dt = float(dt)
    if not 0.0 < dt < math.inf:
        raise DomainError(f"the time step must be positive, got {dt}")
    if isinstance(steps, bool) or int(steps) != steps or steps < 0:
        raise DomainError(f"the number of steps must be a nonnegative integer, got {steps}")
    if not g0.is_complete:
        raise DomainError("the initial function must be defined at every node")

    lam = -1.0 / dt
    start = float(g0.values[0])
    trajectory = [g0]

    for step in range(int(steps)):
        previous = trajectory[-1]
        result = solve_resolvent(pair, lam, previous.with_values(previous.values / dt), start, tol)
        trajectory.append(result.solution)
        logger.debug("Cauchy step %d: residual %g", step + 1, result.residual)

    logger.info("Evolved the Cauchy problem over %d steps of %g", steps, dt)
    return trajectory
