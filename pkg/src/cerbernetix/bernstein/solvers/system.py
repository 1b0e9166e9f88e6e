"""The censored operators of a Sonine pair on a grid, shared by the solvers."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from cerbernetix.bernstein.errors import DomainError, MissingBoundaryError
from cerbernetix.bernstein.operators import (
    DiscreteInverse,
    Grid,
    GridFunction,
    censored_series,
    discrete_inverse,
    effective_contraction,
)
from cerbernetix.bernstein.operators.weights import check_horizon
from cerbernetix.bernstein.sonine import SoninePair, contraction_constant

# Below this relative size, an absolute tolerance is lost in the rounding of the values.
ROUNDING = 4.0 * np.finfo(float).eps


def check_tolerance(tol: float) -> float:
    """Checks a tolerance is a finite positive real.

    Args:
        tol (float): The tolerance.

    Raises:
        DomainError: If the tolerance is not positive.

    Returns:
        float: The tolerance.
    """
    tol = float(tol)
    if not 0.0 < tol < math.inf:
        raise DomainError(f"the tolerance must be positive, got {tol}")
    return tol


def check_real(name: str, value: float) -> float:
    """Checks a parameter is a finite real.

    Args:
        name (str): The name of the parameter, for the error message.
        value (float): The value.

    Raises:
        DomainError: If the value is not finite.

    Returns:
        float: The value.
    """
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be a finite real, got {value}")
    return value


@dataclass(frozen=True, eq=False)
class CensoredSystem:
    """The censored derivative and integral of a pair on a grid.

    Attributes:
        pair (SoninePair): The Sonine pair.
        operators (DiscreteInverse): The discrete integral and kernel operators.
        contraction (float): The certified contraction constant.
    """

    pair: SoninePair
    operators: DiscreteInverse
    contraction: float

    @property
    def grid(self) -> Grid:
        """The grid."""
        return self.operators.grid

    def check(self, phi: GridFunction) -> np.ndarray:
        """Checks a function is complete and sampled on the grid of the system.

        Args:
            phi (GridFunction): The function.

        Raises:
            DomainError: If the function is incomplete or lives on another grid.

        Returns:
            np.ndarray: The values of the function.
        """
        if phi.grid is not self.grid and not np.array_equal(phi.grid.nodes, self.grid.nodes):
            raise DomainError("the data must be sampled on the grid of the solution")
        if not phi.is_complete:
            raise DomainError("the data must be defined at every node")
        return phi.values

    def integral(self, values: np.ndarray, tol: float) -> np.ndarray:
        """Applies the censored integral to values at the first nodes of the grid.

        The tolerance is raised to the rounding level of the values when it is below.

        Args:
            values (np.ndarray): The data.
            tol (float): The absolute tolerance on the tail of the series.

        Returns:
            np.ndarray: The censored integral at the same nodes.
        """
        values = np.asarray(values, dtype=float)
        floor = ROUNDING * float(np.max(np.abs(values), initial=0.0))
        tol = max(tol, floor, np.finfo(float).tiny)
        total, _, _ = censored_series(self.operators, values, tol, self.contraction)
        return total

    def derivative(self, values: np.ndarray) -> np.ndarray:
        """Applies the censored derivative to values at the first nodes of the grid.

        Args:
            values (np.ndarray): The values.

        Returns:
            np.ndarray: The derivative, NaN at x₀.
        """
        return self.operators.weights.censored(values)

    def residual(self, values: np.ndarray, right: np.ndarray) -> float:
        """Measures sup |D_c φ - r| over the interior nodes.

        Args:
            values (np.ndarray): The values of φ.
            right (np.ndarray): The values of the right hand side r.

        Returns:
            float: The residual.
        """
        deviation = self.derivative(values)[1:] - np.asarray(right, dtype=float)[1:]
        return float(np.max(np.abs(deviation), initial=0.0))


def censored_system(pair: SoninePair, grid: Grid) -> CensoredSystem:
    """Builds the censored operators of a pair on a grid.

    Args:
        pair (SoninePair): The Sonine pair.
        grid (Grid): The grid, starting at 0 and inside the horizon of the pair.

    Raises:
        MissingBoundaryError: If the grid does not start at 0.
        DomainError: If the grid exceeds the horizon.
        CensoringConditionError: If the contraction constant is not below 1.

    Returns:
        CensoredSystem: The operators.
    """
    if not grid.has_origin:
        raise MissingBoundaryError("the censored equations need a grid starting at x = 0")
    check_horizon(pair, grid)

    q = effective_contraction(pair, grid, contraction_constant(pair, grid.horizon))
    return CensoredSystem(pair, discrete_inverse(pair, grid), q)
