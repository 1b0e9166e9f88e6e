"""Discrete weights of the Bernstein derivatives and of their inverses.

For a function φ linear between the nodes, the censored derivative at x_i is exactly

    D_c φ(x_i) = Σ_{j<i} W[i, j] (φ(x_i) - φ(x_j)),

where W only depends on the integrated tail ∫₀ˣ μ̄ at the differences x_i - x_j. The derivative
with the killing extension adds φ(x_i) μ̄(x_i). Its matrix is lower triangular with a positive
diagonal and nonpositive entries elsewhere, so its inverse is a positive operator, used as the
discrete Riemann-Liouville integral I_h. The discrete kernel operator K_h then follows from
D_c = D - μ̄ and preserves constants exactly.

Examples:
```python
import numpy as np
from cerbernetix.bernstein.core import BernsteinSpec, Stable
from cerbernetix.bernstein.operators import graded_grid, marchaud_weights
from cerbernetix.bernstein.sonine import build_pair

pair = build_pair(BernsteinSpec(Stable(0.5)), 1.0)
weights = marchaud_weights(pair.levy_tail, graded_grid(1.0, 64, 2.0))

# the censored derivative of x is sqrt(x / pi)
print(weights.censored(weights.grid.nodes)[-1]) # 0.5641895835477...
```
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np
from scipy import linalg

from cerbernetix.bernstein.errors import CensoringConditionError, DomainError, MissingBoundaryError
from cerbernetix.bernstein.operators.grid import Grid
from cerbernetix.bernstein.sonine import LevyTail, SoninePair

logger = logging.getLogger(__name__)


def levy_tail(pair: SoninePair | LevyTail) -> LevyTail:
    """Gives the tail used by the derivative operators.

    Args:
        pair (SoninePair | LevyTail): A Sonine pair or a bare tail.

    Returns:
        LevyTail: The tail.
    """
    if isinstance(pair, SoninePair):
        return pair.levy_tail
    return pair


def check_horizon(pair: SoninePair | LevyTail, grid: Grid) -> None:
    """Checks a grid does not exceed the horizon of a pair.

    Args:
        pair (SoninePair | LevyTail): The pair or the tail.
        grid (Grid): The grid.

    Raises:
        DomainError: If the last node is past the horizon.
    """
    if grid.horizon > pair.horizon * (1.0 + 1e-12):
        raise DomainError(
            f"the grid ends at {grid.horizon}, past the horizon {pair.horizon} of the pair"
        )


@dataclass(frozen=True, eq=False)
class MarchaudWeights:
    """The weights of the censored and killing derivatives on a grid starting at 0.

    Attributes:
        grid (Grid): The grid.
        weights (np.ndarray): The strictly lower triangular matrix W.
        tail (np.ndarray): The values μ̄(x_i), NaN at x₀ = 0.
    """

    grid: Grid
    weights: np.ndarray
    tail: np.ndarray

    def censored(self, values: np.ndarray) -> np.ndarray:
        """Applies the censored derivative.

        Args:
            values (np.ndarray): The values φ(x_j) at the first nodes of the grid, or at all of
            them.

        Returns:
            np.ndarray: The derivative, NaN at x₀.
        """
        values = np.asarray(values, dtype=float)
        size = len(values)
        weights = self.weights[:size, :size]
        result = np.sum(weights * (values[:, None] - values[None, :]), axis=1)
        result[0] = np.nan
        return result

    def killing(self, values: np.ndarray) -> np.ndarray:
        """Applies the derivative of the killing extension.

        Args:
            values (np.ndarray): The values φ(x_j).

        Returns:
            np.ndarray: The derivative, NaN at x₀.
        """
        values = np.asarray(values, dtype=float)
        return self.censored(values) + values * self.tail[: len(values)]

    def sticky(self, values: np.ndarray) -> np.ndarray:
        """Applies the derivative of the sticky extension.

        Args:
            values (np.ndarray): The values φ(x_j).

        Returns:
            np.ndarray: The derivative, NaN at x₀.
        """
        values = np.asarray(values, dtype=float)
        return self.censored(values) + (values - values[0]) * self.tail[: len(values)]

    @cached_property
    def killing_matrix(self) -> np.ndarray:
        """The matrix of the killing derivative, rows 1 to M."""
        matrix = -self.weights[1:, :]
        diagonal = np.arange(matrix.shape[0])
        matrix[diagonal, diagonal + 1] = self.weights[1:].sum(axis=1) + self.tail[1:]
        return matrix


@lru_cache(maxsize=8)
def marchaud_weights(tail: LevyTail, grid: Grid) -> MarchaudWeights:
    """Computes the weights of the derivatives on a grid.

    Each cell contributes the exact integral of its linear piece against the jump measure. The
    near cell, which holds the singularity, reduces to the closed form
    ∫₀ʰ s m(s) ds = ∫₀ʰ μ̄ - h μ̄(h).

    Args:
        tail (LevyTail): The tail of the Lévy measure.
        grid (Grid): The grid, starting at 0.

    Raises:
        MissingBoundaryError: If the grid does not start at 0.
        DomainError: If the grid exceeds the horizon.

    Returns:
        MarchaudWeights: The weights.
    """
    if not grid.has_origin:
        raise MissingBoundaryError("the derivative weights need a grid starting at 0")
    check_horizon(tail, grid)

    nodes = grid.nodes
    diff = nodes[:, None] - nodes[None, :]
    lower = np.tril(np.ones(diff.shape, dtype=bool), k=-1)

    integral = np.where(lower, tail.mu_bar_integral(np.where(lower, diff, 0.0)), 0.0)
    values = np.where(lower, tail.mu_bar(np.where(lower, diff, 1.0)), 0.0)

    # averages of μ̄ over the cells (x_i - x_{j+1}, x_i - x_j)
    averages = (integral[:, :-1] - integral[:, 1:]) / grid.steps

    weights = np.zeros(diff.shape)
    weights[:, 0] = averages[:, 0] - values[:, 0]
    weights[:, 1:-1] = averages[:, 1:] - averages[:, :-1]
    weights = np.where(lower, weights, 0.0)

    node_tail = values[:, 0].copy()
    node_tail[0] = np.nan

    logger.debug("Computed the derivative weights on %d cells", grid.cells)
    return MarchaudWeights(grid, weights, node_tail)


@dataclass(frozen=True, eq=False)
class DiscreteInverse:
    """The discrete integral I_h, inverse of the killing derivative, and the kernel operator K_h.

    Attributes:
        weights (MarchaudWeights): The derivative weights.
    """

    weights: MarchaudWeights

    @property
    def grid(self) -> Grid:
        """The grid."""
        return self.weights.grid

    def integral(self, values: np.ndarray) -> np.ndarray:
        """Applies I_h, the solution ψ of D ψ = g with ψ(0) = 0.

        Args:
            values (np.ndarray): The values g(x_j) at the first nodes, or at all of them; g(x₀) is
            not used.

        Returns:
            np.ndarray: The values ψ(x_j) at the same nodes.
        """
        values = np.asarray(values, dtype=float)
        size = len(values)
        result = np.zeros(size)
        result[1:] = linalg.solve_triangular(
            self.weights.killing_matrix[: size - 1, 1:size], values[1:], lower=True
        )
        return result

    def kernel(self, values: np.ndarray) -> np.ndarray:
        """Applies K_h, the discrete I(μ̄ φ) which keeps φ(0) and maps constants to themselves.

        Args:
            values (np.ndarray): The values φ(x_j) at the first nodes, or at all of them.

        Returns:
            np.ndarray: The values K_h φ(x_j) at the same nodes.
        """
        values = np.asarray(values, dtype=float)
        size = len(values)
        matrix = self.weights.killing_matrix[: size - 1, :size]
        right = self.weights.tail[1:size] * values[1:] - matrix[:, 0] * values[0]

        result = np.empty(size)
        result[0] = values[0]
        result[1:] = linalg.solve_triangular(matrix[:, 1:], right, lower=True)
        return result

    @cached_property
    def potential(self) -> np.ndarray:
        """The discrete potential K_h = I_h 1."""
        return self.integral(np.ones(len(self.grid)))

    @cached_property
    def contraction(self) -> float:
        """The contraction constant max μ̄ K_h of K_h in the norm weighted by K_h."""
        return float(np.max(self.weights.tail[1:] * self.potential[1:]))


@lru_cache(maxsize=8)
def discrete_inverse(pair: SoninePair, grid: Grid) -> DiscreteInverse:
    """Builds the discrete integral and kernel operators of a pair on a grid.

    Args:
        pair (SoninePair): The Sonine pair.
        grid (Grid): The grid, starting at 0.

    Raises:
        MissingBoundaryError: If the grid does not start at 0.
        DomainError: If the grid exceeds the horizon.

    Returns:
        DiscreteInverse: The operators.
    """
    return DiscreteInverse(marchaud_weights(pair.levy_tail, grid))


def effective_contraction(pair: SoninePair, grid: Grid, q: float) -> float:
    """Gives the contraction constant certified on a grid, the larger of q and the discrete one.

    Args:
        pair (SoninePair): The Sonine pair.
        grid (Grid): The grid.
        q (float): The contraction constant of the pair.

    Raises:
        CensoringConditionError: If the discrete constant is not below 1.

    Returns:
        float: The certified constant.
    """
    discrete = discrete_inverse(pair, grid).contraction
    if discrete >= 1.0:
        raise CensoringConditionError(
            f"the discrete contraction constant {discrete} is not below 1, refine the grid"
        )
    return max(q, discrete)
