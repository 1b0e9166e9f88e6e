"""Grids and functions sampled on grids.

Functions are linear between the nodes. Derivatives are undefined at the first node, so a grid
function records the index of its first defined value.

Examples:
```python
import numpy as np
from cerbernetix.bernstein.operators import GridFunction, graded_grid

grid = graded_grid(1.0, 16, 2.0)
phi = GridFunction.from_function(grid, np.sqrt)

print(grid.nodes[:3])           # [0.         0.00390625 0.015625  ]
print(phi.interpolate(0.5))     # close to 0.7071
```
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Any, Callable

import numpy as np

from cerbernetix.bernstein.core import BernsteinSpec, as_float_array, restore_shape
from cerbernetix.bernstein.errors import DomainError

# The smallest number of cells of a grid.
MIN_CELLS = 8

# The growth of the cells after the support of a support grid.
STRETCH_RATIO = 1.05

# The number of cells of a support grid before the support.
LEAD_CELLS = 8


class ExtensionMode(Enum):
    """How a function on [0, T] is extended to (-∞, 0]."""

    KILLING = "killing"
    STICKY = "sticky"


@dataclass(frozen=True, eq=False)
class Grid:
    """Strictly increasing nodes x₀ < x₁ < ... < x_M with x₀ ≥ 0.

    Grids compare by identity, so they can key the caches of operator weights.

    Attributes:
        nodes (np.ndarray): The nodes, read-only.
        gamma (float): The grading exponent the nodes were built with, as metadata.
    """

    nodes: np.ndarray
    gamma: float = 1.0

    def __post_init__(self) -> None:
        nodes = np.array(self.nodes, dtype=float)

        if nodes.ndim != 1 or len(nodes) < MIN_CELLS + 1:
            raise DomainError(f"a grid needs at least {MIN_CELLS + 1} nodes")
        if not np.all(np.isfinite(nodes)) or nodes[0] < 0.0:
            raise DomainError("the nodes of a grid must be finite and nonnegative")
        if np.any(np.diff(nodes) <= 0.0):
            raise DomainError("the nodes of a grid must be strictly increasing")
        if not self.gamma > 0.0:
            raise DomainError(f"the grading exponent must be positive, got {self.gamma}")

        nodes.flags.writeable = False
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "gamma", float(self.gamma))

    def __len__(self) -> int:
        return len(self.nodes)

    @property
    def cells(self) -> int:
        """The number of cells M."""
        return len(self.nodes) - 1

    @property
    def horizon(self) -> float:
        """The last node T."""
        return float(self.nodes[-1])

    @property
    def steps(self) -> np.ndarray:
        """The widths of the cells."""
        return np.diff(self.nodes)

    @property
    def has_origin(self) -> bool:
        """Tells if the first node is 0."""
        return self.nodes[0] == 0.0

    def index(self, x: float, rtol: float = 1e-12) -> int:
        """Finds the node equal to a point.

        Args:
            x (float): The point.
            rtol (float, optional): The relative tolerance of the match. Defaults to 1e-12.

        Raises:
            DomainError: If no node matches the point.

        Returns:
            int: The index of the node.
        """
        position = int(np.argmin(np.abs(self.nodes - x)))
        if not math.isclose(self.nodes[position], x, rel_tol=rtol, abs_tol=rtol):
            raise DomainError(f"{x} is not a node of the grid")
        return position

    def from_index(self, start: float) -> int:
        """Gives the index of the first node at or after a point.

        Args:
            start (float): The point.

        Returns:
            int: The index, len(grid) if every node is before the point.
        """
        return int(np.searchsorted(self.nodes, start, side="left"))


@dataclass(frozen=True, eq=False)
class GridFunction:
    """A function sampled on a grid, linear between the nodes.

    The values before `defined_from` are missing and stored as NaN.

    Attributes:
        grid (Grid): The grid.
        values (np.ndarray): One value per node, read-only.
        defined_from (int): The index of the first defined value.
    """

    grid: Grid
    values: np.ndarray = field(repr=False)
    defined_from: int = 0

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=float)

        if values.shape != self.grid.nodes.shape:
            raise DomainError(
                f"a grid function needs {len(self.grid)} values, got shape {values.shape}"
            )
        if not 0 <= self.defined_from < len(self.grid):
            raise DomainError(f"the first defined index {self.defined_from} is out of range")

        values[: self.defined_from] = np.nan
        if not np.all(np.isfinite(values[self.defined_from :])):
            raise DomainError("the values of a grid function must be finite")

        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @classmethod
    def from_function(cls, grid: Grid, func: Callable[[Any], Any]) -> GridFunction:
        """Samples a vectorized function at the nodes of a grid.

        Args:
            grid (Grid): The grid.
            func (Callable): The function.

        Returns:
            GridFunction: The sampled function.
        """
        values = np.broadcast_to(np.asarray(func(grid.nodes), dtype=float), grid.nodes.shape)
        return cls(grid, values)

    @classmethod
    def constant(cls, grid: Grid, value: float) -> GridFunction:
        """Builds a constant function.

        Args:
            grid (Grid): The grid.
            value (float): The constant.

        Returns:
            GridFunction: The constant function.
        """
        return cls(grid, np.full(len(grid), float(value)))

    def __len__(self) -> int:
        return len(self.values)

    @property
    def nodes(self) -> np.ndarray:
        """The nodes of the grid."""
        return self.grid.nodes

    @property
    def is_complete(self) -> bool:
        """Tells if the function is defined at every node."""
        return self.defined_from == 0

    def with_values(self, values: Any, defined_from: int = None) -> GridFunction:
        """Builds a function on the same grid.

        Args:
            values (Any): The new values.
            defined_from (int, optional): The first defined index. Defaults to the current one.

        Returns:
            GridFunction: The new function.
        """
        if defined_from is None:
            defined_from = self.defined_from
        return GridFunction(self.grid, values, defined_from)

    def sup_norm(self, start: float = 0.0) -> float:
        """Computes the largest absolute value over the defined nodes at or after a point.

        Args:
            start (float, optional): The first point considered. Defaults to 0.

        Returns:
            float: The sup norm, 0 when no node is considered.
        """
        first = max(self.defined_from, self.grid.from_index(start))
        if first >= len(self):
            return 0.0
        return float(np.max(np.abs(self.values[first:])))

    def interpolate(self, x: Any) -> float | np.ndarray:
        """Evaluates the piecewise linear function at arbitrary points.

        Args:
            x (Any): The points, between the first defined node and T.

        Raises:
            DomainError: If a point is out of range.

        Returns:
            float | np.ndarray: The values.
        """
        points, scalar = as_float_array(x)
        nodes = self.grid.nodes[self.defined_from :]

        if np.any(~(points >= nodes[0])) or np.any(points > nodes[-1]):
            raise DomainError(f"a grid function is only interpolated on [{nodes[0]}, {nodes[-1]}]")

        values = np.interp(points, nodes, self.values[self.defined_from :])
        return restore_shape(np.asarray(values, dtype=float), scalar)


def default_gamma(spec: BernsteinSpec) -> float:
    """Gives the default grading exponent max(2, 1/α_min) of a Bernstein function.

    Args:
        spec (BernsteinSpec): The Bernstein function.

    Returns:
        float: The grading exponent.
    """
    return max(2.0, 1.0 / spec.alpha_min)


def _check_cells(cells: int) -> int:
    if isinstance(cells, bool) or int(cells) != cells or cells < MIN_CELLS:
        raise DomainError(f"a grid needs an integer number of cells of at least {MIN_CELLS}")
    return int(cells)


@lru_cache(maxsize=32)
def graded_grid(horizon: float, cells: int, gamma: float = 2.0) -> Grid:
    """Builds the graded grid x_j = T (j/M)^γ.

    Identical arguments give the same grid object.

    Args:
        horizon (float): The last node T, positive.
        cells (int): The number of cells M, at least 8.
        gamma (float, optional): The grading exponent γ, positive. Defaults to 2.

    Raises:
        DomainError: If an argument is out of range.

    Returns:
        Grid: The graded grid.

    Examples:
    ```python
    from cerbernetix.bernstein.operators import graded_grid

    grid = graded_grid(4.0, 8, 1.0)
    print(grid.nodes) # [0.  0.5 1.  1.5 2.  2.5 3.  3.5 4. ]
    ```
    """
    cells = _check_cells(cells)
    if not 0.0 < horizon < math.inf:
        raise DomainError(f"the horizon must be a finite positive real, got {horizon}")
    if not 0.0 < gamma < math.inf:
        raise DomainError(f"the grading exponent must be a finite positive real, got {gamma}")

    nodes = horizon * (np.arange(cells + 1) / cells) ** gamma
    nodes[-1] = horizon
    return Grid(nodes, gamma)


def support_grid(horizon: float, start: float, stop: float, step: float) -> Grid:
    """Builds a grid fitted to a function supported by [start, stop].

    The grid is uniform with the given step on [start, stop], has a few uniform cells on
    [0, start], and cells growing geometrically from stop to T.

    Args:
        horizon (float): The last node T.
        start (float): The start of the support, positive.
        stop (float): The end of the support, below T.
        step (float): The width of the cells on the support.

    Raises:
        DomainError: If the arguments are inconsistent.

    Returns:
        Grid: The grid.
    """
    if not 0.0 < start < stop < horizon < math.inf:
        raise DomainError("a support grid needs 0 < start < stop < horizon")
    if not 0.0 < step <= stop - start:
        raise DomainError(f"the step must lie in (0, {stop - start}], got {step}")

    lead = np.linspace(0.0, start, LEAD_CELLS + 1)[:-1]
    count = max(1, int(round((stop - start) / step)))
    support = np.linspace(start, stop, count + 1)

    width = (stop - start) / count
    tail = [stop]
    while tail[-1] < horizon:
        width *= STRETCH_RATIO
        tail.append(tail[-1] + width)
    tail[-1] = horizon

    # the last stretched cell may be too thin to keep
    if len(tail) > 2 and tail[-1] - tail[-2] < width / 2.0:
        del tail[-2]

    return Grid(np.concatenate([lead, support, tail[1:]]), 1.0)
