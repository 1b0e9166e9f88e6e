"""Bernstein derivatives of grid functions.

The derivatives are exact for the piecewise linear interpolant of the samples. They are not
defined at the first node, where the tail μ̄ blows up, so the results start at index 1.

Examples:
```python
import numpy as np
from cerbernetix.bernstein.core import BernsteinSpec, Stable
from cerbernetix.bernstein.operators import (
    ExtensionMode,
    GridFunction,
    censored_derivative,
    graded_grid,
    rl_derivative,
)
from cerbernetix.bernstein.sonine import build_pair

pair = build_pair(BernsteinSpec(Stable(0.5)), 4.0)
identity = GridFunction.from_function(graded_grid(4.0, 64, 2.0), lambda x: x)

print(rl_derivative(pair, identity, ExtensionMode.KILLING).values[-1])  # 2.2567583341910...
print(censored_derivative(pair, identity).values[-1])                  # 1.1283791670955...
```
"""
from __future__ import annotations

import numpy as np

from cerbernetix.bernstein.errors import DomainError, MissingBoundaryError
from cerbernetix.bernstein.operators.grid import ExtensionMode, Grid, GridFunction
from cerbernetix.bernstein.operators.weights import levy_tail, marchaud_weights
from cerbernetix.bernstein.sonine import LevyTail, SoninePair


def _check_complete(phi: GridFunction) -> None:
    if not phi.is_complete:
        raise DomainError("a derivative needs a function defined at every node")


def rl_derivative(
    pair: SoninePair | LevyTail, phi: GridFunction, mode: ExtensionMode
) -> GridFunction:
    """Computes the Bernstein derivative of the killing or of the sticky extension of φ.

    With the killing extension the derivative is ∫_{(0,x]} (φ(x) - φ(x-s)) μ(ds) + φ(x) μ̄(x),
    the Riemann-Liouville form d/dx ∫₀ˣ φ(x - t) μ̄(t) dt. The sticky extension removes
    φ(0+) μ̄(x), which gives the Caputo form.

    A killing extension on a grid starting after 0 is linear between (0, 0) and the first node.

    Args:
        pair (SoninePair | LevyTail): The Sonine pair, or the tail of its Lévy measure.
        phi (GridFunction): The function, defined at every node.
        mode (ExtensionMode): The extension of φ to (-∞, 0].

    Raises:
        DomainError: If φ is incomplete or if the grid exceeds the horizon.
        MissingBoundaryError: If the sticky extension is requested on a grid without x = 0.

    Returns:
        GridFunction: The derivative, defined from index 1, or from index 0 for a killing
        extension on a grid starting after 0.
    """
    _check_complete(phi)
    tail = levy_tail(pair)

    if not phi.grid.has_origin:
        if mode is ExtensionMode.STICKY:
            raise MissingBoundaryError("the sticky extension needs the value at x = 0")

        extended = Grid(np.concatenate([[0.0], phi.grid.nodes]), phi.grid.gamma)
        weights = marchaud_weights(tail, extended)
        values = weights.killing(np.concatenate([[0.0], phi.values]))
        return GridFunction(phi.grid, values[1:])

    weights = marchaud_weights(tail, phi.grid)
    if mode is ExtensionMode.KILLING:
        values = weights.killing(phi.values)
    else:
        values = weights.sticky(phi.values)

    return GridFunction(phi.grid, values, defined_from=1)


def censored_derivative(pair: SoninePair | LevyTail, phi: GridFunction) -> GridFunction:
    """Computes the censored Bernstein derivative ∫_{(0,x]} (φ(x) - φ(x-s)) μ(ds).

    The jump measure is restricted to [0, x], so constants are mapped exactly to 0.

    Args:
        pair (SoninePair | LevyTail): The Sonine pair, or the tail of its Lévy measure.
        phi (GridFunction): The function, defined at every node.

    Raises:
        DomainError: If φ is incomplete or if the grid exceeds the horizon.
        MissingBoundaryError: If the grid does not start at 0.

    Returns:
        GridFunction: The derivative, defined from index 1.
    """
    _check_complete(phi)
    weights = marchaud_weights(levy_tail(pair), phi.grid)
    return GridFunction(phi.grid, weights.censored(phi.values), defined_from=1)
