"""Checks of the derivatives against their Laplace symbol and their Yosida approximations.

The Laplace transform of the derivative of the killing extension is f(λ) times the transform of
φ. On a finite horizon the identity only holds up to the truncation at T, so the points λ for
which the neglected tail is not negligible are skipped.

Examples:
```python
import numpy as np
from cerbernetix.bernstein.core import BernsteinSpec, Stable
from cerbernetix.bernstein.operators import GridFunction, support_grid, symbol_check
from cerbernetix.bernstein.sonine import build_pair

spec = BernsteinSpec(Stable(0.5))
pair = build_pair(spec, 20.0)
grid = support_grid(20.0, 0.5, 3.0, 2.5e-3)

def bump(x):
    inside = (x > 0.5) & (x < 3.0)
    return np.where(inside, np.exp(-1.0 / np.where(inside, (x - 0.5) * (3.0 - x), 1.0)), 0.0)

phi = GridFunction.from_function(grid, bump)

print(symbol_check(spec, pair, phi, [2.0, 4.0, 8.0]).error < 1e-3) # True
```
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from cerbernetix.bernstein.core import BernsteinSpec
from cerbernetix.bernstein.errors import DomainError
from cerbernetix.bernstein.laplace import DEFAULT_TERMS, forward
from cerbernetix.bernstein.operators.derivative import rl_derivative
from cerbernetix.bernstein.operators.grid import ExtensionMode, GridFunction
from cerbernetix.bernstein.sonine import SoninePair, yosida_tail

logger = logging.getLogger(__name__)

# The smallest decay λ (T - end of the support) for which the truncation at T is negligible.
TRUNCATION_DECAY = 20.0

# The indexes of the Yosida approximants compared by default.
YOSIDA_INDEXES = (10, 100, 1000)


@dataclass(frozen=True)
class SymbolReport:
    """The outcome of a symbol check.

    Attributes:
        error (float): The largest relative error over the checked points, 0 when none is checked.
        errors (dict[float, float]): The relative error at each checked point.
        skipped (tuple[float, ...]): The points skipped because of the truncation at T.
    """

    error: float
    errors: dict = field(default_factory=dict)
    skipped: tuple = ()


def _support_end(phi: GridFunction) -> float:
    nonzero = np.flatnonzero(phi.values)
    if len(nonzero) == 0:
        return phi.grid.nodes[0]
    return phi.grid.nodes[nonzero[-1]]


def symbol_check(
    spec: BernsteinSpec, pair: SoninePair, phi: GridFunction, lams: Iterable[float]
) -> SymbolReport:
    """Compares the transform of the killing derivative of φ with f(λ) times the transform of φ.

    Args:
        spec (BernsteinSpec): The Bernstein function f.
        pair (SoninePair): The Sonine pair of f.
        phi (GridFunction): A function vanishing at the first two nodes and near T.
        lams (Iterable[float]): The points λ, positive.

    Raises:
        DomainError: If φ does not vanish at the first two nodes or if a point is not positive.

    Returns:
        SymbolReport: The relative errors and the skipped points.
    """
    points = [float(lam) for lam in lams]
    if any(not lam > 0.0 for lam in points):
        raise DomainError("the symbol is checked at positive points only")
    if np.any(phi.values[:2] != 0.0):
        raise DomainError("the symbol check needs a function vanishing near 0")

    derivative = rl_derivative(pair, phi, ExtensionMode.KILLING)
    values = np.array(derivative.values)
    values[: derivative.defined_from] = 0.0
    derivative = derivative.with_values(values, defined_from=0)

    margin = phi.grid.horizon - _support_end(phi)
    errors = {}
    skipped = []

    for lam in points:
        if lam * margin < TRUNCATION_DECAY:
            skipped.append(lam)
            continue

        expected = float(spec(lam)) * forward(phi, lam)
        actual = forward(derivative, lam)
        if expected == 0.0:
            errors[lam] = 0.0 if actual == 0.0 else np.inf
        else:
            errors[lam] = abs(actual - expected) / abs(expected)

    error = max(errors.values(), default=0.0)
    logger.debug("Symbol check: error %g, skipped %s", error, skipped)
    return SymbolReport(error, errors, tuple(skipped))


def yosida_check(
    spec: BernsteinSpec,
    pair: SoninePair,
    phi: GridFunction,
    indexes: Iterable[int] = YOSIDA_INDEXES,
    terms: int = DEFAULT_TERMS,
) -> list[float]:
    """Measures how the killing derivatives of the Yosida approximants f_n approach that of f.

    Args:
        spec (BernsteinSpec): The Bernstein function f.
        pair (SoninePair): The Sonine pair of f.
        phi (GridFunction): The function, on a grid starting at 0.
        indexes (Iterable[int], optional): The indexes n. Defaults to (10, 100, 1000).
        terms (int, optional): The number of Gaver-Stehfest terms. Defaults to 14.

    Returns:
        list[float]: The sup-norm distances at the nodes after the first, one per index.
    """
    reference = rl_derivative(pair, phi, ExtensionMode.KILLING).values[1:]
    distances = []

    for n in indexes:
        tail = yosida_tail(spec, n, pair.horizon, terms)
        approximation = rl_derivative(tail, phi, ExtensionMode.KILLING).values[1:]
        distances.append(float(np.max(np.abs(approximation - reference))))

    logger.debug("Yosida distances %s", distances)
    return distances
