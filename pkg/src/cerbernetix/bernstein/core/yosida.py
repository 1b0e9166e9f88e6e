"""Yosida approximants f_n = n f / (n + f) of a Bernstein function.

Each f_n is a bounded Bernstein function below min(n, f), increasing to f as n grows.

Examples:
```python
from cerbernetix.bernstein.core import BernsteinSpec, Stable, yosida_approx

f_1 = yosida_approx(BernsteinSpec(Stable(0.5)), 1)
print(f_1(1.0)) # 0.5
```
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from cerbernetix.bernstein.core.evaluators import as_float_array, restore_shape
from cerbernetix.bernstein.core.families import BernsteinSpec
from cerbernetix.bernstein.errors import DomainError


@dataclass(frozen=True)
class YosidaApproximant:
    """The evaluator λ ↦ n f(λ) / (n + f(λ)).

    Attributes:
        spec (BernsteinSpec): The approximated Bernstein function.
        n (int): The index of the approximant, positive.
    """

    spec: BernsteinSpec
    n: int

    def __call__(self, lam: Any) -> float | np.ndarray:
        points, scalar = as_float_array(lam)
        values = np.asarray(self.spec(points), dtype=float)
        return restore_shape(self.n * values / (self.n + values), scalar)


def yosida_approx(spec: BernsteinSpec, n: int) -> YosidaApproximant:
    """Builds the n-th Yosida approximant of a Bernstein function.

    Args:
        spec (BernsteinSpec): The Bernstein function.
        n (int): The index, a positive integer.

    Raises:
        DomainError: If n is not a positive integer.

    Returns:
        YosidaApproximant: The evaluator of f_n.
    """
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise DomainError(f"the index of a Yosida approximant must be a positive integer, got {n}")

    return YosidaApproximant(spec, int(n))
